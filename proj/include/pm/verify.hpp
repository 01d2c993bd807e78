#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pm/complex.hpp"
#include "pm/graph.hpp"

namespace pm {

/// Verdicts for the structural class hierarchy, with a witness face for the
/// first failed predicate.
struct ClassReport {
  int n = 0;
  int dim = -1;
  long long euler = 0;
  bool is_pure = false;
  bool is_weak_pm = false;               // every (d-1)-face in exactly two facets
  bool is_weak_pm_with_boundary = false; // at most two, at least one in exactly one
  bool has_boundary = false;
  bool is_strongly_connected = false;
  bool is_pseudomanifold = false;        // weak pm + strongly connected
  bool is_normal = false;                // weak pm + links of dim <= d-2 faces connected
  bool is_closed_2manifold = false;
  std::optional<bool> is_orientable;     // dimension 2 only
  std::optional<std::vector<std::string>> witness;  // tokens of the failing face

  std::string to_text() const;  // stable key=value lines
};

ClassReport classify(const Complex& c);

bool is_pure(const Complex& c);

/// Status of the weak-pseudomanifold conditions on a pure complex.
struct WeakPmStatus {
  bool pure = false;
  bool closed = false;         // every (d-1)-face in exactly two facets
  bool with_boundary = false;  // every (d-1)-face in at most two, one in exactly one
  std::optional<Bits> witness;  // (d-1)-face in > 2 facets (or wrong-dim maximal face)
};
WeakPmStatus weak_pm_status(const Complex& c);

bool is_weak_pm(const Complex& c);
bool is_weak_pm_with_boundary(const Complex& c);

/// Pure (d-1)-complex on the (d-1)-faces lying in exactly one facet.
Complex boundary(const Complex& c);

/// Vertices are facets; adjacency is sharing a (d-1)-face.
Graph facet_graph(const Complex& c);
bool is_strongly_connected(const Complex& c);

bool is_normal_pm(const Complex& c);

/// Graph on the edges of c having exactly one end in A; two such edges are
/// adjacent when their union is a 2-face. Requires c a normal pseudomanifold
/// of dimension d >= 2 and induced(A) a (d-1)-dimensional normal
/// pseudomanifold.
Graph crossing_graph(const Complex& c, const Bits& a);

/// True when the crossing graph has exactly two connected components. This is
/// the hypothesis the handle-deletion construction consumes; the topological
/// notion is not decided here.
bool is_operationally_two_sided(const Complex& c, const Bits& a);

/// First (d+1)-set, in lexicographic order over edge-graph cliques, that is
/// not a face while all its proper subsets are faces. Such a set induces the
/// boundary complex of a d-simplex.
std::optional<Bits> find_induced_standard_sphere(const Complex& c);

bool is_closed_2manifold(const Complex& c);
/// Coherent facet orientation propagation over the facet graph; dimension 2.
bool is_orientable_2manifold(const Complex& c);

}  // namespace pm
