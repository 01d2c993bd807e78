#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pm/complex.hpp"
#include "pm/face_vector.hpp"

namespace pm {

/// One subdivision step: an explicit facet, or a pseudorandom pick under the
/// script's seed.
struct StackStep {
  std::optional<std::vector<std::string>> facet;  // nullopt = random
  std::string new_token;
};

/// Recipe producing a stacked d-sphere from the standard one by repeated
/// facet subdivision.
///
/// Text form: header "stack d=<d> seed=<seed|none>", then one line per step,
/// either "facet <tokens...> new <token>" or "random new <token>".
struct StackScript {
  int d = 2;
  std::optional<uint64_t> seed;
  std::vector<StackStep> steps;

  static StackScript parse(const std::string& text);
  std::string to_text() const;

  /// n random steps with fresh numeric tokens following the standard sphere's.
  static StackScript random(int d, int steps, uint64_t seed);
};

/// Runs the script from the standard d-sphere on tokens 1..d+2.
Complex generate_stacked(const StackScript& script);

/// Closed-form face counts of an n-vertex stacked d-sphere.
FaceVector stacked_fvector(int d, long long n);

struct StackedCertificate {
  bool stacked = false;
  /// Tokens collapsed on the way down to the standard sphere, in order.
  std::vector<std::string> trace;
};

/// Recognizer by greedy collapsing: repeatedly remove the smallest-index
/// vertex of degree d+1 whose link spans a non-face. The verdict does not
/// depend on the collapse order; the trace does.
StackedCertificate is_stacked(const Complex& c);

/// Complex whose faces are all the cliques of the edge graph (facets are the
/// maximal cliques). For a stacked d-sphere, d >= 2, this is the
/// (d+1)-ball it bounds.
Complex clique_closure(const Complex& c);

/// Second recognizer: the boundary of the clique closure equals the complex.
/// Cross-validated by the (d+2)-clique count, which is n-d-1 for an n-vertex
/// stacked d-sphere.
bool is_one_stacked_via_cliques(const Complex& c);

/// Antistar of a vertex in a stacked sphere, with the facet-count certificate
/// n_boundary + (m_interior - 1) * d checked.
Complex stacked_ball_antistar(const Complex& c, int v);

}  // namespace pm
