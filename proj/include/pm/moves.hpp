#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pm/complex.hpp"

namespace pm {

/// Pairing between two disjoint facets, by vertex token.
struct Bijection {
  std::vector<std::pair<std::string, std::string>> pairs;

  std::vector<std::string> domain_tokens() const;
  std::vector<std::string> range_tokens() const;
};

/// Replayable description of one surgery step; to_text() gives the one-line
/// s-expression wire form consumed by replay files.
struct SurgeryRecord {
  enum class Kind { Star, Collapse, Gbm, HandleAdd, HandleDelete, ConnectedSum };

  Kind kind;
  std::vector<std::string> facet;                    // star: subdivided facet
  std::string vertex;                                // star: new token; collapse: removed
  std::vector<std::pair<std::string, std::string>> map;  // handles/sums: pairing
  std::vector<std::string> set;                      // handle delete: sphere vertex set
  std::vector<std::vector<std::string>> ball1, ball2;  // gbm: facet lists
  std::vector<std::vector<std::string>> facets2;     // connected sum: second summand
  std::vector<std::string> facet2;                   // connected sum: facet of summand
  bool ball_status_asserted = false;                 // gbm inputs are user-asserted balls

  std::string to_text() const;
  static SurgeryRecord from_text(const std::string& line);

  /// Applies this record to `input` (self-contained for every kind).
  Complex apply(const Complex& input) const;
  /// Record of the inverse move where one exists.
  SurgeryRecord inverse() const;
};

/// Subdivides the facet sigma with the fresh vertex v (the new vertex ends up
/// with degree d+1).
Complex star_vertex(const Complex& c, const Bits& sigma, const std::string& v,
                    SurgeryRecord* rec = nullptr);

/// Removes a degree-(d+1) vertex whose link spans a non-face, restoring that
/// set as a facet. Inverse of star_vertex.
Complex collapse_vertex(const Complex& c, int v, SurgeryRecord* rec = nullptr);

/// True when every paired pair of vertices is at edge-graph distance >= 3
/// (unreachable counts as infinite).
bool is_admissible(const Complex& c, const Bijection& psi);

/// Removes the two paired facets and identifies each domain vertex with its
/// image; the surviving token is the domain token.
Complex handle_add(const Complex& c, const Bijection& psi, SurgeryRecord* rec = nullptr);

/// Handle addition across the disjoint union of two complexes.
Complex connected_sum(const Complex& x1, const Bits& sigma1, const Complex& x2,
                      const Bits& sigma2,
                      const std::vector<std::pair<std::string, std::string>>& pairing,
                      SurgeryRecord* rec = nullptr);

/// Cuts the host along the induced standard (d-1)-sphere on A, splitting each
/// crossing side onto fresh vertex sets W+ / W- (tokens suffixed "+"/"-") and
/// capping both with a facet. Inverse of handle_add.
Complex handle_delete(const Complex& c, const Bits& a, SurgeryRecord* rec = nullptr);

/// Replaces the subcomplex B1 of c by B2 along their common boundary. B1 and
/// B2 are verified to be pure weak pseudomanifolds with equal boundaries; that
/// they are balls is the caller's assertion, recorded in the SurgeryRecord.
Complex gbm(const Complex& c, const Complex& b1, const Complex& b2,
            SurgeryRecord* rec = nullptr);

struct CaseStandardSphere {};
struct CaseConnectedSum {
  Complex x1, x2;
  std::vector<std::string> seam;  // tokens of the cut sphere in the input
};
struct CaseHandleAddition {
  Complex y;
  std::vector<std::string> seam;
  Bijection pairing;  // handle_add(y, pairing) restores the input
};
struct CaseGbmReduction {
  std::string u;   // removed vertex
  Complex ball;    // disc replacing star(u)
  Complex y;       // the (n-1)-vertex result
};
using DecompositionCase =
    std::variant<CaseStandardSphere, CaseConnectedSum, CaseHandleAddition, CaseGbmReduction>;

/// One reduction step for a connected, closed, orientable triangulated
/// 2-manifold: the 4-vertex sphere, a connected sum, a handle addition, or a
/// one-vertex reduction by a generalized bistellar move. All choices are
/// tie-broken by dense vertex index for reproducibility.
DecompositionCase decompose_2manifold(const Complex& c);

/// Search helpers for handle surgery: a pairing of sigma1 -> sigma2 with all
/// paired distances >= 3, if one exists; and the lexicographically first
/// admissible facet pair of the whole complex.
std::optional<Bijection> find_admissible_bijection(const Complex& c, const Bits& sigma1,
                                                   const Bits& sigma2);
std::optional<Bijection> find_admissible_pair(const Complex& c);

}  // namespace pm
