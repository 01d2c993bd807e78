#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pm/complex.hpp"
#include "pm/face_vector.hpp"

namespace pm {

struct BoundEntry {
  int j = 0;
  long long observed = 0;
  long long bound = 0;
  long long slack = 0;  // observed - bound
};

struct BoundReport {
  std::vector<BoundEntry> per_j;
  bool equality_all = false;
  bool equality_any = false;
  std::optional<bool> stacked_verdict;
  std::optional<std::string> topology_note;  // e.g. "asserted by caller"

  bool holds() const;
  std::string to_text() const;
};

/// Least possible j-face count of a d-dimensional normal pseudomanifold on f0
/// vertices; stacked spheres attain it.
long long lbt_bound(int d, long long f0, int j);

/// Evaluates every lower bound; for d >= 3 with equality anywhere the stacked
/// recognizer runs and its verdict is attached.
BoundReport lbt_check(const Complex& c);

/// Both sides of the vertex/j-face double count
/// (j+1) f_j = sum over vertices of f_{j-1}(link).
struct MpwIdentity {
  long long lhs = 0;      // f_j
  long long rhs_sum = 0;  // sum of link counts
  int divisor = 0;        // j+1
  bool holds = false;     // rhs divisible and quotient equals lhs
};
MpwIdentity mpw_incidence(const Complex& c, int j);

/// Linear identities every triangulated-sphere f-vector satisfies; one
/// residual per 0 <= j <= floor(d/2), all zero on spheres.
std::vector<long long> dehn_sommerville_residuals(const FaceVector& f, int d);

/// Completes the face vector of a k-stacked d-sphere from its first k entries
/// (exact integer closed forms; f_{-1} = 1).
FaceVector glbc_fvector(int d, int k, const std::vector<long long>& prefix);

/// Slack of f against the k-stacked closed forms for k <= j <= d.
BoundReport glbc_check(const FaceVector& f, int d, int k);

/// Lower bounds conjectured for connected, non-simply-connected triangulated
/// manifolds: f_j >= C(d+1, j) f_0 for j < d and f_d >= d f_0. Simple
/// connectivity is never decided here; the caller asserts the topology.
BoundReport lbc_nsc_check(const Complex& c);

}  // namespace pm
