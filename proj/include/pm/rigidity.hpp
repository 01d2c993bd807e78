#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pm/complex.hpp"

namespace pm {

struct SweepOptions {
  /// Hard cap for the exhaustive 2^n sweep.
  int max_vertices = 26;
  /// Worker threads for the blocked sweep; 0 = runtime default. The result is
  /// identical for every worker count.
  int workers = 0;
  /// Serial single-range sweep (the reference) instead of the blocked kernel.
  bool serial = false;
};

/// Exhaustive q-rigidity verdict. A complex is q-rigid when it is connected
/// and every vertex set A disjoint from at least one facet meets at least
/// q*|A| edges. On failure the witness is the violator of smallest
/// cardinality, lexicographically first among those.
struct RigidityReport {
  int q = 0;
  int n = 0;
  int d = 0;
  bool verdict = false;
  bool disconnected = false;
  std::optional<std::vector<std::string>> witness;
  long long witness_edges = 0;  // e(A) for the witness
  long long witness_bound = 0;  // q * |A|
  long long edges_total = 0;
  long long minimal_bound = 0;  // (n-d-1)q + C(d+1,2)
  std::optional<bool> minimal;
  unsigned long long subsets_examined = 0;  // feasible sets evaluated
  unsigned long long subsets_pruned = 0;    // sets meeting every facet, skipped

  std::string to_text() const;
};

/// Number of edges with at least one endpoint in A.
long long edges_meeting(const Complex& c, const Bits& a);

/// Edge count every n-vertex q-rigid d-complex must reach.
long long min_edge_bound(long long n, int d, int q);

RigidityReport is_q_rigid(const Complex& c, int q, const SweepOptions& opts = {});

/// q-rigid with exactly min_edge_bound(n, d, q) edges.
RigidityReport is_minimally_q_rigid(const Complex& c, int q, const SweepOptions& opts = {});

namespace rigidity_detail {

/// Dense single-word view of the sweep inputs (n <= 26 enforced upstream).
struct SweepInput {
  int n = 0;
  int q = 0;
  std::vector<uint32_t> adjacency;  // per vertex
  std::vector<int> degree;
  std::vector<uint32_t> facets;
};

struct SweepResult {
  bool violated = false;
  uint32_t witness = 0;
  int witness_edges = 0;
  unsigned long long examined = 0;
  unsigned long long pruned = 0;
};

/// Reference kernel: one Gray-code pass over all 2^n subsets.
SweepResult sweep_serial(const SweepInput& in);

/// Blocked kernel: the mask space is split into fixed blocks by high-order
/// bits and blocks are swept independently (in parallel when OpenMP is
/// enabled). Merged result is independent of the worker count.
SweepResult sweep_blocked(const SweepInput& in, int workers);

}  // namespace rigidity_detail

}  // namespace pm
