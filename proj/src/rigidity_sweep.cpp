#include <algorithm>

#include "pm/rigidity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pm::rigidity_detail {

namespace {

// Ascending-sequence lexicographic order for equal-cardinality masks: the
// owner of the lowest differing bit comes first.
inline bool mask_lex_less(uint32_t a, uint32_t b) {
  uint32_t diff = a ^ b;
  if (!diff) return false;
  return a & (diff & -diff);
}

inline bool better_witness(int card_a, uint32_t a, int card_b, uint32_t b) {
  if (card_a != card_b) return card_a < card_b;
  return mask_lex_less(a, b);
}

inline bool feasible(uint32_t mask, const std::vector<uint32_t>& facets) {
  for (uint32_t f : facets)
    if (!(mask & f)) return true;
  return false;
}

// Sweeps masks {base | g : g over the low `bits` bits in Gray-code order}.
SweepResult sweep_range(const SweepInput& in, uint32_t base, int bits) {
  SweepResult res;
  uint32_t mask = base;
  // edges meeting the base set, from scratch
  int edges = 0;
  for (int v = 0; v < in.n; ++v)
    if (mask >> v & 1) edges += in.degree[v] - __builtin_popcount(in.adjacency[v] & mask & ((uint32_t(1) << v) - 1));
  int best_card = 0;

  uint64_t steps = uint64_t(1) << bits;
  for (uint64_t i = 0;; ++i) {
    if (feasible(mask, in.facets)) {
      ++res.examined;
      int card = __builtin_popcount(mask);
      if (edges < in.q * card) {
        if (!res.violated || better_witness(card, mask, best_card, res.witness)) {
          res.violated = true;
          res.witness = mask;
          res.witness_edges = edges;
          best_card = card;
        }
      }
    } else {
      ++res.pruned;
    }
    if (i + 1 == steps) break;
    int bit = __builtin_ctzll(i + 1);
    uint32_t flip = uint32_t(1) << bit;
    if (mask & flip) {
      mask ^= flip;
      edges -= in.degree[bit] - __builtin_popcount(in.adjacency[bit] & mask);
    } else {
      edges += in.degree[bit] - __builtin_popcount(in.adjacency[bit] & mask);
      mask ^= flip;
    }
  }
  return res;
}

void merge(SweepResult& into, const SweepResult& part) {
  into.examined += part.examined;
  into.pruned += part.pruned;
  if (!part.violated) return;
  if (!into.violated ||
      better_witness(__builtin_popcount(part.witness), part.witness,
                     __builtin_popcount(into.witness), into.witness)) {
    into.violated = true;
    into.witness = part.witness;
    into.witness_edges = part.witness_edges;
  }
}

}  // namespace

SweepResult sweep_serial(const SweepInput& in) { return sweep_range(in, 0, in.n); }

SweepResult sweep_blocked(const SweepInput& in, int workers) {
  // Block layout is fixed by n alone so the merged result cannot depend on
  // scheduling or worker count.
  int block_bits = std::min(8, in.n);
  int low_bits = in.n - block_bits;
  int blocks = 1 << block_bits;
  std::vector<SweepResult> parts(blocks);

#ifdef _OPENMP
  int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int b = 0; b < blocks; ++b)
    parts[b] = sweep_range(in, uint32_t(b) << low_bits, low_bits);
#else
  (void)workers;
  for (int b = 0; b < blocks; ++b)
    parts[b] = sweep_range(in, uint32_t(b) << low_bits, low_bits);
#endif

  SweepResult out;
  for (const SweepResult& part : parts) merge(out, part);
  return out;
}

}  // namespace pm::rigidity_detail
