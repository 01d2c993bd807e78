#pragma once

// Test-only oracles, independent of the library's cached enumeration paths:
// faces are rebuilt from facet token lists with plain std::set machinery, and
// rigidity is evaluated straight from its definition.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pm/complex.hpp"
#include "pm/face_vector.hpp"

namespace oracle {

using TokenFace = std::vector<std::string>;

/// Every face of every dimension, by explicit subset enumeration of the facet
/// token lists (the empty face is excluded).
inline std::set<TokenFace> all_faces(const pm::Complex& c) {
  std::set<TokenFace> out;
  for (const pm::Bits& facet : c.facets()) {
    std::vector<std::string> toks = c.face_tokens(facet);
    std::sort(toks.begin(), toks.end());
    size_t s = toks.size();
    for (size_t sub = 1; sub < (size_t(1) << s); ++sub) {
      TokenFace face;
      for (size_t b = 0; b < s; ++b)
        if (sub >> b & 1) face.push_back(toks[b]);
      out.insert(face);
    }
  }
  return out;
}

inline pm::FaceVector brute_fvector(const pm::Complex& c) {
  std::vector<long long> counts;
  for (const TokenFace& f : all_faces(c)) {
    if (int(f.size()) > int(counts.size())) counts.resize(f.size(), 0);
    ++counts[f.size() - 1];
  }
  return pm::FaceVector(std::move(counts));
}

/// Definition-direct q-rigidity for small complexes: loops every subset and
/// recounts edges from scratch.
struct BruteRigidity {
  bool rigid = true;
  std::optional<std::vector<int>> witness;  // dense indices, first found in
                                            // (cardinality, lex) order
};

inline BruteRigidity brute_q_rigid(const pm::Complex& c, int q) {
  BruteRigidity out;
  if (!c.is_connected()) {
    out.rigid = false;
    return out;
  }
  int n = c.vertex_count();
  auto edges = c.dim() >= 1 ? c.faces(1) : std::vector<pm::Bits>{};

  // subsets in cardinality-major, then lexicographic order
  std::vector<std::vector<int>> subsets;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) set.push_back(v);
    subsets.push_back(std::move(set));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& set : subsets) {
    pm::Bits a = pm::Bits::from_indices(n, set);
    bool feasible = false;
    for (const pm::Bits& f : c.facets())
      if (!f.intersects(a)) feasible = true;
    if (!feasible) continue;
    long long meeting = 0;
    for (const pm::Bits& e : edges)
      if (e.intersects(a)) ++meeting;
    if (meeting < (long long)q * (long long)set.size()) {
      out.rigid = false;
      out.witness = set;
      return out;
    }
  }
  return out;
}

}  // namespace oracle
