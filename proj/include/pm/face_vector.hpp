#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pm {

/// Face counts (f_0, ..., f_d) of a complex; empty for the complex whose only
/// face is the empty set.
struct FaceVector {
  std::vector<long long> counts;

  FaceVector() = default;
  explicit FaceVector(std::vector<long long> c) : counts(std::move(c)) {}

  int dim() const { return int(counts.size()) - 1; }
  long long operator[](int j) const { return counts[j]; }

  /// Alternating sum f_0 - f_1 + f_2 - ...
  long long euler() const {
    long long e = 0;
    for (size_t i = 0; i < counts.size(); ++i) e += (i % 2 ? -1 : 1) * counts[i];
    return e;
  }

  bool operator==(const FaceVector& o) const { return counts == o.counts; }

  std::string to_string() const;
};

/// f-vector of a join: f_k = sum over i+j = k-1 of f_i(X) f_j(Y), where
/// f_{-1} = 1 stands for the empty face of each factor.
FaceVector join_fvector(const FaceVector& fx, const FaceVector& fy);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
long long binomial(long long n, long long k);

}  // namespace pm
