#include "pm/face_vector.hpp"

#include <sstream>

#include "pm/error.hpp"

namespace pm {

std::string FaceVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i];
  }
  out << ')';
  return out.str();
}

FaceVector join_fvector(const FaceVector& fx, const FaceVector& fy) {
  auto get = [](const FaceVector& f, int i) -> long long {
    if (i == -1) return 1;
    if (i < -1 || i > f.dim()) return 0;
    return f.counts[i];
  };
  int dx = fx.dim(), dy = fy.dim();
  int d = dx + dy + 1;
  if (d < 0) return FaceVector{};
  std::vector<long long> out(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = -1; i <= k; ++i) out[k] += get(fx, i) * get(fy, k - 1 - i);
  return FaceVector(std::move(out));
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return r;
}

}  // namespace pm
