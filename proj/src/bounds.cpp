#include "pm/bounds.hpp"

#include <sstream>

#include "pm/stacked.hpp"
#include "pm/verify.hpp"

namespace pm {

bool BoundReport::holds() const {
  for (const BoundEntry& e : per_j)
    if (e.slack < 0) return false;
  return true;
}

std::string BoundReport::to_text() const {
  std::ostringstream out;
  for (const BoundEntry& e : per_j)
    out << "j=" << e.j << " observed=" << e.observed << " bound=" << e.bound
        << " slack=" << e.slack << '\n';
  out << "holds=" << (holds() ? "true" : "false") << '\n';
  out << "equality_any=" << (equality_any ? "true" : "false")
      << " equality_all=" << (equality_all ? "true" : "false") << '\n';
  if (stacked_verdict) out << "stacked=" << (*stacked_verdict ? "true" : "false") << '\n';
  if (topology_note) out << "topology=" << *topology_note << '\n';
  return out.str();
}

namespace {

BoundReport report_from(const FaceVector& f, int first_j,
                        const std::vector<long long>& bounds) {
  BoundReport r;
  bool all = true, any = false;
  for (size_t i = 0; i < bounds.size(); ++i) {
    int j = first_j + int(i);
    BoundEntry e;
    e.j = j;
    e.observed = f[j];
    e.bound = bounds[i];
    e.slack = e.observed - e.bound;
    if (e.slack == 0) any = true;
    else all = false;
    r.per_j.push_back(e);
  }
  r.equality_all = all && !bounds.empty();
  r.equality_any = any;
  return r;
}

}  // namespace

long long lbt_bound(int d, long long f0, int j) {
  if (d < 1 || j < 1 || j > d || f0 < d + 2)
    fail(ErrorCode::ArgumentOutOfRange, "need 1 <= j <= d and f0 >= d+2");
  if (j < d) return binomial(d + 1, j) * f0 - j * binomial(d + 2, j + 1);
  return (long long)d * f0 - (long long)(d + 2) * (d - 1);
}

BoundReport lbt_check(const Complex& c) {
  int d = c.dim();
  if (d < 2 || !is_normal_pm(c))
    fail(ErrorCode::NotNormalPM, "bounds apply to normal pseudomanifolds of dimension >= 2");
  FaceVector f = c.f_vector();
  std::vector<long long> bounds;
  for (int j = 1; j <= d; ++j) bounds.push_back(lbt_bound(d, f[0], j));
  BoundReport r = report_from(f, 1, bounds);
  if (d >= 3 && r.equality_any) r.stacked_verdict = is_stacked(c).stacked;
  return r;
}

MpwIdentity mpw_incidence(const Complex& c, int j) {
  if (j < 1 || j > c.dim())
    fail(ErrorCode::ArgumentOutOfRange, "need 1 <= j <= d");
  MpwIdentity id;
  id.lhs = c.face_count(j);
  id.divisor = j + 1;
  for (int v = 0; v < c.vertex_count(); ++v) {
    Bits vert(c.vertex_count());
    vert.set(v);
    Complex lk = c.link(vert);
    id.rhs_sum += j - 1 <= lk.dim() ? lk.face_count(j - 1) : 0;
  }
  id.holds = id.rhs_sum % id.divisor == 0 && id.rhs_sum / id.divisor == id.lhs;
  return id;
}

std::vector<long long> dehn_sommerville_residuals(const FaceVector& f, int d) {
  if (f.dim() != d)
    fail(ErrorCode::ArgumentOutOfRange, "face vector must have d+1 entries");
  auto get = [&](int i) -> long long { return i == -1 ? 1 : f[i]; };
  auto sign = [](long long k) -> long long { return k % 2 ? -1 : 1; };
  std::vector<long long> residuals;
  for (int j = 0; j <= d / 2; ++j) {
    long long left = 0;
    for (int i = -1; i <= j - 1; ++i)
      left += sign(d - i - 1) * binomial(d - i, d - j + 1) * get(i);
    long long right = 0;
    for (int i = -1; i <= d - j; ++i)
      right += sign(i + 2) * binomial(d - i, j) * get(i);
    residuals.push_back(left - right);
  }
  return residuals;
}

namespace {

/// Closed-form coefficient of f_i in the k-stacked expression for f_j.
long long glbc_coefficient(int d, int k, int j, int i) {
  long long s = (k - i + 1) % 2 ? -1 : 1;
  if (j <= d - k) return s * binomial(j - i - 1, j - k) * binomial(d - i + 1, j - i);
  long long bracket = binomial(j - i - 1, j - k) * binomial(d - i + 1, j - i) -
                      binomial(k, d - j + 1) * binomial(d - i, d - k + 1);
  for (int l = d - j; l <= k - 1; ++l) {
    long long t = (k - l) % 2 ? -1 : 1;
    bracket += t * binomial(l, d - j) * binomial(d - i, d - l + 1);
  }
  return s * bracket;
}

std::vector<long long> glbc_bounds(int d, int k, const std::vector<long long>& prefix) {
  // d = 2k still evaluates correctly (the two branches cover disjoint ranges)
  if (k < 1 || d < 2 * k)
    fail(ErrorCode::ArgumentOutOfRange, "need k >= 1 and d >= 2k");
  if (int(prefix.size()) != k)
    fail(ErrorCode::ArgumentOutOfRange, "prefix must hold f_0 .. f_{k-1}");
  auto get = [&](int i) -> long long { return i == -1 ? 1 : prefix[i]; };
  std::vector<long long> out;
  for (int j = k; j <= d; ++j) {
    long long fj = 0;
    for (int i = -1; i <= k - 1; ++i) fj += glbc_coefficient(d, k, j, i) * get(i);
    out.push_back(fj);
  }
  return out;
}

}  // namespace

FaceVector glbc_fvector(int d, int k, const std::vector<long long>& prefix) {
  std::vector<long long> tail = glbc_bounds(d, k, prefix);
  std::vector<long long> counts = prefix;
  counts.insert(counts.end(), tail.begin(), tail.end());
  return FaceVector(std::move(counts));
}

BoundReport glbc_check(const FaceVector& f, int d, int k) {
  if (f.dim() != d)
    fail(ErrorCode::ArgumentOutOfRange, "face vector must have d+1 entries");
  std::vector<long long> prefix(f.counts.begin(), f.counts.begin() + k);
  return report_from(f, k, glbc_bounds(d, k, prefix));
}

BoundReport lbc_nsc_check(const Complex& c) {
  int d = c.dim();
  if (d < 2) fail(ErrorCode::ArgumentOutOfRange, "needs dimension >= 2");
  std::string note;
  if (d == 2) {
    if (!is_closed_2manifold(c) || !c.is_connected())
      fail(ErrorCode::NotA2Manifold, "input is not a connected closed 2-manifold");
    note = "closed 2-manifold verified; non-simple-connectivity asserted by caller";
  } else {
    if (!is_normal_pm(c))
      fail(ErrorCode::NotNormalPM, "input is not a normal pseudomanifold");
    note = "normal pseudomanifold verified; manifold and non-simple-connectivity asserted by caller";
  }
  FaceVector f = c.f_vector();
  std::vector<long long> bounds;
  for (int j = 1; j < d; ++j) bounds.push_back(binomial(d + 1, j) * f[0]);
  bounds.push_back((long long)d * f[0]);
  BoundReport r = report_from(f, 1, bounds);
  r.topology_note = note;
  return r;
}

}  // namespace pm
