#include <doctest.h>

#include "pm/bounds.hpp"
#include "pm/catalog.hpp"
#include "pm/moves.hpp"
#include "pm/stacked.hpp"
#include "support/build.hpp"
#include "support/corpus.hpp"

using corpus::cx;
using namespace pm;

TEST_CASE("edge and face floors") {
  CHECK(lbt_bound(2, 6, 1) == 12);
  CHECK(lbt_bound(3, 10, 3) == 20);
  for (int d = 2; d <= 5; ++d)
    for (int j = 1; j <= d; ++j) CHECK(lbt_bound(d, d + 2, j) == binomial(d + 2, j + 1));
  CHECK_THROWS_AS(lbt_bound(3, 10, 0), Error);

  // floors coincide with stacked face counts at every j
  for (int d = 2; d <= 6; ++d)
    for (long long n = d + 2; n <= d + 9; ++n)
      for (int j = 1; j <= d; ++j) CHECK(lbt_bound(d, n, j) == stacked_fvector(d, n)[j]);
}

TEST_CASE("bound reports: projective plane, stacked spheres, cycle joins") {
  BoundReport rp2 = lbt_check(rp2_6());
  CHECK(rp2.holds());
  CHECK(rp2.per_j[0].slack == 3);  // 15 vs 12
  CHECK(!rp2.equality_any);

  BoundReport st = lbt_check(corpus::random_stacked(3, 10, 6));
  CHECK(st.equality_all);
  REQUIRE(st.stacked_verdict.has_value());
  CHECK(*st.stacked_verdict);

  BoundReport jj = lbt_check(corpus::cycle_join(3, 3));
  CHECK(jj.holds());
  CHECK(jj.per_j[0].slack == 1);  // 15 vs 14
  CHECK(!jj.equality_any);
  CHECK(!jj.stacked_verdict.has_value());

  CHECK_THROWS_AS(lbt_check(standard_ball(3)), Error);
}

TEST_CASE("vertex-link double counting") {
  MpwIdentity tetra = mpw_incidence(standard_sphere(2), 1);
  CHECK(tetra.lhs == 6);
  CHECK(tetra.rhs_sum == 12);
  CHECK(tetra.divisor == 2);
  CHECK(tetra.holds);

  MpwIdentity rp2 = mpw_incidence(rp2_6(), 2);
  CHECK(rp2.lhs == 10);
  CHECK(rp2.rhs_sum == 30);
  CHECK(rp2.holds);

  for (const auto& entry : corpus::normal_corpus(12))
    for (int j = 1; j <= entry.complex.dim(); ++j)
      CHECK(mpw_incidence(entry.complex, j).holds);
}

TEST_CASE("sphere identities: zero residuals exactly on sphere-like vectors") {
  auto zeros = [](const std::vector<long long>& r) {
    for (long long x : r)
      if (x != 0) return false;
    return true;
  };
  CHECK(zeros(dehn_sommerville_residuals(FaceVector({5, 9, 6}), 2)));
  CHECK(zeros(dehn_sommerville_residuals(FaceVector({10, 30, 40, 20}), 3)));
  CHECK(!zeros(dehn_sommerville_residuals(FaceVector({6, 15, 10}), 2)));

  for (int d : {2, 3})
    for (uint64_t seed = 0; seed < 5; ++seed) {
      Complex c = corpus::random_stacked(d, d + 4 + int(seed), seed);
      CHECK(zeros(dehn_sommerville_residuals(c.f_vector(), d)));
    }
  // joins of cycles triangulate 3-spheres
  CHECK(zeros(dehn_sommerville_residuals(corpus::cycle_join(4, 5).f_vector(), 3)));
}

TEST_CASE("k-stacked closed forms") {
  CHECK(glbc_fvector(3, 1, {10}) == FaceVector({10, 30, 40, 20}));
  for (long long n = 4; n <= 12; ++n)
    CHECK(glbc_fvector(2, 1, {n}) == FaceVector({n, 3 * n - 6, 2 * n - 4}));

  for (int d = 3; d <= 7; ++d)
    for (long long n = d + 2; n <= d + 12; ++n)
      CHECK(glbc_fvector(d, 1, {n}) == stacked_fvector(d, n));

  // all outputs satisfy the sphere identities
  for (int d = 5; d <= 7; ++d)
    for (int k = 1; 2 * k + 1 <= d; ++k) {
      std::vector<long long> prefix;
      FaceVector probe = stacked_fvector(d, d + 5);
      for (int i = 0; i < k; ++i) prefix.push_back(probe[i]);
      FaceVector full = glbc_fvector(d, k, prefix);
      for (long long r : dehn_sommerville_residuals(full, d)) CHECK(r == 0);
    }

  CHECK_THROWS_AS(glbc_fvector(3, 2, {10, 40}), Error);  // d < 2k
  CHECK_THROWS_AS(glbc_fvector(5, 2, {10}), Error);      // short prefix
}

TEST_CASE("k-stacked closed forms reproduce 5-sphere joins that bound 2-stacked balls") {
  // cycle * standard 3-sphere bounds cycle * solid-4-simplex, whose only
  // extra faces have dimension >= 4; the two share the 3-skeleton
  for (int p : {3, 4, 5}) {
    Complex five = pm::Complex::join(corpus::prefixed(cycle(p), "c"),
                                     corpus::prefixed(standard_sphere(3), "s"));
    CHECK(five.dim() == 5);
    FaceVector f = five.f_vector();
    FaceVector completed = glbc_fvector(5, 2, {f[0], f[1]});
    CHECK(completed == f);
  }
}

TEST_CASE("inequality evaluation on raw vectors") {
  BoundReport remark = glbc_check(FaceVector({19, 157, 546, 948, 810, 270}), 5, 2);
  CHECK(remark.holds());

  BoundReport stacked = glbc_check(stacked_fvector(5, 9), 5, 1);
  CHECK(stacked.holds());
  CHECK(stacked.equality_all);
}

TEST_CASE("floors for non-simply-connected manifolds") {
  Complex handled = handle_add(corpus::chain_stacked(3, 13),
                               *find_admissible_pair(corpus::chain_stacked(3, 13)));
  BoundReport r = lbc_nsc_check(handled);
  CHECK(r.holds());
  CHECK(r.equality_all);  // (9,36,54,27) against (36,54,27)
  CHECK(r.topology_note.has_value());

  BoundReport torus = lbc_nsc_check(torus_7());
  CHECK(torus.holds());
  CHECK(torus.equality_all);  // 21 = 3*7, 14 = 2*7

  CHECK_THROWS_AS(lbc_nsc_check(standard_ball(2)), Error);
}
