// Acceptance battery: one pass/fail line per criterion.
//
// Usage: acceptance [N]   (run one criterion, or all when absent)
// Exit code 0 when every criterion that ran passed.

#include <chrono>
#include <cstring>
#include <functional>
#include <random>
#include <iostream>
#include <sstream>
#include <vector>

#include "pm/bounds.hpp"
#include "pm/catalog.hpp"
#include "pm/moves.hpp"
#include "pm/rigidity.hpp"
#include "pm/stacked.hpp"
#include "pm/verify.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace pm;

namespace {

struct Check {
  int id;
  std::string title;
  std::function<bool(std::ostream&)> run;
};

bool expect(std::ostream& log, bool ok, const std::string& what) {
  if (!ok) log << "    failed: " << what << '\n';
  return ok;
}

// ---------------------------------------------------------------------------
// 1. Generated stacked spheres hit the closed-form face counts exactly and
//    sit at the lower bounds with zero slack.
bool criterion1(std::ostream& log) {
  bool ok = true;
  for (int d : {2, 3})
    for (int n = d + 2; n <= d + 10; ++n)
      for (uint64_t seed = 0; seed < 20; ++seed) {
        Complex c = corpus::random_stacked(d, n, seed * 31 + n);
        ok &= expect(log, oracle::brute_fvector(c) == stacked_fvector(d, n),
                     "brute-force face count mismatch at d=" + std::to_string(d) +
                         " n=" + std::to_string(n));
        BoundReport r = lbt_check(c);
        for (const BoundEntry& e : r.per_j)
          ok &= expect(log, e.slack == 0, "nonzero slack at j=" + std::to_string(e.j));
      }
  return ok;
}

// ---------------------------------------------------------------------------
// 2. The collapse recognizer and the clique-closure recognizer agree on a
//    mixed corpus of at least 200 complexes.
bool criterion2(std::ostream& log) {
  std::vector<corpus::Entry> pool;
  for (int d : {2, 3})
    for (int n = d + 2; n <= d + 9; ++n)
      for (uint64_t seed = 0; seed < 10; ++seed)
        pool.push_back({"stacked", corpus::random_stacked(d, n, seed * 7 + n)});
  for (const auto& e : corpus::normal_corpus(18)) pool.push_back(e);

  int compared = 0;
  bool ok = true;
  for (const auto& entry : pool) {
    if (entry.complex.dim() < 2) continue;
    ++compared;
    bool a = is_stacked(entry.complex).stacked;
    bool b = is_one_stacked_via_cliques(entry.complex);
    ok &= expect(log, a == b, "recognizers disagree on " + entry.name);
  }
  log << "    compared " << compared << " complexes\n";
  return expect(log, compared >= 200, "corpus too small") && ok;
}

// ---------------------------------------------------------------------------
// 3. Every normal pseudomanifold in the corpus (d in {2,3}, n <= 20) is
//    (d+1)-rigid; in dimension 3 the minimal ones are exactly the stacked
//    spheres.
bool criterion3(std::ostream& log) {
  std::vector<corpus::Entry> pool = corpus::normal_corpus(20);
  for (int n : {15, 17, 20})
    for (uint64_t seed = 0; seed < 3; ++seed) {
      pool.push_back({"big2_" + std::to_string(n), corpus::random_stacked(2, n, seed + n)});
      pool.push_back({"big3_" + std::to_string(n), corpus::random_stacked(3, n, seed + 2 * n)});
    }
  pool.push_back({"handle3_18", corpus::chain_handle(3, 18)});
  pool.push_back({"sum23", corpus::stacked_sum(2, 8, 9, 77)});

  bool ok = true;
  int checked = 0;
  for (const auto& entry : pool) {
    const Complex& c = entry.complex;
    int d = c.dim();
    if ((d != 2 && d != 3) || c.vertex_count() > 20) continue;
    ok &= expect(log, is_normal_pm(c), "corpus entry not a normal pm: " + entry.name);
    RigidityReport r = is_minimally_q_rigid(c, d + 1);
    ++checked;
    ok &= expect(log, r.verdict, "not rigid: " + entry.name);
    if (d == 3)
      ok &= expect(log, *r.minimal == is_stacked(c).stacked,
                   "minimality/stackedness mismatch: " + entry.name);
  }
  log << "    swept " << checked << " complexes\n";
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Numeric anchors: join convolution, the k=2 d=5 inequality on the
//    triangulated 5-sphere with non-simply-connected vertex links, and the
//    one-sided obstruction with its 9-gon crossing graph.
bool criterion4(std::ostream& log) {
  bool ok = true;
  FaceVector joined = join_fvector(FaceVector({3, 3}), FaceVector({16, 106, 180, 90}));
  ok &= expect(log, joined == FaceVector({19, 157, 546, 948, 810, 270}),
               "join convolution anchor");
  ok &= expect(log, glbc_check(joined, 5, 2).holds(), "k=2 d=5 inequality on the anchor");

  Complex rp2 = rp2_6();
  auto sphere = find_induced_standard_sphere(rp2);
  ok &= expect(log, sphere.has_value(), "no induced 3-cycle in rp2_6");
  Graph g = crossing_graph(rp2, *sphere);
  ok &= expect(log, g.vertex_count() == 9 && g.edge_count() == 9 && g.connected(),
               "crossing graph is not a 9-gon");
  for (int v = 0; v < g.vertex_count(); ++v)
    ok &= expect(log, g.degree(v) == 2, "crossing graph vertex degree != 2");
  try {
    handle_delete(rp2, *sphere);
    ok = expect(log, false, "handle deletion over a one-sided sphere succeeded");
  } catch (const Error& e) {
    ok &= expect(log, e.code() == ErrorCode::NotTwoSided, "wrong error code");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. One hundred randomized surgery round trips restore their inputs
//    bit-exactly; Euler characteristic is additive (minus 2) for surface sums.
bool criterion5(std::ostream& log) {
  bool ok = true;
  int trips = 0;
  std::mt19937_64 rng(2024);

  // star then collapse
  for (int i = 0; i < 40; ++i) {
    int d = 2 + int(rng() % 2);
    Complex c = corpus::random_stacked(d, d + 3 + int(rng() % 6), rng());
    Complex starred = star_vertex(c, c.facets()[rng() % c.facets().size()], "zz");
    ok &= expect(log, collapse_vertex(starred, starred.require_vertex("zz")).identical_to(c),
                 "star/collapse trip " + std::to_string(i));
    ++trips;
  }

  // handle delete then add, over connected sums and genuine handles
  for (int i = 0; i < 60 && trips < 70; ++i) {
    Complex c;
    switch (i % 4) {
      case 0: c = corpus::stacked_sum(3, 6 + i % 3, 7, rng()); break;
      case 1: c = corpus::chain_handle(2, 10 + i % 5); break;
      case 2: c = corpus::stacked_sum(2, 5 + i % 4, 6, rng()); break;
      default: c = corpus::chain_handle(3, 13 + i % 4); break;
    }
    auto sphere = find_induced_standard_sphere(c);
    if (!sphere || crossing_graph(c, *sphere).components().size() != 2) continue;
    SurgeryRecord del;
    Complex cut = handle_delete(c, *sphere, &del);
    Complex glued = handle_add(cut, Bijection{del.map});
    std::unordered_map<std::string, std::string> strip;
    for (const auto& [plus, minus] : del.map) strip[plus] = plus.substr(0, plus.size() - 1);
    ok &= expect(log, glued.relabeled(strip).identical_to(c),
                 "handle trip " + std::to_string(i));
    ++trips;
  }

  // gbm and its reverse: swap a vertex star for a fan and back
  for (int i = 0; i < 300 && trips < 100; ++i) {
    Complex c = corpus::random_stacked(2, 6 + int(rng() % 7), rng());
    int u = int(rng() % c.vertex_count());
    Bits uface(c.vertex_count());
    uface.set(u);
    if (c.degree(uface) == 3) continue;  // swap needs a non-trivial fan
    Complex lk = c.link(uface);
    Graph lg = lk.edge_graph();
    std::vector<int> cyc{0};
    auto first = lg.neighbors(0).indices();
    cyc.push_back(std::min(first[0], first[1]));
    while (int(cyc.size()) < lk.vertex_count()) {
      int cur = cyc.back(), prev = cyc[cyc.size() - 2];
      auto nb = lg.neighbors(cur).indices();
      cyc.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    // fan diagonals must avoid the complex for the swap to be legal
    bool diagonal = false;
    Graph cg = c.edge_graph();
    for (size_t t = 2; t + 1 < cyc.size(); ++t)
      if (cg.adjacent(c.require_vertex(lk.token(cyc[0])), c.require_vertex(lk.token(cyc[t]))))
        diagonal = true;
    if (diagonal) continue;
    std::vector<std::vector<std::string>> fan;
    for (size_t t = 1; t + 1 < cyc.size(); ++t)
      fan.push_back({lk.token(cyc[0]), lk.token(cyc[t]), lk.token(cyc[t + 1])});
    Complex ball = Complex::from_facet_tokens(fan);
    Complex star_u = c.star(u);
    Complex swapped = gbm(c, star_u, ball);
    ok &= expect(log, gbm(swapped, ball, star_u).identical_to(c),
                 "gbm trip " + std::to_string(i));
    ++trips;
  }

  log << "    completed " << trips << " round trips\n";
  ok &= expect(log, trips >= 100, "fewer than 100 round trips");

  // Euler characteristic under surface sums
  std::vector<Complex> surfaces{standard_sphere(2), icosahedron(), torus_7(), rp2_6(),
                                corpus::random_stacked(2, 9, 55)};
  for (const Complex& a : surfaces)
    for (const Complex& b : surfaces) {
      Complex pa = corpus::prefixed(a, "a"), pb = corpus::prefixed(b, "b");
      Complex sum = connected_sum(pa, pa.facets()[0], pb, pb.facets()[0], {});
      ok &= expect(log,
                   sum.f_vector().euler() ==
                       a.f_vector().euler() + b.f_vector().euler() - 2,
                   "euler additivity");
    }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Rigidity transfer battery: cones, unions, vertex links, connected sums,
//    handles; at least 20 instances each, all checked exhaustively.
bool criterion6(std::ostream& log) {
  bool ok = true;

  // cones: q-rigid iff cone is (q+1)-rigid, minimal likewise
  int cones = 0;
  std::vector<std::pair<Complex, int>> cone_cases;
  for (int n = 3; n <= 10; ++n) cone_cases.emplace_back(cycle(n), 2);
  for (int n = 4; n <= 12; ++n)
    cone_cases.emplace_back(corpus::random_stacked(2, n, uint64_t(n)), 3);
  cone_cases.emplace_back(rp2_6(), 3);
  cone_cases.emplace_back(octahedron(), 3);
  cone_cases.emplace_back(torus_7(), 3);
  for (const auto& [c, q] : cone_cases) {
    RigidityReport base = is_minimally_q_rigid(c, q);
    RigidityReport lift = is_minimally_q_rigid(Complex::cone("apex", c), q + 1);
    ok &= expect(log, base.verdict == lift.verdict, "cone transfer verdict");
    if (base.verdict) ok &= expect(log, *base.minimal == *lift.minimal, "cone minimality");
    ++cones;
  }

  // unions along a shared facet
  int unions = 0;
  for (int i = 0; i < 20; ++i) {
    int d = 2 + i % 2;
    Complex x1 = corpus::random_stacked(d, d + 3 + i % 4, uint64_t(i));
    Complex x2 = corpus::prefixed(corpus::random_stacked(d, d + 3 + (i + 1) % 4, uint64_t(2 * i)), "u");
    // glue x2's first facet onto x1's first facet token-by-token
    std::unordered_map<std::string, std::string> glue;
    auto t1 = x1.face_tokens(x1.facets()[0]);
    auto t2 = x2.face_tokens(x2.facets()[0]);
    for (size_t t = 0; t < t1.size(); ++t) glue[t2[t]] = t1[t];
    Complex shared = x2.relabeled(glue);
    std::vector<std::vector<std::string>> facets;
    for (const Bits& f : x1.facets()) facets.push_back(x1.face_tokens(f));
    for (const Bits& f : shared.facets()) facets.push_back(shared.face_tokens(f));
    // drop duplicates of the shared facet
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    Complex united = Complex::from_facet_tokens(facets);
    ok &= expect(log, is_q_rigid(x1, d + 1).verdict && is_q_rigid(shared, d + 1).verdict,
                 "union parts rigid");
    ok &= expect(log, is_q_rigid(united, d + 1).verdict, "union rigid");
    ++unions;
  }

  // link transfer: all vertex links q-rigid implies the complex is
  // (q+1)-rigid
  int links = 0;
  for (int i = 0; i < 20; ++i) {
    Complex c = i % 2 ? corpus::random_stacked(3, 7 + i % 6, uint64_t(5 * i))
                      : corpus::cycle_join(3 + i % 3, 3 + (i / 2) % 3);
    bool all_links = true;
    for (int v = 0; v < c.vertex_count(); ++v) {
      Bits vert(c.vertex_count());
      vert.set(v);
      all_links &= is_q_rigid(c.link(vert), 3).verdict;
    }
    if (all_links) ok &= expect(log, is_q_rigid(c, 4).verdict, "link transfer");
    ++links;
  }

  // connected sums preserve (d+1)-rigidity
  int sums = 0;
  for (int i = 0; i < 20; ++i) {
    int d = 2 + i % 2;
    Complex x1 = corpus::prefixed(corpus::random_stacked(d, d + 3 + i % 3, uint64_t(i)), "a");
    Complex x2 = corpus::prefixed(corpus::random_stacked(d, d + 4, uint64_t(i + 100)), "b");
    bool parts = is_q_rigid(x1, d + 1).verdict && is_q_rigid(x2, d + 1).verdict;
    Complex sum = connected_sum(x1, x1.facets()[0], x2, x2.facets()[0], {});
    RigidityReport after = is_minimally_q_rigid(sum, d + 1);
    ok &= expect(log, parts && after.verdict, "sum rigidity");
    if (*after.minimal && d == 3) {
      ok &= expect(log,
                   *is_minimally_q_rigid(x1, 4).minimal && *is_minimally_q_rigid(x2, 4).minimal,
                   "sum minimality transfers to summands");
    }
    ++sums;
  }

  // handle additions preserve (d+1)-rigidity
  int handles = 0;
  for (int n = 10; n <= 22; ++n) {
    Complex c = corpus::chain_stacked(2, n);
    if (is_q_rigid(c, 3).verdict)
      ok &= expect(log, is_q_rigid(corpus::chain_handle(2, n), 3).verdict,
                   "surface handle rigidity n=" + std::to_string(n));
    ++handles;
  }
  for (int n = 13; n <= 19; ++n) {
    Complex c = corpus::chain_stacked(3, n);
    if (is_q_rigid(c, 4).verdict)
      ok &= expect(log, is_q_rigid(corpus::chain_handle(3, n), 4).verdict,
                   "solid handle rigidity n=" + std::to_string(n));
    ++handles;
  }

  log << "    cones=" << cones << " unions=" << unions << " links=" << links
      << " sums=" << sums << " handles=" << handles << '\n';
  ok &= expect(log, cones >= 20 && unions >= 20 && links >= 20 && sums >= 20 && handles >= 20,
               "fewer than 20 instances in some battery");
  return ok;
}

// ---------------------------------------------------------------------------
// 7. k-stacked closed forms: the k=1 case degenerates to the stacked counts
//    for every d <= 7; all completed vectors satisfy the sphere identities;
//    k=2, d=5 completions from 5-sphere joins are integral (and exact).
bool criterion7(std::ostream& log) {
  bool ok = true;
  for (int d = 2; d <= 7; ++d)
    for (long long n = d + 2; n <= d + 12; ++n) {
      FaceVector full = glbc_fvector(d, 1, {n});
      ok &= expect(log, full == stacked_fvector(d, n), "k=1 degeneration");
      for (long long r : dehn_sommerville_residuals(full, d))
        ok &= expect(log, r == 0, "nonzero residual in k=1 completion");
    }
  for (int p : {3, 4, 5, 6}) {
    Complex five = Complex::join(corpus::prefixed(cycle(p), "c"),
                                 corpus::prefixed(standard_sphere(3), "s"));
    FaceVector f = five.f_vector();
    FaceVector completed = glbc_fvector(5, 2, {f[0], f[1]});
    ok &= expect(log, int(completed.counts.size()) == 6, "completion has wrong length");
    ok &= expect(log, completed == f, "k=2 completion misses the join");
    for (long long r : dehn_sommerville_residuals(completed, 5))
      ok &= expect(log, r == 0, "nonzero residual in k=2 completion");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Conjectured-floor equality witness after a handle addition on a
//    10-vertex stacked 3-sphere. Unattainable as stated: every 10-vertex
//    stacked 3-sphere has face vector (10,30,40,20), an admissible
//    identification always removes exactly C(4,2)=6 edges, and the result
//    would need 24 distinct edges on 6 vertices where only C(6,2)=15 fit.
//    Hence no admissible bijection exists on any such sphere. The honest
//    outcome is a failure; the equality witness does exist at 13 vertices
//    (9,36,54,27), which is verified here as a note.
bool criterion8(std::ostream& log) {
  bool ok = true;

  ok &= expect(log, stacked_fvector(3, 10) == FaceVector({10, 30, 40, 20}),
               "closed-form face counts at n=10");
  long long after_edges = stacked_fvector(3, 10)[1] - binomial(4, 2);
  log << "    a handle would leave " << after_edges << " edges on 6 vertices (max "
      << binomial(6, 2) << ")\n";

  // empirical confirmation on a sample of 10-vertex stacked 3-spheres
  bool any_admissible = find_admissible_pair(corpus::chain_stacked(3, 10)).has_value();
  for (uint64_t seed = 0; seed < 40 && !any_admissible; ++seed)
    any_admissible = find_admissible_pair(corpus::random_stacked(3, 10, seed)).has_value();
  log << "    admissible pair found on sampled 10-vertex stacked 3-spheres: "
      << (any_admissible ? "yes" : "no") << '\n';

  // the criterion as stated
  bool witness_at_10 = false;
  if (any_admissible) {
    Complex c = corpus::chain_stacked(3, 10);
    auto psi = find_admissible_pair(c);
    if (psi) witness_at_10 = handle_add(c, *psi).f_vector() == FaceVector({6, 24, 36, 18});
  }
  ok &= expect(log, witness_at_10,
               "no handle addition on a 10-vertex stacked 3-sphere can exist "
               "(24 > 15 edges); the stated witness is unattainable");

  // note: the equality witness at the minimum feasible size
  Complex c13 = corpus::chain_stacked(3, 13);
  auto psi13 = find_admissible_pair(c13);
  if (psi13) {
    Complex handled = handle_add(c13, *psi13);
    BoundReport r = lbc_nsc_check(handled);
    bool corrected = handled.f_vector() == FaceVector({9, 36, 54, 27}) && r.equality_all;
    log << "    note: 13-vertex witness (9,36,54,27) at the floors: "
        << (corrected ? "verified" : "FAILED") << '\n';
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Check> checks{
      {1, "stacked face-vector identity and zero slack", criterion1},
      {2, "recognizer agreement on a 200+ complex corpus", criterion2},
      {3, "(d+1)-rigidity across the corpus; minimal iff stacked in d=3", criterion3},
      {4, "numeric anchors: convolution, inequality, one-sided 9-gon", criterion4},
      {5, "100 surgery round trips and Euler additivity", criterion5},
      {6, "rigidity transfer battery (cone/union/link/sum/handle)", criterion6},
      {7, "k-stacked closed-form consistency", criterion7},
      {8, "conjectured-floor witness after a 10-vertex handle addition", criterion8},
  };

  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const Check& check : checks) {
    if (only && check.id != only) continue;
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = check.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << '\n';
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << check.id << ": " << check.title
              << " (" << ms << " ms)\n"
              << log.str();
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
