#include "pm/moves.hpp"

#include <algorithm>
#include <sstream>

#include "pm/verify.hpp"

namespace pm {

std::vector<std::string> Bijection::domain_tokens() const {
  std::vector<std::string> out;
  for (const auto& [a, b] : pairs) out.push_back(a);
  return out;
}

std::vector<std::string> Bijection::range_tokens() const {
  std::vector<std::string> out;
  for (const auto& [a, b] : pairs) out.push_back(b);
  return out;
}

Complex star_vertex(const Complex& c, const Bits& sigma, const std::string& v,
                    SurgeryRecord* rec) {
  if (!c.is_facet(sigma))
    fail(ErrorCode::NotAFacet, "starring requires a facet");
  if (c.find_vertex(v))
    fail(ErrorCode::VertexExists, "token '" + v + "' is already a vertex");

  std::vector<std::string> tokens = c.tokens();
  tokens.push_back(v);
  int n = int(tokens.size());
  int vi = n - 1;

  auto widen = [n](const Bits& f) {
    Bits g(n);
    f.for_each([&](int x) { g.set(x); });
    return g;
  };

  std::vector<Bits> facets;
  for (const Bits& f : c.facets())
    if (f != sigma) facets.push_back(widen(f));
  sigma.for_each([&](int x) {
    Bits g = widen(sigma);
    g.reset(x);
    g.set(vi);
    facets.push_back(std::move(g));
  });

  if (rec) {
    rec->kind = SurgeryRecord::Kind::Star;
    rec->facet = c.face_tokens(sigma);
    rec->vertex = v;
  }
  return Complex::from_dense(std::move(tokens), std::move(facets), Complex::Maximality::Reject);
}

Complex collapse_vertex(const Complex& c, int v, SurgeryRecord* rec) {
  int d = c.dim();
  Bits vert(c.vertex_count());
  vert.set(v);
  if (!c.has_face(vert)) fail(ErrorCode::NotAFace, "no such vertex");
  if (c.degree(vert) != d + 1)
    fail(ErrorCode::WrongDegree, "vertex '" + c.token(v) + "' has degree " +
                                     std::to_string(c.degree(vert)) + ", need " +
                                     std::to_string(d + 1));
  Bits sigma(c.vertex_count());
  for (const Bits& f : c.facets())
    if (f.test(v)) sigma |= f;
  sigma.reset(v);
  if (c.has_face(sigma))
    fail(ErrorCode::LinkSpansFace, "link vertex set spans a face (standard-sphere situation)");

  std::vector<Bits> facets;
  for (const Bits& f : c.facets())
    if (!f.test(v)) facets.push_back(f);
  facets.push_back(sigma);

  if (rec) {
    rec->kind = SurgeryRecord::Kind::Collapse;
    rec->vertex = c.token(v);
    rec->facet = c.face_tokens(sigma);
  }
  return Complex::from_dense(c.tokens(), std::move(facets), Complex::Maximality::Reject);
}

namespace {

// Validates the bijection's shape against the host and returns the dense
// domain/range index pairing.
std::vector<std::pair<int, int>> dense_pairs(const Complex& c, const Bijection& psi) {
  std::vector<std::pair<int, int>> out;
  Bits dom(c.vertex_count()), ran(c.vertex_count());
  for (const auto& [a, b] : psi.pairs) {
    int x = c.require_vertex(a), y = c.require_vertex(b);
    if (dom.test(x) || ran.test(y))
      fail(ErrorCode::NotDisjointFacets, "pairing repeats a vertex");
    dom.set(x);
    ran.set(y);
    out.emplace_back(x, y);
  }
  if (dom.intersects(ran))
    fail(ErrorCode::NotDisjointFacets, "paired facets are not disjoint");
  if (!c.is_facet(dom) || !c.is_facet(ran))
    fail(ErrorCode::NotDisjointFacets, "pairing endpoints are not facets");
  return out;
}

}  // namespace

bool is_admissible(const Complex& c, const Bijection& psi) {
  auto pairs = dense_pairs(c, psi);
  Graph g = c.edge_graph();
  for (auto [x, y] : pairs) {
    auto dist = g.distance(x, y);
    if (dist && *dist < 3) return false;
  }
  return true;
}

Complex handle_add(const Complex& c, const Bijection& psi, SurgeryRecord* rec) {
  auto pairs = dense_pairs(c, psi);
  if (!is_admissible(c, psi))
    fail(ErrorCode::NotAdmissible, "some paired vertices are at distance < 3");

  int n = c.vertex_count();
  Bits dom(n), ran(n);
  for (auto [x, y] : pairs) {
    dom.set(x);
    ran.set(y);
  }

  // Quotient: range vertex -> paired domain vertex; survivors keep their index.
  std::vector<int> substitute(n);
  for (int v = 0; v < n; ++v) substitute[v] = v;
  for (auto [x, y] : pairs) substitute[y] = x;

  std::vector<std::string> tokens;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (ran.test(v)) continue;
    remap[v] = int(tokens.size());
    tokens.push_back(c.token(v));
  }

  std::vector<Bits> facets;
  int m = int(tokens.size());
  for (const Bits& f : c.facets()) {
    if (f == dom || f == ran) continue;
    Bits g(m);
    f.for_each([&](int v) { g.set(remap[substitute[v]]); });
    facets.push_back(std::move(g));
  }

  if (rec) {
    rec->kind = SurgeryRecord::Kind::HandleAdd;
    rec->map = psi.pairs;
  }
  return Complex::from_dense(std::move(tokens), std::move(facets), Complex::Maximality::Reject);
}

Complex connected_sum(const Complex& x1, const Bits& sigma1, const Complex& x2,
                      const Bits& sigma2,
                      const std::vector<std::pair<std::string, std::string>>& pairing,
                      SurgeryRecord* rec) {
  if (!x1.is_facet(sigma1) || !x2.is_facet(sigma2))
    fail(ErrorCode::NotAFacet, "connected sum requires facets of the summands");
  for (const auto& tok : x2.tokens())
    if (x1.find_vertex(tok))
      fail(ErrorCode::VertexCollision, "token '" + tok + "' occurs in both summands");

  std::vector<std::vector<std::string>> union_facets;
  for (const Bits& f : x1.facets()) union_facets.push_back(x1.face_tokens(f));
  for (const Bits& f : x2.facets()) union_facets.push_back(x2.face_tokens(f));
  Complex disjoint = Complex::from_facet_tokens(union_facets);

  Bijection psi;
  if (!pairing.empty()) {
    psi.pairs = pairing;
  } else {
    // default pairing: ascending dense order on both sides
    auto t1 = x1.face_tokens(sigma1);
    auto t2 = x2.face_tokens(sigma2);
    for (size_t i = 0; i < t1.size(); ++i) psi.pairs.emplace_back(t1[i], t2[i]);
  }

  Complex out = handle_add(disjoint, psi, nullptr);
  if (rec) {
    rec->kind = SurgeryRecord::Kind::ConnectedSum;
    rec->facet = x1.face_tokens(sigma1);
    rec->facet2 = x2.face_tokens(sigma2);
    rec->map = psi.pairs;
    for (const Bits& f : x2.facets()) rec->facets2.push_back(x2.face_tokens(f));
  }
  return out;
}

Complex handle_delete(const Complex& c, const Bits& a, SurgeryRecord* rec) {
  int d = c.dim();
  // A must induce the boundary complex of a d-simplex: d+1 mutually adjacent
  // vertices, every proper subset a face, the whole set not a face.
  bool sphere = a.count() == d + 1 && !c.has_face(a);
  if (sphere) {
    auto verts = a.indices();
    for (uint64_t sub = 1; sub + 1 < (uint64_t(1) << verts.size()) && sphere; ++sub) {
      Bits face(c.vertex_count());
      for (size_t b = 0; b < verts.size(); ++b)
        if (sub >> b & 1) face.set(verts[b]);
      if (!c.has_face(face)) sphere = false;
    }
  }
  if (!sphere)
    fail(ErrorCode::NotInducedStandardSphere,
         "vertex set does not induce a standard (d-1)-sphere");

  Graph crossing = crossing_graph(c, a);
  auto comps = crossing.components();
  if (comps.size() != 2)
    fail(ErrorCode::NotTwoSided, "crossing graph has " + std::to_string(comps.size()) +
                                     " component(s), need exactly 2");

  // component id per crossing edge
  std::vector<Bits> crossing_edges;
  for (const Bits& e : c.faces(1))
    if ((e & a).count() == 1) crossing_edges.push_back(e);
  std::vector<int> side(crossing_edges.size(), -1);
  for (int which = 0; which < 2; ++which)
    for (int idx : comps[which]) side[idx] = which;

  // Every facet meeting A carries crossing edges from exactly one component.
  auto facet_side = [&](const Bits& f) {
    int s = -1;
    for (size_t i = 0; i < crossing_edges.size(); ++i)
      if (f.contains(crossing_edges[i])) {
        if (s == -1) s = side[i];
        else if (s != side[i])
          fail(ErrorCode::HypothesisViolated, "facet carries crossing edges of both sides");
      }
    return s;
  };

  // Fresh vertex sets W+ / W- for the two copies of A.
  std::vector<std::string> tokens;
  std::vector<int> keep(c.vertex_count(), -1);
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!a.test(v)) {
      keep[v] = int(tokens.size());
      tokens.push_back(c.token(v));
    }
  std::vector<int> plus(c.vertex_count(), -1), minus(c.vertex_count(), -1);
  auto fresh = [&](int v, const char* suffix) {
    std::string tok = c.token(v) + suffix;
    if (c.find_vertex(tok))
      fail(ErrorCode::VertexCollision, "token '" + tok + "' already in use");
    tokens.push_back(tok);
    return int(tokens.size()) - 1;
  };
  a.for_each([&](int v) { plus[v] = fresh(v, "+"); });
  a.for_each([&](int v) { minus[v] = fresh(v, "-"); });

  int m = int(tokens.size());
  Bits wplus(m), wminus(m);
  a.for_each([&](int v) {
    wplus.set(plus[v]);
    wminus.set(minus[v]);
  });

  std::vector<Bits> facets{wplus, wminus};
  for (const Bits& f : c.facets()) {
    int s = f.intersects(a) ? facet_side(f) : -1;
    Bits g(m);
    f.for_each([&](int v) {
      if (!a.test(v)) g.set(keep[v]);
      else g.set(s == 0 ? plus[v] : minus[v]);
    });
    facets.push_back(std::move(g));
  }

  if (rec) {
    rec->kind = SurgeryRecord::Kind::HandleDelete;
    rec->set = c.face_tokens(a);
    a.for_each([&](int v) { rec->map.emplace_back(c.token(v) + "+", c.token(v) + "-"); });
  }
  return Complex::from_dense(std::move(tokens), std::move(facets), Complex::Maximality::Reject);
}

Complex gbm(const Complex& c, const Complex& b1, const Complex& b2, SurgeryRecord* rec) {
  // B1 must sit inside C facet-for-facet, in equal dimension.
  if (b1.dim() != c.dim())
    fail(ErrorCode::NotSubcomplex, "replaced ball must have the host's dimension");
  for (const Bits& f : b1.facets()) {
    Bits host(c.vertex_count());
    bool known = true;
    f.for_each([&](int v) {
      auto w = c.find_vertex(b1.token(v));
      if (!w) known = false;
      else host.set(*w);
    });
    if (!known || !c.is_facet(host))
      fail(ErrorCode::NotSubcomplex, "a facet of the replaced ball is not a facet of the host");
  }

  WeakPmStatus s1 = weak_pm_status(b1), s2 = weak_pm_status(b2);
  if (!s1.with_boundary || !s2.with_boundary)
    fail(ErrorCode::HypothesisViolated,
         "both balls must be pure weak pseudomanifolds with boundary");

  Complex bd1 = boundary(b1), bd2 = boundary(b2);
  if (!bd1.identical_to(bd2))
    fail(ErrorCode::BoundaryMismatch, "the two balls have different boundaries");

  // Interior vertices of B2 must be fresh relative to what survives of C.
  auto interior = [](const Complex& ball, const Complex& bd) {
    std::vector<std::string> out;
    for (const auto& tok : ball.tokens())
      if (!bd.find_vertex(tok)) out.push_back(tok);
    return out;
  };
  std::vector<std::string> int1 = interior(b1, bd1), int2 = interior(b2, bd2);
  for (const auto& tok : int2) {
    bool in_b1_interior = std::find(int1.begin(), int1.end(), tok) != int1.end();
    if (c.find_vertex(tok) && !in_b1_interior)
      fail(ErrorCode::InteriorVertexCollision,
           "interior vertex '" + tok + "' of the replacement collides with the host");
  }

  // B2 n C must be exactly the common boundary.
  {
    std::vector<Bits> common;
    for (int k = 0; k <= b2.dim(); ++k)
      for (const Bits& f : b2.faces(k)) {
        Bits host(c.vertex_count());
        bool known = true;
        f.for_each([&](int v) {
          auto w = c.find_vertex(b2.token(v));
          if (!w) known = false;
          else host.set(*w);
        });
        if (known && c.has_face(host)) common.push_back(host);
      }
    Complex meet = Complex::from_dense(c.tokens(), std::move(common), Complex::Maximality::Drop);
    if (!meet.identical_to(bd2))
      fail(ErrorCode::BoundaryMismatch, "replacement meets the host beyond the boundary");
  }

  // (C \ B1) u B2, by facet tokens.
  std::vector<std::vector<std::string>> facets;
  for (const Bits& f : c.facets()) {
    auto toks = c.face_tokens(f);
    Bits inside(b1.vertex_count());
    bool known = true;
    f.for_each([&](int v) {
      auto w = b1.find_vertex(c.token(v));
      if (!w) known = false;
      else inside.set(*w);
    });
    if (known && b1.is_facet(inside)) continue;
    facets.push_back(std::move(toks));
  }
  for (const Bits& f : b2.facets()) facets.push_back(b2.face_tokens(f));

  if (rec) {
    rec->kind = SurgeryRecord::Kind::Gbm;
    for (const Bits& f : b1.facets()) rec->ball1.push_back(b1.face_tokens(f));
    for (const Bits& f : b2.facets()) rec->ball2.push_back(b2.face_tokens(f));
    rec->ball_status_asserted = true;
  }
  return Complex::from_facet_tokens(facets);
}

DecompositionCase decompose_2manifold(const Complex& c) {
  if (!is_closed_2manifold(c) || !c.is_connected())
    fail(ErrorCode::HypothesisViolated, "need a connected closed triangulated 2-manifold");
  if (!is_orientable_2manifold(c))
    fail(ErrorCode::HypothesisViolated, "non-orientable input is unsupported");

  if (c.vertex_count() == 4) return CaseStandardSphere{};

  // A diagonal of some vertex link that is an edge of the complex yields an
  // induced 3-cycle to cut along.
  Graph g = c.edge_graph();
  for (int v = 0; v < c.vertex_count(); ++v) {
    auto nbrs = g.neighbors(v).indices();
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int y = nbrs[i], z = nbrs[j];
        if (!g.adjacent(y, z)) continue;
        Bits tri(c.vertex_count());
        tri.set(v);
        tri.set(y);
        tri.set(z);
        if (c.has_face(tri)) continue;  // that is a 2-face, not a diagonal
        Complex cut = handle_delete(c, tri);
        auto comps = cut.connected_components();
        std::vector<std::string> seam = c.face_tokens(tri);
        if (comps.size() == 2) {
          auto part = [&](const std::vector<int>& comp) {
            Bits set(cut.vertex_count());
            for (int x : comp) set.set(x);
            return cut.induced(set);
          };
          return CaseConnectedSum{part(comps[0]), part(comps[1]), seam};
        }
        Bijection psi;
        tri.for_each(
            [&](int x) { psi.pairs.emplace_back(c.token(x) + "+", c.token(x) + "-"); });
        return CaseHandleAddition{cut, seam, psi};
      }
  }

  // No vertex link has a diagonal edge: remove the smallest vertex by
  // swapping its star for a fan over its link.
  int u = 0;
  Bits uface(c.vertex_count());
  uface.set(u);
  Complex lk = c.link(uface);

  // Walk the link cycle starting at its smallest vertex, toward its smaller
  // neighbour.
  Graph lg = lk.edge_graph();
  std::vector<int> cycle{0};
  {
    auto first = lg.neighbors(0).indices();
    cycle.push_back(std::min(first[0], first[1]));
    while (int(cycle.size()) < lk.vertex_count()) {
      int cur = cycle.back(), prev = cycle[cycle.size() - 2];
      auto nb = lg.neighbors(cur).indices();
      cycle.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
  }

  std::vector<std::vector<std::string>> fan;
  for (size_t i = 1; i + 1 < cycle.size(); ++i)
    fan.push_back({lk.token(cycle[0]), lk.token(cycle[i]), lk.token(cycle[i + 1])});
  Complex ball = Complex::from_facet_tokens(fan);

  Complex y = gbm(c, c.star(u), ball);
  return CaseGbmReduction{c.token(u), ball, y};
}

std::optional<Bijection> find_admissible_bijection(const Complex& c, const Bits& sigma1,
                                                   const Bits& sigma2) {
  if (!c.is_facet(sigma1) || !c.is_facet(sigma2) || sigma1.intersects(sigma2))
    return std::nullopt;
  Graph g = c.edge_graph();
  auto dom = sigma1.indices(), ran = sigma2.indices();
  int k = int(dom.size());
  std::vector<std::vector<char>> allowed(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto dist = g.distance(dom[i], ran[j]);
      allowed[i][j] = !dist || *dist >= 3;
    }
  std::vector<int> match(k, -1);
  std::vector<char> used(k, 0);
  // lexicographically first assignment in domain order
  auto backtrack = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int j = 0; j < k; ++j) {
      if (used[j] || !allowed[i][j]) continue;
      used[j] = 1;
      match[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  if (!backtrack(backtrack, 0)) return std::nullopt;
  Bijection psi;
  for (int i = 0; i < k; ++i)
    psi.pairs.emplace_back(c.token(dom[i]), c.token(ran[match[i]]));
  return psi;
}

std::optional<Bijection> find_admissible_pair(const Complex& c) {
  const auto& facets = c.facets();
  for (size_t i = 0; i < facets.size(); ++i)
    for (size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i].intersects(facets[j])) continue;
      if (auto psi = find_admissible_bijection(c, facets[i], facets[j])) return psi;
    }
  return std::nullopt;
}

}  // namespace pm
