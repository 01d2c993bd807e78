#include "pm/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace pm {

namespace {

std::vector<std::string> witness_tokens(const Complex& c, const Bits& face) {
  return c.face_tokens(face);
}

/// Facet indices containing each (d-1)-face.
std::map<Bits, std::vector<int>, bool (*)(const Bits&, const Bits&)> ridge_incidence(
    const Complex& c) {
  std::map<Bits, std::vector<int>, bool (*)(const Bits&, const Bits&)> inc(Bits::lex_less);
  int d = c.dim();
  const auto& facets = c.facets();
  for (int i = 0; i < int(facets.size()); ++i) {
    auto verts = facets[i].indices();
    if (int(verts.size()) != d + 1) continue;
    for (int drop = 0; drop <= d; ++drop) {
      Bits ridge = facets[i];
      ridge.reset(verts[drop]);
      inc[ridge].push_back(i);
    }
  }
  return inc;
}

}  // namespace

bool is_pure(const Complex& c) {
  for (const Bits& f : c.facets())
    if (f.count() - 1 != c.dim()) return false;
  return true;
}

WeakPmStatus weak_pm_status(const Complex& c) {
  WeakPmStatus st;
  st.pure = is_pure(c);
  if (!st.pure) {
    for (const Bits& f : c.facets())
      if (f.count() - 1 != c.dim()) {
        st.witness = f;
        break;
      }
    return st;
  }
  if (c.dim() < 1) {
    // dimension 0: the empty face is the only (d-1)-face
    long long facets = c.facet_count();
    st.closed = c.dim() == 0 && facets == 2;
    st.with_boundary = c.dim() == 0 && facets == 1;
    if (!st.closed && !st.with_boundary) st.witness = Bits(c.vertex_count());
    return st;
  }
  auto inc = ridge_incidence(c);
  bool any_single = false;
  for (const auto& [ridge, facets] : inc) {
    if (int(facets.size()) > 2) {
      st.witness = ridge;
      return st;
    }
    if (facets.size() == 1) any_single = true;
  }
  st.closed = !any_single;
  st.with_boundary = any_single;
  return st;
}

bool is_weak_pm(const Complex& c) { return weak_pm_status(c).closed; }

bool is_weak_pm_with_boundary(const Complex& c) { return weak_pm_status(c).with_boundary; }

Complex boundary(const Complex& c) {
  WeakPmStatus st = weak_pm_status(c);
  if (!st.with_boundary)
    fail(ErrorCode::NotWeakPMWithBoundary,
         st.closed ? "complex has no boundary" : "not a weak pseudomanifold with boundary");
  std::vector<Bits> rim;
  for (const auto& [ridge, facets] : ridge_incidence(c))
    if (facets.size() == 1) rim.push_back(ridge);
  return Complex::from_dense(c.tokens(), std::move(rim), Complex::Maximality::Drop);
}

Graph facet_graph(const Complex& c) {
  if (!is_pure(c)) fail(ErrorCode::NotPure, "facet graph requires a pure complex");
  std::vector<std::string> labels;
  for (const Bits& f : c.facets()) {
    auto toks = c.face_tokens(f);
    std::string lab;
    for (size_t i = 0; i < toks.size(); ++i) lab += (i ? " " : "") + toks[i];
    labels.push_back(lab);
  }
  Graph g(int(c.facet_count()), std::move(labels));
  for (const auto& [ridge, facets] : ridge_incidence(c))
    for (size_t i = 0; i < facets.size(); ++i)
      for (size_t j = i + 1; j < facets.size(); ++j) g.add_edge(facets[i], facets[j]);
  return g;
}

bool is_strongly_connected(const Complex& c) { return facet_graph(c).connected(); }

bool is_normal_pm(const Complex& c) {
  if (!is_weak_pm(c)) return false;
  int d = c.dim();
  for (int k = -1; k <= d - 2; ++k)
    for (const Bits& alpha : c.faces(k))
      if (!c.link(alpha).is_connected()) return false;
  return true;
}

ClassReport classify(const Complex& c) {
  ClassReport r;
  r.n = c.vertex_count();
  r.dim = c.dim();
  r.euler = c.f_vector().euler();

  WeakPmStatus st = weak_pm_status(c);
  r.is_pure = st.pure;
  r.is_weak_pm = st.closed;
  r.is_weak_pm_with_boundary = st.with_boundary;
  r.has_boundary = st.with_boundary;
  if (st.witness) r.witness = witness_tokens(c, *st.witness);

  r.is_strongly_connected = st.pure && facet_graph(c).connected();
  r.is_pseudomanifold = (st.closed || st.with_boundary) && r.is_strongly_connected;

  bool links_ok = st.closed || st.with_boundary;
  if (links_ok) {
    for (int k = -1; k <= c.dim() - 2 && links_ok; ++k)
      for (const Bits& alpha : c.faces(k))
        if (!c.link(alpha).is_connected()) {
          links_ok = false;
          if (!r.witness) r.witness = witness_tokens(c, alpha);
          break;
        }
  }
  r.is_normal = st.closed && links_ok;

  r.is_closed_2manifold = is_closed_2manifold(c);
  if (r.is_closed_2manifold) r.is_orientable = is_orientable_2manifold(c);
  return r;
}

std::string ClassReport::to_text() const {
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "n=" << n << '\n'
      << "dim=" << dim << '\n'
      << "pure=" << flag(is_pure) << '\n'
      << "weak_pm=" << flag(is_weak_pm) << '\n'
      << "weak_pm_with_boundary=" << flag(is_weak_pm_with_boundary) << '\n'
      << "strongly_connected=" << flag(is_strongly_connected) << '\n'
      << "pseudomanifold=" << flag(is_pseudomanifold) << '\n'
      << "normal_pm=" << flag(is_normal) << '\n'
      << "closed_2manifold=" << flag(is_closed_2manifold) << '\n';
  if (is_orientable) out << "orientable=" << flag(*is_orientable) << '\n';
  out << "euler=" << euler << '\n';
  if (witness) {
    out << "witness=";
    for (size_t i = 0; i < witness->size(); ++i) out << (i ? "," : "") << (*witness)[i];
    out << '\n';
  }
  return out.str();
}

Graph crossing_graph(const Complex& c, const Bits& a) {
  if (c.dim() < 2 || !is_normal_pm(c))
    fail(ErrorCode::HypothesisViolated,
         "host must be a normal pseudomanifold of dimension >= 2");
  Complex sub = c.induced(a);
  if (sub.dim() != c.dim() - 1 || !is_normal_pm(sub))
    fail(ErrorCode::HypothesisViolated,
         "vertex set must induce a normal pseudomanifold of one lower dimension");

  std::vector<Bits> crossing;  // edges with exactly one end in A
  for (const Bits& e : c.faces(1))
    if ((e & a).count() == 1) crossing.push_back(e);

  std::vector<std::string> labels;
  for (const Bits& e : crossing) {
    auto toks = c.face_tokens(e);
    labels.push_back(toks[0] + "-" + toks[1]);
  }
  Graph g(int(crossing.size()), std::move(labels));
  for (size_t i = 0; i < crossing.size(); ++i)
    for (size_t j = i + 1; j < crossing.size(); ++j) {
      Bits u = crossing[i] | crossing[j];
      if (u.count() == 3 && c.has_face(u)) g.add_edge(int(i), int(j));
    }
  return g;
}

bool is_operationally_two_sided(const Complex& c, const Bits& a) {
  return crossing_graph(c, a).components().size() == 2;
}

std::optional<Bits> find_induced_standard_sphere(const Complex& c) {
  int d = c.dim();
  Graph g = c.edge_graph();
  for (const Bits& clique : cliques_of_size(g, d + 1)) {
    if (c.has_face(clique)) continue;
    bool all_proper_subsets = true;
    auto verts = clique.indices();
    // proper subsets of sizes 3..d (pairs are edges of the clique already)
    for (uint64_t sub = 1; sub + 1 < (uint64_t(1) << verts.size()) && all_proper_subsets; ++sub) {
      int size = __builtin_popcountll(sub);
      if (size < 3) continue;
      Bits face(c.vertex_count());
      for (size_t b = 0; b < verts.size(); ++b)
        if (sub >> b & 1) face.set(verts[b]);
      if (!c.has_face(face)) all_proper_subsets = false;
    }
    if (all_proper_subsets) return clique;
  }
  return std::nullopt;
}

bool is_closed_2manifold(const Complex& c) {
  if (c.dim() != 2 || !is_weak_pm(c)) return false;
  for (int v = 0; v < c.vertex_count(); ++v) {
    Bits vert(c.vertex_count());
    vert.set(v);
    Complex lk = c.link(vert);
    // single cycle: connected, 1-dimensional, every vertex of degree 2
    if (lk.dim() != 1 || !lk.is_connected()) return false;
    Graph g = lk.edge_graph();
    for (int w = 0; w < g.vertex_count(); ++w)
      if (g.degree(w) != 2) return false;
  }
  return true;
}

bool is_orientable_2manifold(const Complex& c) {
  if (c.dim() != 2)
    fail(ErrorCode::Unsupported, "orientation propagation only runs in dimension 2");
  if (!is_closed_2manifold(c)) fail(ErrorCode::NotA2Manifold, "not a closed 2-manifold");
  const auto& facets = c.facets();
  Graph lambda = facet_graph(c);
  // orientation of facet i: a parity bit; triangle (a,b,c) with a<b<c read
  // forward (+) or backward (-). Neighbours must induce opposite directions
  // on their shared edge.
  // Direction of edge (u,v) inside the triangle with sorted vertices t read
  // cyclically: forward for (t0,t1), (t1,t2), (t2,t0).
  auto dir = [](const std::vector<int>& t, int u, int v) {
    for (int k = 0; k < 3; ++k)
      if (t[k] == u && t[(k + 1) % 3] == v) return +1;
    return -1;
  };
  std::vector<int> orient(facets.size(), -1);
  bool conflict = false;
  for (size_t seed = 0; seed < facets.size() && !conflict; ++seed) {
    if (orient[seed] != -1) continue;
    orient[seed] = 0;
    std::deque<int> queue{int(seed)};
    while (!queue.empty() && !conflict) {
      int i = queue.front();
      queue.pop_front();
      auto ti = facets[i].indices();
      lambda.neighbors(i).for_each([&](int j) {
        auto tj = facets[j].indices();
        auto e = (facets[i] & facets[j]).indices();
        int di = dir(ti, e[0], e[1]);
        int dj = dir(tj, e[0], e[1]);
        // Coherently oriented neighbours traverse a shared edge oppositely.
        int needed = (di == dj) ? 1 - orient[i] : orient[i];
        if (orient[j] == -1) {
          orient[j] = needed;
          queue.push_back(j);
        } else if (orient[j] != needed) {
          conflict = true;
        }
      });
    }
  }
  return !conflict;
}

}  // namespace pm
