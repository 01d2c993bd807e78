#include "pm/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace pm {

namespace {

std::string face_to_string(const Bits& f, const std::vector<std::string>& tokens) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  f.for_each([&](int v) {
    if (!first) out << ' ';
    out << tokens[v];
    first = false;
  });
  out << '}';
  return out.str();
}

}  // namespace

Complex::Complex() : cache_(std::make_shared<FaceCache>()) {
  facets_.push_back(Bits(0));  // the empty face
}

Complex Complex::from_facet_tokens(const std::vector<std::vector<std::string>>& facets) {
  // First pass assigns dense indices in first-appearance order.
  std::vector<std::string> tokens;
  std::unordered_map<std::string, int> index;
  for (const auto& facet : facets) {
    if (facet.empty()) fail(ErrorCode::ArgumentOutOfRange, "facets must be non-empty");
    for (const auto& tok : facet) {
      if (tok.empty() || tok.find_first_of(" \t\r\n#") != std::string::npos)
        fail(ErrorCode::InvalidToken, "token '" + tok + "' is empty or contains reserved characters");
      if (index.try_emplace(tok, int(tokens.size())).second) tokens.push_back(tok);
    }
  }
  int n = int(tokens.size());
  std::vector<Bits> faces;
  faces.reserve(facets.size());
  for (const auto& facet : facets) {
    Bits b(n);
    for (const auto& tok : facet) b.set(index.at(tok));
    if (b.count() != int(facet.size())) {
      std::ostringstream msg;
      for (const auto& tok : facet) msg << ' ' << tok;
      fail(ErrorCode::DuplicateVertexInFacet, "facet" + msg.str() + " repeats a vertex");
    }
    faces.push_back(std::move(b));
  }
  return from_dense(std::move(tokens), std::move(faces), Maximality::Reject);
}

Complex Complex::from_dense(std::vector<std::string> tokens, std::vector<Bits> faces,
                            Maximality policy) {
  Complex c;
  c.facets_.clear();
  c.tokens_ = std::move(tokens);
  c.n_ = int(c.tokens_.size());
  for (int v = 0; v < c.n_; ++v) c.index_.emplace(c.tokens_[v], v);

  std::sort(faces.begin(), faces.end(), Bits::lex_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  if (policy == Maximality::Reject) {
    for (size_t i = 0; i < faces.size(); ++i)
      for (size_t j = 0; j < faces.size(); ++j)
        if (i != j && faces[j].contains(faces[i]))
          fail(ErrorCode::NonMaximalFacet,
               "facet " + face_to_string(faces[i], c.tokens_) + " is contained in " +
                   face_to_string(faces[j], c.tokens_));
  } else {
    faces = maximal_of(std::move(faces));
  }

  // Each vertex must appear in some facet; unused tokens are dropped and the
  // remaining ones re-densified in first-appearance order.
  Bits used = faces.empty() ? Bits(c.n_) : faces[0];
  for (const Bits& f : faces) used |= f;
  if (used.count() != c.n_) {
    std::vector<std::string> kept;
    std::vector<int> remap(c.n_, -1);
    for (int v = 0; v < c.n_; ++v)
      if (used.test(v)) {
        remap[v] = int(kept.size());
        kept.push_back(c.tokens_[v]);
      }
    std::vector<Bits> remapped;
    remapped.reserve(faces.size());
    for (const Bits& f : faces) {
      Bits g(int(kept.size()));
      f.for_each([&](int v) { g.set(remap[v]); });
      remapped.push_back(std::move(g));
    }
    return from_dense(std::move(kept), std::move(remapped), policy);
  }

  if (faces.empty()) faces.push_back(Bits(c.n_));  // the {empty face} complex
  c.facets_ = std::move(faces);
  c.dim_ = -1;
  for (const Bits& f : c.facets_) c.dim_ = std::max(c.dim_, f.count() - 1);
  return c;
}

std::vector<Bits> Complex::maximal_of(std::vector<Bits> faces) {
  std::vector<Bits> out;
  for (size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < faces.size() && !dominated; ++j)
      if (i != j && faces[j].contains(faces[i]) && faces[i] != faces[j]) dominated = true;
    if (!dominated) out.push_back(faces[i]);
  }
  return out;
}

std::optional<int> Complex::find_vertex(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Complex::require_vertex(std::string_view token) const {
  auto v = find_vertex(token);
  if (!v) fail(ErrorCode::UnknownVertex, "no vertex with token '" + std::string(token) + "'");
  return *v;
}

bool Complex::is_facet(const Bits& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f, Bits::lex_less);
}

void Complex::build_cache() const {
  std::call_once(cache_->once, [this] {
    auto& by_dim = cache_->by_dim;
    by_dim.assign(size_t(dim_ + 2), {});
    std::vector<std::unordered_set<Bits, BitsHash>> seen(size_t(dim_ + 2));
    for (const Bits& facet : facets_) {
      std::vector<int> verts = facet.indices();
      int s = int(verts.size());
      // every subset of every facet, exactly once
      for (uint64_t sub = 0; sub < (uint64_t(1) << s); ++sub) {
        Bits face(n_);
        for (int b = 0; b < s; ++b)
          if (sub >> b & 1) face.set(verts[b]);
        int k = face.count() - 1;
        if (seen[k + 1].insert(face).second) by_dim[k + 1].push_back(face);
      }
    }
    for (auto& bucket : by_dim) std::sort(bucket.begin(), bucket.end(), Bits::lex_less);
    for (auto& bucket : seen) cache_->all.merge(bucket);
  });
}

const std::vector<Bits>& Complex::faces(int k) const {
  if (k < -1 || k > dim_)
    fail(ErrorCode::DimensionOutOfRange,
         "k = " + std::to_string(k) + " outside [-1, " + std::to_string(dim_) + "]");
  build_cache();
  return cache_->by_dim[k + 1];
}

bool Complex::has_face(const Bits& f) const {
  if (f.count() - 1 > dim_) return false;
  build_cache();
  return cache_->all.count(f) > 0;
}

FaceVector Complex::f_vector() const {
  std::vector<long long> counts;
  for (int k = 0; k <= dim_; ++k) counts.push_back(face_count(k));
  return FaceVector(std::move(counts));
}

Bits Complex::face_from_tokens(const std::vector<std::string>& toks) const {
  Bits b(n_);
  for (const auto& t : toks) {
    int v = require_vertex(t);
    if (b.test(v)) fail(ErrorCode::DuplicateVertexInFacet, "token '" + t + "' repeated");
    b.set(v);
  }
  return b;
}

std::vector<std::string> Complex::face_tokens(const Bits& f) const {
  std::vector<std::string> out;
  f.for_each([&](int v) { out.push_back(tokens_[v]); });
  return out;
}

Bits Complex::full_set() const {
  Bits b(n_);
  for (int v = 0; v < n_; ++v) b.set(v);
  return b;
}

Complex Complex::link(const Bits& alpha) const {
  if (!has_face(alpha)) fail(ErrorCode::NotAFace, face_to_string(alpha, tokens_) + " is not a face");
  std::vector<Bits> link_facets;
  for (const Bits& facet : facets_)
    if (facet.contains(alpha)) link_facets.push_back(facet.minus(alpha));
  return from_dense(tokens_, std::move(link_facets), Maximality::Drop);
}

Complex Complex::star(int v) const {
  Bits vert(n_);
  vert.set(v);
  if (!has_face(vert)) fail(ErrorCode::NotAFace, "no vertex " + std::to_string(v));
  std::vector<Bits> star_facets;
  for (const Bits& facet : facets_)
    if (facet.test(v)) star_facets.push_back(facet);
  return from_dense(tokens_, std::move(star_facets), Maximality::Drop);
}

Complex Complex::antistar(const Bits& alpha) const {
  if (!has_face(alpha)) fail(ErrorCode::NotAFace, face_to_string(alpha, tokens_) + " is not a face");
  std::vector<Bits> rest;
  for (const Bits& facet : facets_) rest.push_back(facet.minus(alpha));
  return from_dense(tokens_, std::move(rest), Maximality::Drop);
}

Complex Complex::induced(const Bits& A) const {
  std::vector<Bits> cut;
  for (const Bits& facet : facets_) cut.push_back(facet & A);
  return from_dense(tokens_, std::move(cut), Maximality::Drop);
}

Complex Complex::simplicial_complement(const Complex& y) const {
  Bits a(n_);
  for (const auto& tok : y.tokens()) a.set(require_vertex(tok));
  if (!induced(a).identical_to(y))
    fail(ErrorCode::NotInduced, "subcomplex is not induced");
  return induced(full_set().minus(a));
}

Complex Complex::skeleton(int k) const {
  if (k < 0 || k > dim_)
    fail(ErrorCode::DimensionOutOfRange,
         "k = " + std::to_string(k) + " outside [0, " + std::to_string(dim_) + "]");
  std::vector<Bits> out = faces(k);
  for (const Bits& facet : facets_)
    if (facet.count() - 1 < k) out.push_back(facet);
  return from_dense(tokens_, std::move(out), Maximality::Drop);
}

Complex Complex::join(const Complex& x, const Complex& y) {
  std::vector<std::string> tokens = x.tokens_;
  for (const auto& tok : y.tokens_) {
    if (x.index_.count(tok))
      fail(ErrorCode::VertexCollision, "token '" + tok + "' occurs in both factors");
    tokens.push_back(tok);
  }
  int n = int(tokens.size());
  std::vector<Bits> facets;
  facets.reserve(x.facets_.size() * y.facets_.size());
  for (const Bits& fx : x.facets_)
    for (const Bits& fy : y.facets_) {
      Bits f(n);
      fx.for_each([&](int v) { f.set(v); });
      fy.for_each([&](int v) { f.set(v + x.n_); });
      facets.push_back(std::move(f));
    }
  return from_dense(std::move(tokens), std::move(facets), Maximality::Drop);
}

Complex Complex::cone(const std::string& apex, const Complex& y) {
  return join(from_facet_tokens({{apex}}), y);
}

Complex Complex::one_point_suspension(const Complex& x, int u, const std::string& v) {
  if (x.index_.count(v))
    fail(ErrorCode::VertexCollision, "token '" + v + "' already a vertex");
  Bits uface(x.n_);
  uface.set(u);
  Complex ast = x.antistar(uface);

  std::vector<std::string> tokens = x.tokens_;
  tokens.push_back(v);
  int n = int(tokens.size());
  int vi = n - 1;

  std::vector<Bits> facets;
  // u * antistar(u): tokens of ast are a subset of x's, in x's order
  for (const Bits& f : ast.facets()) {
    Bits g(n);
    f.for_each([&](int w) { g.set(x.require_vertex(ast.token(w))); });
    g.set(u);
    facets.push_back(std::move(g));
  }
  // v * X
  for (const Bits& f : x.facets()) {
    Bits g(n);
    f.for_each([&](int w) { g.set(w); });
    g.set(vi);
    facets.push_back(std::move(g));
  }
  return from_dense(std::move(tokens), std::move(facets), Maximality::Drop);
}

Graph Complex::edge_graph() const {
  Graph g(n_, tokens_);
  if (dim_ >= 1)
    for (const Bits& e : faces(1)) {
      auto idx = e.indices();
      g.add_edge(idx[0], idx[1]);
    }
  return g;
}

int Complex::degree(const Bits& alpha) const {
  if (!has_face(alpha)) fail(ErrorCode::NotAFace, face_to_string(alpha, tokens_) + " is not a face");
  Bits seen(n_);
  for (const Bits& facet : facets_)
    if (facet.contains(alpha)) seen |= facet.minus(alpha);
  return seen.count();
}

std::optional<int> Complex::graph_distance(int u, int v) const {
  return edge_graph().distance(u, v);
}

std::vector<std::vector<int>> Complex::connected_components() const {
  return edge_graph().components();
}

bool Complex::is_connected() const { return edge_graph().connected(); }

bool Complex::identical_to(const Complex& other) const {
  if (n_ != other.n_ || dim_ != other.dim_ || facets_.size() != other.facets_.size())
    return false;
  std::vector<int> map(n_);
  for (int v = 0; v < n_; ++v) {
    auto w = other.find_vertex(tokens_[v]);
    if (!w) return false;
    map[v] = *w;
  }
  std::vector<Bits> mapped;
  mapped.reserve(facets_.size());
  for (const Bits& f : facets_) {
    Bits g(other.n_);
    f.for_each([&](int v) { g.set(map[v]); });
    mapped.push_back(std::move(g));
  }
  std::sort(mapped.begin(), mapped.end(), Bits::lex_less);
  return mapped == other.facets_;
}

Complex Complex::relabeled(const std::unordered_map<std::string, std::string>& renames) const {
  std::vector<std::string> tokens;
  tokens.reserve(n_);
  for (const auto& tok : tokens_) {
    auto it = renames.find(tok);
    tokens.push_back(it == renames.end() ? tok : it->second);
  }
  std::unordered_set<std::string> dedup(tokens.begin(), tokens.end());
  if (int(dedup.size()) != n_)
    fail(ErrorCode::VertexCollision, "renaming identifies distinct vertices");
  return from_dense(std::move(tokens), facets_, Maximality::Reject);
}

namespace {

struct IsoState {
  const Complex* a;
  const Complex* b;
  Graph ga, gb;
  std::vector<int> map;     // a-vertex -> b-vertex or -1
  std::vector<int> inverse; // b-vertex -> a-vertex or -1

  bool extend(int v) {
    int n = a->vertex_count();
    if (v == n) {
      // adjacency was enforced along the way; facets decide
      std::vector<Bits> mapped;
      for (const Bits& f : a->facets()) {
        Bits g(n);
        f.for_each([&](int x) { g.set(map[x]); });
        mapped.push_back(std::move(g));
      }
      std::sort(mapped.begin(), mapped.end(), Bits::lex_less);
      return mapped == b->facets();
    }
    for (int w = 0; w < n; ++w) {
      if (inverse[w] >= 0) continue;
      if (ga.degree(v) != gb.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (ga.adjacent(u, v) != gb.adjacent(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      inverse[w] = v;
      if (extend(v + 1)) return true;
      map[v] = -1;
      inverse[w] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Complex& a, const Complex& b) {
  if (a.vertex_count() != b.vertex_count() || a.dim() != b.dim()) return false;
  if (!(a.f_vector() == b.f_vector())) return false;
  IsoState st{&a, &b, a.edge_graph(), b.edge_graph(),
              std::vector<int>(a.vertex_count(), -1), std::vector<int>(a.vertex_count(), -1)};
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(st.ga.degree(v));
    db.push_back(st.gb.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return st.extend(0);
}

}  // namespace pm
