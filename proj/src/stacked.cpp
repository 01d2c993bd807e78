#include "pm/stacked.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pm/moves.hpp"
#include "pm/verify.hpp"

namespace pm {

namespace {

bool is_standard_sphere(const Complex& c) {
  int d = c.dim();
  return c.vertex_count() == d + 2 && c.facet_count() == d + 2;
}

Complex standard_sphere_numeric(int d) {
  std::vector<std::vector<std::string>> facets;
  for (int skip = d + 2; skip >= 1; --skip) {  // tokens appear in order 1,2,...
    std::vector<std::string> facet;
    for (int v = 1; v <= d + 2; ++v)
      if (v != skip) facet.push_back(std::to_string(v));
    facets.push_back(std::move(facet));
  }
  return Complex::from_facet_tokens(facets);
}

}  // namespace

StackScript StackScript::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  StackScript script;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 3 || toks[0] != "stack" || toks[1].rfind("d=", 0) != 0 ||
          toks[2].rfind("seed=", 0) != 0)
        fail(ErrorCode::ParseError, "expected header 'stack d=<d> seed=<seed|none>'");
      script.d = std::stoi(toks[1].substr(2));
      std::string seed = toks[2].substr(5);
      if (seed != "none") script.seed = std::stoull(seed);
      header = true;
      continue;
    }
    StackStep step;
    if (toks[0] == "random") {
      if (toks.size() != 3 || toks[1] != "new")
        fail(ErrorCode::ParseError, "expected 'random new <token>'");
      step.new_token = toks[2];
    } else if (toks[0] == "facet") {
      if (toks.size() < 4 || toks[toks.size() - 2] != "new")
        fail(ErrorCode::ParseError, "expected 'facet <tokens> new <token>'");
      step.facet = std::vector<std::string>(toks.begin() + 1, toks.end() - 2);
      step.new_token = toks.back();
    } else {
      fail(ErrorCode::ParseError, "unknown step '" + toks[0] + "'");
    }
    script.steps.push_back(std::move(step));
  }
  if (!header) fail(ErrorCode::ParseError, "missing script header");
  return script;
}

std::string StackScript::to_text() const {
  std::ostringstream out;
  out << "stack d=" << d << " seed=" << (seed ? std::to_string(*seed) : "none") << '\n';
  for (const auto& step : steps) {
    if (step.facet) {
      out << "facet";
      for (const auto& t : *step.facet) out << ' ' << t;
      out << " new " << step.new_token << '\n';
    } else {
      out << "random new " << step.new_token << '\n';
    }
  }
  return out.str();
}

StackScript StackScript::random(int d, int steps, uint64_t seed) {
  StackScript script;
  script.d = d;
  script.seed = seed;
  for (int i = 0; i < steps; ++i)
    script.steps.push_back({std::nullopt, std::to_string(d + 3 + i)});
  return script;
}

Complex generate_stacked(const StackScript& script) {
  if (script.d < 1) fail(ErrorCode::ArgumentOutOfRange, "dimension must be >= 1");
  Complex c = standard_sphere_numeric(script.d);
  std::mt19937_64 rng(script.seed.value_or(0));
  for (const auto& step : script.steps) {
    Bits sigma;
    if (step.facet) {
      sigma = c.face_from_tokens(*step.facet);
      if (!c.is_facet(sigma))
        fail(ErrorCode::SelectorInvalid, "selected facet is not a facet at this step");
    } else {
      if (!script.seed)
        fail(ErrorCode::SelectorInvalid, "random step in a script without a seed");
      sigma = c.facets()[rng() % c.facets().size()];
    }
    c = star_vertex(c, sigma, step.new_token);
  }
  return c;
}

FaceVector stacked_fvector(int d, long long n) {
  if (d < 1 || n < d + 2)
    fail(ErrorCode::ArgumentOutOfRange, "need d >= 1 and n >= d+2");
  std::vector<long long> counts(d + 1);
  counts[0] = n;
  for (int j = 1; j < d; ++j) counts[j] = binomial(d + 1, j) * n - j * binomial(d + 2, j + 1);
  if (d >= 1) counts[d] = d * n - (d + 2) * (d - 1);
  return FaceVector(std::move(counts));
}

StackedCertificate is_stacked(const Complex& c) {
  if (c.dim() < 1 || !is_normal_pm(c))
    fail(ErrorCode::NotNormalPM, "recognizer requires a normal pseudomanifold");
  StackedCertificate cert;
  Complex cur = c;
  int d = c.dim();
  while (true) {
    if (cur.vertex_count() == d + 2) {
      cert.stacked = is_standard_sphere(cur);
      return cert;
    }
    int pick = -1;
    for (int v = 0; v < cur.vertex_count() && pick < 0; ++v) {
      Bits vert(cur.vertex_count());
      vert.set(v);
      if (cur.degree(vert) != d + 1) continue;
      Bits sigma(cur.vertex_count());
      for (const Bits& f : cur.facets())
        if (f.test(v)) sigma |= f;
      sigma.reset(v);
      if (!cur.has_face(sigma)) pick = v;
    }
    if (pick < 0) {
      cert.stacked = false;
      return cert;
    }
    cert.trace.push_back(cur.token(pick));
    cur = collapse_vertex(cur, pick);
  }
}

Complex clique_closure(const Complex& c) {
  if (c.dim() < 2)
    fail(ErrorCode::DimensionOutOfRange, "clique closure requires dimension >= 2");
  Graph g = c.edge_graph();
  std::vector<Bits> facets = maximal_cliques(g);
  return Complex::from_dense(c.tokens(), std::move(facets), Complex::Maximality::Drop);
}

bool is_one_stacked_via_cliques(const Complex& c) {
  if (c.dim() < 2 || !is_normal_pm(c))
    fail(ErrorCode::NotNormalPM, "recognizer requires a normal pseudomanifold of dimension >= 2");
  Complex closure = clique_closure(c);
  WeakPmStatus st = weak_pm_status(closure);
  if (!st.with_boundary) return false;
  if (!boundary(closure).identical_to(c)) return false;
  // certificate: the closure's facets are the (d+2)-cliques, one per added
  // vertex plus one
  long long expected = c.vertex_count() - c.dim() - 1;
  long long count = (long long)cliques_of_size(c.edge_graph(), c.dim() + 2).size();
  return count == expected;
}

Complex stacked_ball_antistar(const Complex& c, int v) {
  StackedCertificate cert = is_stacked(c);
  if (!cert.stacked) fail(ErrorCode::NotStacked, "host is not a stacked sphere");
  Bits vert(c.vertex_count());
  vert.set(v);
  Complex ball = c.antistar(vert);

  int d = c.dim();
  long long boundary_vertices = c.degree(vert);
  long long interior = ball.vertex_count() - boundary_vertices;
  long long expected_facets = boundary_vertices + (interior - 1) * d;
  if (ball.facet_count() != expected_facets)
    fail(ErrorCode::NotStacked, "facet-count certificate failed");
  return ball;
}

}  // namespace pm
