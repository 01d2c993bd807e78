#include "pm/rigidity.hpp"

#include <sstream>

#include "pm/verify.hpp"

namespace pm {

long long edges_meeting(const Complex& c, const Bits& a) {
  if (a.universe() != c.vertex_count())
    fail(ErrorCode::UnknownVertex, "vertex set is not over this complex");
  if (c.dim() < 1) return 0;
  long long count = 0;
  for (const Bits& e : c.faces(1))
    if (e.intersects(a)) ++count;
  return count;
}

long long min_edge_bound(long long n, int d, int q) {
  if (n < d + 1) fail(ErrorCode::ArgumentOutOfRange, "need n >= d+1");
  return (n - d - 1) * q + binomial(d + 1, 2);
}

RigidityReport is_q_rigid(const Complex& c, int q, const SweepOptions& opts) {
  if (q < 1) fail(ErrorCode::ArgumentOutOfRange, "q must be positive");
  if (!is_pure(c)) fail(ErrorCode::NotPure, "rigidity is checked on pure complexes");
  int n = c.vertex_count();
  if (n > opts.max_vertices)
    fail(ErrorCode::TooLargeForExhaustiveSearch,
         std::to_string(n) + " vertices exceed the exhaustive limit of " +
             std::to_string(opts.max_vertices));

  RigidityReport report;
  report.q = q;
  report.n = n;
  report.d = c.dim();
  report.edges_total = c.dim() >= 1 ? c.face_count(1) : 0;
  report.minimal_bound = min_edge_bound(n, c.dim(), q);

  if (!c.is_connected()) {
    report.verdict = false;
    report.disconnected = true;
    return report;
  }

  rigidity_detail::SweepInput in;
  in.n = n;
  in.q = q;
  Graph g = c.edge_graph();
  for (int v = 0; v < n; ++v) {
    uint32_t adj = 0;
    g.neighbors(v).for_each([&](int w) { adj |= uint32_t(1) << w; });
    in.adjacency.push_back(adj);
    in.degree.push_back(g.degree(v));
  }
  for (const Bits& f : c.facets()) {
    uint32_t mask = 0;
    f.for_each([&](int v) { mask |= uint32_t(1) << v; });
    in.facets.push_back(mask);
  }

  rigidity_detail::SweepResult res = opts.serial
                                         ? rigidity_detail::sweep_serial(in)
                                         : rigidity_detail::sweep_blocked(in, opts.workers);
  report.verdict = !res.violated;
  report.subsets_examined = res.examined;
  report.subsets_pruned = res.pruned;
  if (res.violated) {
    std::vector<std::string> toks;
    for (int v = 0; v < n; ++v)
      if (res.witness >> v & 1) toks.push_back(c.token(v));
    report.witness = std::move(toks);
    report.witness_edges = res.witness_edges;
    report.witness_bound = (long long)q * __builtin_popcount(res.witness);
  }
  return report;
}

RigidityReport is_minimally_q_rigid(const Complex& c, int q, const SweepOptions& opts) {
  RigidityReport report = is_q_rigid(c, q, opts);
  report.minimal = report.verdict && report.edges_total == report.minimal_bound;
  return report;
}

std::string RigidityReport::to_text() const {
  std::ostringstream out;
  out << "rigid=" << (verdict ? "true" : "false");
  if (minimal) out << " minimal=" << (*minimal ? "true" : "false");
  out << " edges=" << edges_total << " bound=" << minimal_bound;
  out << '\n';
  out << "q=" << q << " n=" << n << " d=" << d << '\n';
  if (disconnected) out << "witness=disconnected\n";
  else if (witness) {
    out << "witness=";
    for (size_t i = 0; i < witness->size(); ++i) out << (i ? "," : "") << (*witness)[i];
    out << " witness_edges=" << witness_edges << " witness_bound=" << witness_bound << '\n';
  }
  out << "subsets_examined=" << subsets_examined << " subsets_pruned=" << subsets_pruned
      << '\n';
  return out.str();
}

}  // namespace pm
