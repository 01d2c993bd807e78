#include "pm/graph.hpp"

#include <algorithm>
#include <deque>

#include "pm/error.hpp"

namespace pm {

Graph::Graph(int n, std::vector<std::string> labels)
    : n_(n), adj_(n, Bits(n)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
}

void Graph::add_edge(int u, int v) {
  if (u == v) fail(ErrorCode::ArgumentOutOfRange, "loop edge " + labels_[u]);
  adj_[u].set(v);
  adj_[v].set(u);
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (const Bits& a : adj_) deg_sum += a.count();
  return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::optional<int> Graph::distance(int u, int v) const {
  if (u == v) return 0;
  std::vector<int> dist(n_, -1);
  std::deque<int> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    int found = -1;
    adj_[x].for_each([&](int y) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == v) found = y;
        queue.push_back(y);
      }
    });
    if (found == v) return dist[v];
  }
  return std::nullopt;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      adj_[x].for_each([&](int y) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

namespace {

void extend_clique(const Graph& g, Bits& current, int count, int size, int from,
                   const Bits& candidates, std::vector<Bits>& out) {
  if (count == size) {
    out.push_back(current);
    return;
  }
  if (count + candidates.count() < size) return;
  candidates.for_each([&](int v) {
    if (v < from) return;
    current.set(v);
    extend_clique(g, current, count + 1, size, v + 1, candidates & g.neighbors(v), out);
    current.reset(v);
  });
}

void bron_kerbosch(const Graph& g, Bits& r, Bits p, Bits x, std::vector<Bits>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: candidate or excluded vertex with the most candidate neighbours.
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int c = (p & g.neighbors(u)).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  Bits expand = pivot >= 0 ? p.minus(g.neighbors(pivot)) : p;
  expand.for_each([&](int v) {
    r.set(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

std::vector<Bits> cliques_of_size(const Graph& g, int size) {
  if (size < 1) fail(ErrorCode::DimensionOutOfRange, "clique size must be >= 1");
  std::vector<Bits> out;
  Bits current(g.vertex_count());
  Bits all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
  extend_clique(g, current, 0, size, 0, all, out);
  return out;  // generated in lexicographic order by construction
}

std::vector<Bits> maximal_cliques(const Graph& g) {
  std::vector<Bits> out;
  Bits r(g.vertex_count()), p(g.vertex_count()), x(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) p.set(v);
  bron_kerbosch(g, r, p, x, out);
  std::sort(out.begin(), out.end(), Bits::lex_less);
  return out;
}

}  // namespace pm
