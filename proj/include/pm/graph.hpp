#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pm/bits.hpp"

namespace pm {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Vertices may carry display labels (used for facet and crossing graphs,
/// whose vertices are not vertices of the originating complex).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  long long edge_count() const;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bits& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  std::vector<std::pair<int, int>> edges() const;

  /// BFS distance; nullopt when u and v are in different components.
  std::optional<int> distance(int u, int v) const;

  std::vector<std::vector<int>> components() const;
  bool connected() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

 private:
  int n_ = 0;
  std::vector<Bits> adj_;
  std::vector<std::string> labels_;
};

/// All cliques of exactly `size` vertices, in lexicographic order.
std::vector<Bits> cliques_of_size(const Graph& g, int size);

/// All maximal cliques (Bron-Kerbosch with pivoting); sorted lexicographically.
std::vector<Bits> maximal_cliques(const Graph& g);

}  // namespace pm
