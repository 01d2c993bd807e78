#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pm/bits.hpp"
#include "pm/error.hpp"
#include "pm/face_vector.hpp"
#include "pm/graph.hpp"

namespace pm {

/// Immutable finite simplicial complex, stored as its facet list.
///
/// Vertices carry string tokens externally and dense indices 0..n-1
/// internally, assigned in first-appearance order. Facets are kept in a
/// canonical order (lexicographic on ascending index sequences). The empty
/// face is always present; the complex whose only face is the empty set has
/// n = 0 and dimension -1 and is represented by a single empty facet.
///
/// All faces of every dimension are enumerated lazily on first demand and
/// retained; the cache is shared between copies and its population is
/// synchronized, so a Complex is safe to use from multiple threads.
class Complex {
 public:
  /// How non-maximal entries in a facet list are treated.
  enum class Maximality {
    Reject,  // a facet contained in another is a caller error
    Drop,    // keep only the maximal faces (internal constructions)
  };

  Complex();  // the {empty face} complex

  /// Builds from explicit token lists. Rejects duplicate vertices within a
  /// facet and facets contained in other facets.
  static Complex from_facet_tokens(const std::vector<std::vector<std::string>>& facets);

  /// Builds from dense-index faces over a fixed token table.
  static Complex from_dense(std::vector<std::string> tokens, std::vector<Bits> faces,
                            Maximality policy);

  int vertex_count() const { return n_; }
  int dim() const { return dim_; }

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(int v) const { return tokens_[v]; }
  std::optional<int> find_vertex(std::string_view token) const;
  int require_vertex(std::string_view token) const;

  const std::vector<Bits>& facets() const { return facets_; }
  long long facet_count() const { return (long long)facets_.size(); }
  bool is_facet(const Bits& f) const;

  /// The k-faces in lexicographic order, -1 <= k <= dim().
  const std::vector<Bits>& faces(int k) const;
  long long face_count(int k) const { return (long long)faces(k).size(); }
  bool has_face(const Bits& f) const;

  FaceVector f_vector() const;

  /// Bits over this complex's universe from vertex tokens.
  Bits face_from_tokens(const std::vector<std::string>& toks) const;
  std::vector<std::string> face_tokens(const Bits& f) const;
  Bits full_set() const;

  // -- subcomplex constructions ------------------------------------------

  /// Faces beta disjoint from alpha with alpha u beta a face. link(empty) = C.
  Complex link(const Bits& alpha) const;
  /// Cone over the link: all faces of facets through v.
  Complex star(int v) const;
  /// Faces disjoint from alpha.
  Complex antistar(const Bits& alpha) const;
  /// Faces contained in A.
  Complex induced(const Bits& A) const;
  /// Induced complex on the vertices outside Y, which must itself be induced.
  Complex simplicial_complement(const Complex& y) const;
  /// Faces of dimension <= k, 0 <= k <= dim().
  Complex skeleton(int k) const;

  // -- joins and suspensions ---------------------------------------------

  /// Faces are disjoint unions of a face of X and a face of Y; token sets
  /// must be disjoint.
  static Complex join(const Complex& x, const Complex& y);
  static Complex cone(const std::string& apex, const Complex& y);
  /// (u * antistar(u)) u (v * X) for a vertex u of X and a fresh token v.
  static Complex one_point_suspension(const Complex& x, int u, const std::string& v);

  // -- graph queries -------------------------------------------------------

  Graph edge_graph() const;
  /// Number of vertices in the link of alpha.
  int degree(const Bits& alpha) const;
  /// Edge-graph distance; nullopt when unreachable.
  std::optional<int> graph_distance(int u, int v) const;
  std::vector<std::vector<int>> connected_components() const;
  bool is_connected() const;

  // -- comparisons ---------------------------------------------------------

  /// Same token set and same facet family, token-wise (dense order may differ).
  bool identical_to(const Complex& other) const;
  Complex relabeled(const std::unordered_map<std::string, std::string>& renames) const;

 private:
  struct FaceCache {
    std::once_flag once;
    std::vector<std::vector<Bits>> by_dim;  // index k+1 holds the k-faces
    std::unordered_set<Bits, BitsHash> all;
  };

  void build_cache() const;
  static std::vector<Bits> maximal_of(std::vector<Bits> faces);

  int n_ = 0;
  int dim_ = -1;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> facets_;
  std::shared_ptr<FaceCache> cache_;
};

/// Combinatorial isomorphism test by backtracking on degree-compatible vertex
/// assignments. Intended for desk-scale complexes.
bool isomorphic(const Complex& a, const Complex& b);

}  // namespace pm
