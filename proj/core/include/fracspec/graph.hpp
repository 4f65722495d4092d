#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fracspec {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free subset of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a packed bit matrix: row v occupies `words()` 64-bit words and
/// bit u of row v is set iff uv is an edge. The matrix is kept symmetric with
/// an empty diagonal. Values are immutable once built; use GraphBuilder or the
/// free constructors below to make new ones.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  /// Largest order accepted by any constructor.
  static constexpr std::size_t kMaxOrder = 4096;

  Graph() = default;

  /// Throws InvalidInput on a loop or an endpoint >= n. Duplicate pairs
  /// (in either orientation) are merged.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t words() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }
  std::size_t degree(Vertex v) const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy of this graph with uv added (no-op if already present).
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for building a Graph without per-edge validation of
/// the whole edge list.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& base);

  std::size_t order() const noexcept { return g_.n_; }
  /// Throws InvalidInput on a loop or out-of-range endpoint.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& add_clique(std::span<const Vertex> vertices);
  Graph build() &&;

 private:
  Graph g_;
};

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);

/// Disjoint union; vertex v of `second` becomes first.order() + v.
Graph graph_union(const Graph& first, const Graph& second);
/// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& first, const Graph& second);
/// `copies` disjoint copies of g.
Graph repeat(const Graph& g, std::size_t copies);

/// Subgraph induced by s, relabelled by the sorted order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Graph whose vertex perm[v] corresponds to vertex v of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Connected components, each sorted, listed by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Throws InvalidInput for the null graph.
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Exact isomorphism test by pruned permutation search. Order mismatch
/// answers false; orders above kMaxIsomorphismOrder throw LimitExceeded.
inline constexpr std::size_t kMaxIsomorphismOrder = 10;
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace fracspec
