#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fracspec/graph.hpp"
#include "fracspec/half_integral.hpp"

namespace fracspec {

/// A set of pairwise independent edges.
struct Matching {
  std::vector<Edge> edges;  // u < v, sorted

  std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum matching by Edmonds' blossom algorithm (greedy start, then one
/// BFS augmentation per free vertex).
Matching maximum_matching(const Graph& g);
std::size_t matching_number(const Graph& g);

/// Vertices v (as v+) and n + v (as v-); edges u+ v- and v+ u- for every
/// edge uv of g.
Graph bipartite_double_cover(const Graph& g);

/// Twice the fractional matching number equals the matching number of the
/// bipartite double cover; computed by augmenting paths over the adjacency
/// rows of g.
HalfIntegral fractional_matching_number(const Graph& g);

/// Edge weights in {0, 1/2, 1}, stored doubled.
class FractionalMatching {
 public:
  struct Entry {
    Edge edge;             // u < v
    std::uint8_t doubled;  // 0, 1 or 2
  };

  FractionalMatching() = default;
  /// Entries are sorted by edge; duplicate edges throw InvalidInput.
  explicit FractionalMatching(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  /// Doubled weight of uv, 0 when uv carries no entry.
  std::uint8_t doubled_weight(Vertex u, Vertex v) const noexcept;
  HalfIntegral total() const noexcept;

 private:
  std::vector<Entry> entries_;
};

/// Every entry is an edge of g, weights are in {0,1,2} (doubled) and every
/// vertex carries at most 1.
bool is_feasible(const Graph& g, const FractionalMatching& f);
/// The 1/2-weight edges form vertex-disjoint odd cycles.
bool is_canonical(const Graph& g, const FractionalMatching& f);

/// Maximum fractional matching in canonical form: the double-cover matching
/// is pulled back (each edge gets half the number of its matched lifts), then
/// even cycles and paths of 1/2-edges are re-weighted 1,0,1,0,... Components
/// are processed by lowest vertex; a path starts at its lower-labelled end,
/// a cycle at its lowest vertex heading to the smaller neighbour, and the
/// first edge gets weight 1.
FractionalMatching optimal_fractional_matching(const Graph& g);

/// Vertex weights in {0, 1/2, 1}, stored doubled.
class Transversal {
 public:
  Transversal() = default;
  explicit Transversal(std::vector<std::uint8_t> doubled_weights);

  std::size_t order() const noexcept { return weights_.size(); }
  std::uint8_t doubled_weight(Vertex v) const noexcept { return weights_[v]; }
  const std::vector<std::uint8_t>& doubled_weights() const noexcept { return weights_; }
  HalfIntegral total() const noexcept;

  /// Weight 1.
  VertexSet heavy() const;
  /// Weight 0.
  VertexSet zero() const;
  /// Weight 1/2.
  VertexSet half() const;

 private:
  std::vector<std::uint8_t> weights_;
};

/// Every edge has endpoint weights summing to at least 1.
bool is_feasible(const Graph& g, const Transversal& t);

/// Minimum fractional transversal: a minimum vertex cover of the double
/// cover (Koenig's alternating-reachability construction from the maximum
/// matching), with g(v) = (covered copies of v) / 2.
Transversal fractional_transversal(const Graph& g);

/// Structural report for the W (weight 1), R (weight 0), C (weight 1/2) parts
/// of a feasible transversal.
struct WrcReport {
  std::size_t s = 0;  // |W|
  std::size_t t = 0;  // |R|
  std::size_t c = 0;  // |C|
  HalfIntegral total;
  bool optimal = false;                 // total equals the fractional matching number
  bool r_independent = false;           // (a)
  bool no_r_c_edges = false;            // (b)
  bool connectivity_condition = false;  // (c): connected with an edge => s = t = 0 or both non-zero
  bool total_identity = false;          // 2 total == n - (t - s)
  bool t_at_least_s = false;

  /// All structural checks hold; (c) and t >= s are only demanded of
  /// optimal transversals.
  bool ok() const noexcept;
};

/// Throws InvalidInput when t is not a feasible transversal of g.
WrcReport wrc_decomposition(const Graph& g, const Transversal& t);

bool has_fractional_perfect_matching(const Graph& g);

/// Vertex partition into K_2 parts and odd cycles certifying a fractional
/// perfect matching.
struct FpmPart {
  enum class Kind { k2, odd_cycle };
  Kind kind;
  /// K_2: the two endpoints. Odd cycle: the vertices in cyclic order.
  std::vector<Vertex> vertices;
};

struct FpmPartition {
  std::vector<FpmPart> parts;
};

/// Weight-1 edges become K_2 parts and each odd cycle of the 1/2-support an
/// odd-cycle part. Throws InvalidInput if f is infeasible, not perfect or
/// not canonical.
FpmPartition fpm_partition(const Graph& g, const FractionalMatching& f);

/// Partition covers V(g) exactly, K_2 parts are edges and cycle parts are odd
/// cycles of g.
bool is_valid_partition(const Graph& g, const FpmPartition& p);

/// Text witnesses: "edge u v w" (w in 0, 1/2, 1), "vertex v g",
/// "part K2 u v" and "part CYCLE v1 ... vk", one per line.
void write_witness(std::ostream& out, const FractionalMatching& f);
void write_witness(std::ostream& out, const Transversal& t);
void write_witness(std::ostream& out, const FpmPartition& p);

}  // namespace fracspec
