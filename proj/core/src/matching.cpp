#include <algorithm>
#include <bit>
#include <deque>

#include "double_cover.hpp"
#include "fracspec/matching.hpp"

namespace fracspec {

namespace {

// Edmonds' blossom search on adjacency lists, after the classic
// BFS-with-contracted-bases formulation.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.order()), adj_(n_), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_), on_path_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v].push_back(static_cast<int>(u));
    }
  }

  Matching run() {
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      if (match_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      if (match_[v] != -1) continue;
      for (int u = find_augmenting_path(v); u != -1;) {
        const int pu = parent_[u];
        const int next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    Matching out;
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      if (match_[v] > v) out.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(match_[v])});
    }
    return out;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
    used_[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

// Kuhn's augmenting search over bit rows; `visited` marks right copies.
class CoverAugmenter {
 public:
  CoverAugmenter(const Graph& g, detail::CoverMatching& m) : g_(g), m_(m), visited_(g.words(), 0) {}

  bool augment_from(Vertex u) {
    std::fill(visited_.begin(), visited_.end(), 0);
    return visit(u);
  }

 private:
  bool visit(Vertex u) {
    const auto row = g_.row(u);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (Graph::Word fresh = row[w] & ~visited_[w]; fresh != 0; fresh &= fresh - 1) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(fresh));
        const auto v = static_cast<Vertex>(w * Graph::kWordBits + bit);
        if (visited_[w] & (Graph::Word{1} << bit)) continue;
        visited_[w] |= Graph::Word{1} << bit;
        const std::int32_t owner = m_.right[v];
        if (owner == detail::kUnmatched || visit(static_cast<Vertex>(owner))) {
          m_.left[u] = static_cast<std::int32_t>(v);
          m_.right[v] = static_cast<std::int32_t>(u);
          return true;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  detail::CoverMatching& m_;
  std::vector<Graph::Word> visited_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

std::size_t matching_number(const Graph& g) { return maximum_matching(g).size(); }

Graph bipartite_double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  GraphBuilder b(2 * g.order());
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, n + e.v);
    b.add_edge(e.v, n + e.u);
  }
  return std::move(b).build();
}

namespace detail {

CoverMatching max_cover_matching(const Graph& g) {
  const std::size_t n = g.order();
  CoverMatching m{std::vector<std::int32_t>(n, kUnmatched), std::vector<std::int32_t>(n, kUnmatched), 0};
  // Greedy pass, then augment from every left copy still free.
  for (Vertex u = 0; u < n; ++u) {
    const auto row = g.row(u);
    for (std::size_t w = 0; w < row.size() && m.left[u] == kUnmatched; ++w) {
      for (Graph::Word bits = row[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        if (m.right[v] == kUnmatched) {
          m.left[u] = static_cast<std::int32_t>(v);
          m.right[v] = static_cast<std::int32_t>(u);
          break;
        }
      }
    }
  }
  CoverAugmenter augmenter(g, m);
  for (Vertex u = 0; u < n; ++u) {
    if (m.left[u] == kUnmatched && g.degree(u) > 0) augmenter.augment_from(u);
  }
  m.size = static_cast<std::size_t>(std::count_if(m.left.begin(), m.left.end(), [](std::int32_t v) { return v != kUnmatched; }));
  return m;
}

}  // namespace detail

HalfIntegral fractional_matching_number(const Graph& g) {
  return HalfIntegral::from_doubled(static_cast<std::int64_t>(detail::max_cover_matching(g).size));
}

}  // namespace fracspec
