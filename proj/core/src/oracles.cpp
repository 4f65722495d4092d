#include <algorithm>
#include <bit>

#include "fracspec/errors.hpp"
#include "fracspec/verify.hpp"
#include "small_graph.hpp"

namespace fracspec {

namespace {

class FractionalSearch {
 public:
  explicit FractionalSearch(const Graph& g) : edges_(g.edges()), cap_(g.order(), 2) {}

  std::int64_t run() {
    descend(0, 0);
    return best_;
  }

 private:
  std::int64_t optimistic(std::size_t from) const {
    std::int64_t sum = 0;
    for (std::size_t i = from; i < edges_.size(); ++i) sum += std::min({2, cap_[edges_[i].u], cap_[edges_[i].v]});
    return sum;
  }

  void descend(std::size_t i, std::int64_t total) {
    if (i == edges_.size()) {
      best_ = std::max(best_, total);
      return;
    }
    if (total + optimistic(i) <= best_) return;
    const Edge e = edges_[i];
    for (int w = std::min(cap_[e.u], cap_[e.v]); w >= 0; --w) {
      cap_[e.u] -= w;
      cap_[e.v] -= w;
      descend(i + 1, total + w);
      cap_[e.u] += w;
      cap_[e.v] += w;
    }
  }

  std::vector<Edge> edges_;
  std::vector<int> cap_;
  std::int64_t best_ = 0;
};

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : edges_(g.edges()), used_(g.order(), false), n_(g.order()) {}

  std::int64_t run() {
    descend(0, 0, 0);
    return best_;
  }

 private:
  void descend(std::size_t i, std::int64_t size, std::size_t covered) {
    best_ = std::max(best_, size);
    if (i == edges_.size()) return;
    const auto room = static_cast<std::int64_t>(std::min(edges_.size() - i, (n_ - covered) / 2));
    if (size + room <= best_) return;
    const Edge e = edges_[i];
    if (!used_[e.u] && !used_[e.v]) {
      used_[e.u] = used_[e.v] = true;
      descend(i + 1, size + 1, covered + 2);
      used_[e.u] = used_[e.v] = false;
    }
    descend(i + 1, size, covered);
  }

  std::vector<Edge> edges_;
  std::vector<bool> used_;
  std::size_t n_;
  std::int64_t best_ = 0;
};

}  // namespace

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const std::size_t pairs = pair_count(n);
  if (pairs < 64 && (code >> pairs) != 0) throw InvalidInput("edge code out of range for n");
  GraphBuilder b(n);
  std::size_t i = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++i) {
      if (i < 64 && ((code >> i) & 1)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

void enumerate_graphs(std::size_t n, bool connected_only, const std::function<void(std::uint64_t, const Graph&)>& visit,
                      bool long_run) {
  const std::size_t limit = long_run ? kMaxLongRunOrder : kMaxEnumerationOrder;
  if (n > limit) {
    throw LimitExceeded("enumeration supports n <= " + std::to_string(limit) +
                        (long_run ? "" : " (one more with the long-run flag)"));
  }
  const detail::PairTable table(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto small = detail::small_from_code(n, code, table);
    if (connected_only && !detail::small_connected(small)) continue;
    visit(code, detail::small_to_graph(small));
  }
}

HalfIntegral oracle_beta_star(const Graph& g) {
  if (g.edge_count() > kOracleBetaStarMaxEdges) {
    throw LimitExceeded("oracle_beta_star supports at most " + std::to_string(kOracleBetaStarMaxEdges) + " edges");
  }
  return HalfIntegral::from_doubled(FractionalSearch(g).run());
}

std::int64_t oracle_beta(const Graph& g) {
  if (g.edge_count() > kOracleBetaMaxEdges) {
    throw LimitExceeded("oracle_beta supports at most " + std::to_string(kOracleBetaMaxEdges) + " edges");
  }
  return MatchingSearch(g).run();
}

}  // namespace fracspec
