#pragma once

// Bitmask routines for the exhaustive sweeps (n <= 16), kept apart from the
// general Graph type so the inner loops avoid allocation.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "fracspec/graph.hpp"

namespace fracspec::detail {

inline constexpr std::size_t kSmallMaxOrder = 16;

struct SmallGraph {
  std::size_t n = 0;
  std::size_t m = 0;
  std::array<std::uint16_t, kSmallMaxOrder> rows{};
};

// Pair i in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
class PairTable {
 public:
  explicit PairTable(std::size_t n) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t u = 0; u < v; ++u) pairs_.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
    }
  }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::pair<std::uint8_t, std::uint8_t> operator[](std::size_t i) const noexcept { return pairs_[i]; }

 private:
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs_;
};

inline SmallGraph small_from_code(std::size_t n, std::uint64_t code, const PairTable& pairs) {
  SmallGraph g;
  g.n = n;
  g.m = static_cast<std::size_t>(std::popcount(code));
  for (std::uint64_t bits = code; bits != 0; bits &= bits - 1) {
    const auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(bits))];
    g.rows[u] |= static_cast<std::uint16_t>(1u << v);
    g.rows[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return g;
}

inline bool small_connected(const SmallGraph& g) {
  if (g.n == 0) return false;
  const unsigned all = (1u << g.n) - 1;
  unsigned seen = 1, frontier = 1;
  while (frontier != 0) {
    unsigned next = 0;
    for (unsigned f = frontier; f != 0; f &= f - 1) next |= g.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Doubled fractional matching number: Kuhn matching on the double cover.
class SmallCoverMatcher {
 public:
  int run(const SmallGraph& g) {
    g_ = &g;
    right_.fill(-1);
    int size = 0;
    for (std::size_t u = 0; u < g.n; ++u) {
      visited_ = 0;
      if (augment(static_cast<int>(u))) ++size;
    }
    return size;
  }

 private:
  bool augment(int u) {
    for (unsigned fresh = g_->rows[u] & ~visited_; fresh != 0; fresh = g_->rows[u] & ~visited_) {
      const int v = std::countr_zero(fresh);
      visited_ |= 1u << v;
      if (right_[v] == -1 || augment(right_[v])) {
        right_[v] = u;
        return true;
      }
    }
    return false;
  }

  const SmallGraph* g_ = nullptr;
  std::array<int, kSmallMaxOrder> right_{};
  unsigned visited_ = 0;
};

inline int small_beta_star_doubled(const SmallGraph& g) { return SmallCoverMatcher().run(g); }

namespace small_impl {
inline int best_matching(const SmallGraph& g, unsigned alive, int target) {
  // Lowest live vertex is either left unmatched or matched to a live neighbour.
  while (alive != 0 && (g.rows[std::countr_zero(alive)] & alive) == 0) alive &= alive - 1;
  if (alive == 0) return 0;
  const int v = std::countr_zero(alive);
  const unsigned rest = alive & ~(1u << v);
  int best = 0;
  const int cap = std::min(target, std::popcount(alive) / 2);
  for (unsigned nb = g.rows[v] & rest; nb != 0; nb &= nb - 1) {
    const int u = std::countr_zero(nb);
    best = std::max(best, 1 + best_matching(g, rest & ~(1u << u), cap - 1));
    if (best >= cap) return best;
  }
  return std::max(best, best_matching(g, rest, cap));
}
}  // namespace small_impl

inline int small_beta(const SmallGraph& g) {
  return small_impl::best_matching(g, (1u << g.n) - 1, static_cast<int>(g.n / 2));
}

inline Graph small_to_graph(const SmallGraph& g) {
  GraphBuilder b(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    for (unsigned nb = g.rows[v] & ~((2u << v) - 1); nb != 0; nb &= nb - 1) {
      b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(std::countr_zero(nb)));
    }
  }
  return std::move(b).build();
}

// Upper bound on rho: min of max degree, (-1 + sqrt(1 + 8m)) / 2 and
// sqrt(2m - n' + 1) with n' the non-isolated vertices.
inline double small_rho_upper(const SmallGraph& g) {
  int max_deg = 0, non_isolated = 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    const int d = std::popcount(g.rows[v]);
    max_deg = std::max(max_deg, d);
    non_isolated += d > 0;
  }
  if (g.m == 0) return 0.0;
  const double m = static_cast<double>(g.m);
  const double stanley = (-1.0 + std::sqrt(1.0 + 8.0 * m)) / 2.0;
  const double hong = std::sqrt(2.0 * m - non_isolated + 1.0);
  return std::min({static_cast<double>(max_deg), stanley, hong});
}

inline constexpr std::size_t kShardCount = 64;

// Splits [0, total) into kShardCount contiguous ranges, runs work(lo, hi,
// shard) on `jobs` threads and returns the shards in range order.
template <typename Shard, typename Work>
std::vector<Shard> run_sharded(std::uint64_t total, std::size_t jobs, Work work) {
  const std::size_t shards = static_cast<std::size_t>(std::min<std::uint64_t>(kShardCount, std::max<std::uint64_t>(total, 1)));
  std::vector<Shard> out(shards);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t s = next++; s < shards; s = next++) {
      const std::uint64_t lo = total * s / shards;
      const std::uint64_t hi = total * (s + 1) / shards;
      try {
        work(lo, hi, out[s]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, shards);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace fracspec::detail
