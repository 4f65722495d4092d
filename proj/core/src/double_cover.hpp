#pragma once

#include <cstdint>
#include <vector>

#include "fracspec/graph.hpp"

namespace fracspec::detail {

inline constexpr std::int32_t kUnmatched = -1;

/// Maximum matching of the bipartite double cover, with left copy u+ and
/// right copy v- adjacent iff uv is an edge of g.
struct CoverMatching {
  std::vector<std::int32_t> left;   // left[u]  = v when u+ v- is matched
  std::vector<std::int32_t> right;  // right[v] = u when u+ v- is matched
  std::size_t size = 0;
};

CoverMatching max_cover_matching(const Graph& g);

}  // namespace fracspec::detail
