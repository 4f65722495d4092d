#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fracspec/graph.hpp"

namespace fracspec {

/// Largest order written by to_graph6 (single-byte size prefix).
inline constexpr std::size_t kGraph6MaxEncodeOrder = 62;

/// graph6 encoding: size byte 63+n, then the upper triangle in column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte (MSB first,
/// zero padded) with 63 added to each group. Throws LimitExceeded for n > 62.
std::string to_graph6(const Graph& g);

/// Accepts the 1-, 4- and 8-byte size prefixes. An optional ">>graph6<<"
/// header is skipped. Throws ParseError carrying the offending byte offset.
Graph from_graph6(std::string_view text);

/// "n m" on the first line, then m lines "u v".
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace fracspec
