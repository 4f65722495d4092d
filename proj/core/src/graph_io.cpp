#include "fracspec/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxEncodeOrder) {
    throw LimitExceeded("graph6 output supports at most " + std::to_string(kGraph6MaxEncodeOrder) + " vertices");
  }
  std::string out(1, static_cast<char>(kBias + n));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6 string truncated", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > kMaxByte) throw ParseError("graph6 byte outside 63..126", at);
    return static_cast<std::uint64_t>(c - kBias);
  };

  std::uint64_t n = sextet(pos);
  if (n < static_cast<std::uint64_t>(kMaxByte - kBias)) {
    pos += 1;
  } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == kMaxByte) {
    n = 0;
    for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
    pos += 8;
  } else {
    n = 0;
    for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
    pos += 4;
  }
  if (n > Graph::kMaxOrder) throw ParseError("graph6 order " + std::to_string(n) + " too large", 0);

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) throw ParseError("graph6 string truncated", text.size());
  if (text.size() - pos > byte_count) throw ParseError("trailing bytes after graph6 data", pos + byte_count);

  GraphBuilder builder(static_cast<std::size_t>(n));
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::uint64_t chunk = sextet(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1U) builder.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t last = pos + bit / 6;
    const std::uint64_t padding_mask = (std::uint64_t{1} << (6 - bit % 6)) - 1;
    if (sextet(last) & padding_mask) throw ParseError("non-zero graph6 padding bits", last);
  }
  return std::move(builder).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list must start with \"n m\"", 0);
  if (static_cast<unsigned long long>(n) > Graph::kMaxOrder) throw LimitExceeded("edge list order too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw ParseError("expected edge line " + std::to_string(k + 1), static_cast<std::size_t>(k + 1));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

}  // namespace fracspec
