#include "fracspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

std::size_t words_for(std::size_t n) { return (n + Graph::kWordBits - 1) / Graph::kWordBits; }

void check_order(std::size_t n) {
  if (n > Graph::kMaxOrder) {
    throw LimitExceeded("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                        std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v);
  return std::move(builder).build();
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder builder(*this);
  builder.add_edge(u, v);
  return std::move(builder).build();
}

GraphBuilder::GraphBuilder(std::size_t n) {
  check_order(n);
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.bits_.assign(n * g_.words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& base) : g_(base) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidInput("loop edge at vertex " + std::to_string(u));
  if (u >= g_.n_ || v >= g_.n_) {
    throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(g_.n_));
  }
  const std::size_t w = g_.words_;
  Graph::Word& uv = g_.bits_[u * w + v / Graph::kWordBits];
  const Graph::Word mask_v = Graph::Word{1} << (v % Graph::kWordBits);
  if ((uv & mask_v) == 0) {
    uv |= mask_v;
    g_.bits_[v * w + u / Graph::kWordBits] |= Graph::Word{1} << (u % Graph::kWordBits);
    ++g_.m_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
  }
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph empty(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

namespace {

// Copies the edges of g into b with every label shifted by offset.
void copy_shifted(GraphBuilder& b, const Graph& g, Vertex offset) {
  for (const Edge& e : g.edges()) b.add_edge(e.u + offset, e.v + offset);
}

}  // namespace

Graph graph_union(const Graph& first, const Graph& second) {
  GraphBuilder b(first.order() + second.order());
  copy_shifted(b, first, 0);
  copy_shifted(b, second, static_cast<Vertex>(first.order()));
  return std::move(b).build();
}

Graph join(const Graph& first, const Graph& second) {
  const auto n1 = static_cast<Vertex>(first.order());
  const auto n2 = static_cast<Vertex>(second.order());
  GraphBuilder b(n1 + n2);
  copy_shifted(b, first, 0);
  copy_shifted(b, second, n1);
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  }
  return std::move(b).build();
}

Graph repeat(const Graph& g, std::size_t copies) {
  Graph out;
  for (std::size_t i = 0; i < copies; ++i) out = graph_union(out, g);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.order()) throw InvalidInput("vertex " + std::to_string(v) + " outside graph of order " +
                                           std::to_string(g.order()));
  }
  const auto& members = s.members();
  GraphBuilder b(members.size());
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidInput("permutation length does not match graph order");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidInput("relabelling is not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  std::vector<Graph::Word> unvisited(words, 0);
  for (std::size_t v = 0; v < n; ++v) unvisited[v / Graph::kWordBits] |= Graph::Word{1} << (v % Graph::kWordBits);

  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (std::size_t w = 0; w < words; ++w) {
    while (unvisited[w] != 0) {
      const auto root = static_cast<Vertex>(w * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(unvisited[w])));
      unvisited[w] &= unvisited[w] - 1;
      std::vector<Vertex> members{root};
      stack.assign(1, root);
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        const auto r = g.row(u);
        for (std::size_t k = 0; k < words; ++k) {
          for (Graph::Word fresh = r[k] & unvisited[k]; fresh != 0; fresh &= fresh - 1) {
            const auto v = static_cast<Vertex>(k * Graph::kWordBits + static_cast<std::size_t>(std::countr_zero(fresh)));
            members.push_back(v);
            stack.push_back(v);
          }
          unvisited[k] &= ~r[k];
        }
      }
      out.emplace_back(std::move(members));
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidInput("minimum degree of the null graph is undefined");
  std::size_t best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace fracspec
