#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

#include "double_cover.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/matching.hpp"

namespace fracspec {

namespace {

Edge ordered(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

const char* weight_text(std::uint8_t doubled) {
  switch (doubled) {
    case 0: return "0";
    case 1: return "1/2";
    default: return "1";
  }
}

// Vertices joined by 1/2-weight edges; every vertex of a feasible fractional
// matching has at most two such neighbours.
class HalfSupport {
 public:
  HalfSupport(std::size_t n, const FractionalMatching& f) : nbrs_(n) {
    for (const auto& e : f.entries()) {
      if (e.doubled != 1) continue;
      for (auto [a, b] : {std::pair{e.edge.u, e.edge.v}, std::pair{e.edge.v, e.edge.u}}) {
        if (nbrs_[a].size() == 2) throw InvalidInput("vertex " + std::to_string(a) + " is overloaded by 1/2-edges");
        nbrs_[a].push_back(b);
      }
    }
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
  }

  struct Component {
    bool is_cycle = false;
    std::vector<Vertex> walk;  // vertices in traversal order (cycle: not repeated)
  };

  /// Components in ascending order of their lowest vertex. Paths are walked
  /// from the lower-labelled end, cycles from their lowest vertex towards
  /// its smaller neighbour.
  std::vector<Component> components() const {
    std::vector<Component> out;
    std::vector<bool> seen(nbrs_.size(), false);
    for (Vertex v = 0; v < nbrs_.size(); ++v) {
      if (seen[v] || nbrs_[v].empty()) continue;
      // Gather the component to find its shape and lowest-labelled start.
      std::vector<Vertex> members{v};
      seen[v] = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Vertex u : nbrs_[members[i]]) {
          if (!seen[u]) {
            seen[u] = true;
            members.push_back(u);
          }
        }
      }
      Component comp;
      Vertex start = v;
      comp.is_cycle = std::all_of(members.begin(), members.end(), [&](Vertex x) { return nbrs_[x].size() == 2; });
      if (!comp.is_cycle) {
        start = *std::min_element(members.begin(), members.end(), [&](Vertex a, Vertex b) {
          const bool ea = nbrs_[a].size() == 1;
          const bool eb = nbrs_[b].size() == 1;
          return ea != eb ? ea : a < b;
        });
      } else {
        start = *std::min_element(members.begin(), members.end());
      }
      comp.walk.push_back(start);
      Vertex prev = start;
      Vertex cur = nbrs_[start].front();  // smaller neighbour first
      while (cur != start) {
        comp.walk.push_back(cur);
        const auto& next = nbrs_[cur];
        if (next.size() == 1) break;  // reached the other end of a path
        const Vertex step = next[0] == prev ? next[1] : next[0];
        prev = cur;
        cur = step;
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> nbrs_;
};

std::vector<std::uint8_t> vertex_loads(std::size_t n, const FractionalMatching& f) {
  std::vector<std::uint8_t> load(n, 0);
  for (const auto& e : f.entries()) {
    load[e.edge.u] = static_cast<std::uint8_t>(load[e.edge.u] + e.doubled);
    load[e.edge.v] = static_cast<std::uint8_t>(load[e.edge.v] + e.doubled);
  }
  return load;
}

}  // namespace

FractionalMatching::FractionalMatching(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) e.edge = ordered(e.edge.u, e.edge.v);
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.edge < b.edge; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].edge == entries_[i - 1].edge) throw InvalidInput("duplicate edge in fractional matching");
  }
}

std::uint8_t FractionalMatching::doubled_weight(Vertex u, Vertex v) const noexcept {
  const Edge key = ordered(u, v);
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                                   [](const Entry& e, const Edge& k) { return e.edge < k; });
  return it != entries_.end() && it->edge == key ? it->doubled : 0;
}

HalfIntegral FractionalMatching::total() const noexcept {
  std::int64_t sum = 0;
  for (const auto& e : entries_) sum += e.doubled;
  return HalfIntegral::from_doubled(sum);
}

bool is_feasible(const Graph& g, const FractionalMatching& f) {
  for (const auto& e : f.entries()) {
    if (e.edge.v >= g.order() || e.edge.u == e.edge.v || !g.adjacent(e.edge.u, e.edge.v)) return false;
    if (e.doubled > 2) return false;
  }
  const auto load = vertex_loads(g.order(), f);
  return std::all_of(load.begin(), load.end(), [](std::uint8_t l) { return l <= 2; });
}

bool is_canonical(const Graph& g, const FractionalMatching& f) {
  if (!is_feasible(g, f)) return false;
  const auto comps = HalfSupport(g.order(), f).components();
  return std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.is_cycle && c.walk.size() % 2 == 1; });
}

FractionalMatching optimal_fractional_matching(const Graph& g) {
  const auto cover = detail::max_cover_matching(g);
  std::vector<FractionalMatching::Entry> entries;
  for (const Edge& e : g.edges()) {
    const int lifts = (cover.left[e.u] == static_cast<std::int32_t>(e.v)) + (cover.left[e.v] == static_cast<std::int32_t>(e.u));
    entries.push_back({e, static_cast<std::uint8_t>(lifts)});
  }
  FractionalMatching f(std::move(entries));
  const HalfIntegral before = f.total();

  auto reweighted = f.entries();
  auto set_weight = [&](Vertex a, Vertex b, std::uint8_t w) {
    const Edge key = ordered(a, b);
    const auto it = std::lower_bound(reweighted.begin(), reweighted.end(), key,
                                     [](const auto& e, const Edge& k) { return e.edge < k; });
    it->doubled = w;
  };
  for (const auto& comp : HalfSupport(g.order(), f).components()) {
    const std::size_t edge_count = comp.is_cycle ? comp.walk.size() : comp.walk.size() - 1;
    if (comp.is_cycle && edge_count % 2 == 1) continue;
    for (std::size_t i = 0; i < edge_count; ++i) {
      set_weight(comp.walk[i], comp.walk[(i + 1) % comp.walk.size()], i % 2 == 0 ? 2 : 0);
    }
  }
  FractionalMatching out(std::move(reweighted));
  if (out.total() != before) throw std::logic_error("normalisation changed the fractional matching total");
  return out;
}

Transversal::Transversal(std::vector<std::uint8_t> doubled_weights) : weights_(std::move(doubled_weights)) {
  for (std::uint8_t w : weights_) {
    if (w > 2) throw InvalidInput("transversal weights must be 0, 1/2 or 1");
  }
}

HalfIntegral Transversal::total() const noexcept {
  std::int64_t sum = 0;
  for (std::uint8_t w : weights_) sum += w;
  return HalfIntegral::from_doubled(sum);
}

namespace {

VertexSet with_weight(const std::vector<std::uint8_t>& weights, std::uint8_t target) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < weights.size(); ++v) {
    if (weights[v] == target) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace

VertexSet Transversal::heavy() const { return with_weight(weights_, 2); }
VertexSet Transversal::zero() const { return with_weight(weights_, 0); }
VertexSet Transversal::half() const { return with_weight(weights_, 1); }

bool is_feasible(const Graph& g, const Transversal& t) {
  if (t.order() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (t.doubled_weight(e.u) + t.doubled_weight(e.v) < 2) return false;
  }
  return true;
}

Transversal fractional_transversal(const Graph& g) {
  const std::size_t n = g.order();
  const auto m = detail::max_cover_matching(g);
  // Alternating reachability from free left copies: left -> right along any
  // edge, right -> left along matched edges.
  std::vector<bool> left_seen(n, false);
  std::vector<bool> right_seen(n, false);
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    if (m.left[u] == detail::kUnmatched) {
      left_seen[u] = true;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex v : g.neighbors(queue[head])) {
      if (right_seen[v]) continue;
      right_seen[v] = true;
      const std::int32_t w = m.right[v];
      if (w != detail::kUnmatched && !left_seen[static_cast<Vertex>(w)]) {
        left_seen[static_cast<Vertex>(w)] = true;
        queue.push_back(static_cast<Vertex>(w));
      }
    }
  }
  // Koenig cover: unreached left copies plus reached right copies.
  std::vector<std::uint8_t> weights(n, 0);
  for (Vertex v = 0; v < n; ++v) weights[v] = static_cast<std::uint8_t>(!left_seen[v] + right_seen[v]);
  return Transversal(std::move(weights));
}

bool WrcReport::ok() const noexcept {
  const bool base = r_independent && no_r_c_edges && total_identity;
  return optimal ? base && connectivity_condition && t_at_least_s : base;
}

WrcReport wrc_decomposition(const Graph& g, const Transversal& t) {
  if (!is_feasible(g, t)) throw InvalidInput("transversal is not feasible for this graph");
  WrcReport r;
  for (std::uint8_t w : t.doubled_weights()) {
    if (w == 2) ++r.s;
    else if (w == 0) ++r.t;
    else ++r.c;
  }
  r.total = t.total();
  r.optimal = r.total == fractional_matching_number(g);
  r.r_independent = true;
  r.no_r_c_edges = true;
  for (const Edge& e : g.edges()) {
    const int wu = t.doubled_weight(e.u);
    const int wv = t.doubled_weight(e.v);
    if (wu == 0 && wv == 0) r.r_independent = false;
    if ((wu == 0 && wv == 1) || (wu == 1 && wv == 0)) r.no_r_c_edges = false;
  }
  // (c) is about connected graphs with an edge; K_1 has its only vertex in R.
  const bool connected = g.edge_count() > 0 && is_connected(g);
  r.connectivity_condition = !connected || (r.s == 0) == (r.t == 0);
  r.total_identity = static_cast<std::int64_t>(g.order()) - (static_cast<std::int64_t>(r.t) - static_cast<std::int64_t>(r.s)) ==
                     r.total.doubled();
  r.t_at_least_s = r.t >= r.s;
  return r;
}

bool has_fractional_perfect_matching(const Graph& g) {
  return fractional_matching_number(g).doubled() == static_cast<std::int64_t>(g.order());
}

FpmPartition fpm_partition(const Graph& g, const FractionalMatching& f) {
  if (!is_feasible(g, f)) throw InvalidInput("fractional matching is not feasible");
  if (f.total().doubled() != static_cast<std::int64_t>(g.order())) {
    throw InvalidInput("fractional matching is not perfect: total " + f.total().to_string() + " < n/2");
  }
  if (!is_canonical(g, f)) throw InvalidInput("fractional matching is not canonical (1/2-support has a non-odd-cycle part)");

  FpmPartition p;
  for (const auto& e : f.entries()) {
    if (e.doubled == 2) p.parts.push_back({FpmPart::Kind::k2, {e.edge.u, e.edge.v}});
  }
  for (auto& comp : HalfSupport(g.order(), f).components()) {
    p.parts.push_back({FpmPart::Kind::odd_cycle, std::move(comp.walk)});
  }
  std::sort(p.parts.begin(), p.parts.end(), [](const FpmPart& a, const FpmPart& b) {
    return *std::min_element(a.vertices.begin(), a.vertices.end()) < *std::min_element(b.vertices.begin(), b.vertices.end());
  });
  return p;
}

bool is_valid_partition(const Graph& g, const FpmPartition& p) {
  std::vector<bool> covered(g.order(), false);
  for (const auto& part : p.parts) {
    for (Vertex v : part.vertices) {
      if (v >= g.order() || covered[v]) return false;
      covered[v] = true;
    }
    const auto& vs = part.vertices;
    if (part.kind == FpmPart::Kind::k2) {
      if (vs.size() != 2 || !g.adjacent(vs[0], vs[1])) return false;
    } else {
      if (vs.size() < 3 || vs.size() % 2 == 0) return false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
      }
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

void write_witness(std::ostream& out, const FractionalMatching& f) {
  for (const auto& e : f.entries()) out << "edge " << e.edge.u << ' ' << e.edge.v << ' ' << weight_text(e.doubled) << '\n';
}

void write_witness(std::ostream& out, const Transversal& t) {
  for (Vertex v = 0; v < t.order(); ++v) out << "vertex " << v << ' ' << weight_text(t.doubled_weight(v)) << '\n';
}

void write_witness(std::ostream& out, const FpmPartition& p) {
  for (const auto& part : p.parts) {
    out << "part " << (part.kind == FpmPart::Kind::k2 ? "K2" : "CYCLE");
    for (Vertex v : part.vertices) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace fracspec
