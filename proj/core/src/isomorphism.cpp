#include <algorithm>
#include <string>
#include <vector>

#include "fracspec/errors.hpp"
#include "fracspec/graph.hpp"

namespace fracspec {

namespace {

// Vertex invariant: own degree followed by the sorted neighbour degrees.
using Signature = std::vector<std::size_t>;

std::vector<Signature> signatures(const Graph& g) {
  std::vector<Signature> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    sig[v].push_back(g.degree(v));
    for (Vertex u : g.neighbors(v)) sig[v].push_back(g.degree(u));
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)), map_(a.order()), used_(b.order(), false) {
    // Place rarely matched, high-degree vertices first so conflicts surface early.
    order_.resize(a.order());
    for (Vertex v = 0; v < a.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) { return sig_a_[x] > sig_a_[y]; });
  }

  bool invariants_match() const {
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool search(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || sig_a_[v] != sig_b_[w]) continue;
      if (!consistent(depth, v, w)) continue;
      used_[w] = true;
      map_[v] = w;
      if (search(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

 private:
  bool consistent(std::size_t depth, Vertex v, Vertex w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x = order_[i];
      if (a_.adjacent(v, x) != b_.adjacent(w, map_[x])) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw LimitExceeded("isomorphism test is exact only up to " + std::to_string(kMaxIsomorphismOrder) +
                        " vertices");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  Matcher matcher(a, b);
  if (!matcher.invariants_match()) return false;
  return matcher.search();
}

}  // namespace fracspec
