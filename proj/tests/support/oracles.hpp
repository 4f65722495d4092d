#pragma once

// Independent reference computations for the tests. Nothing here shares code
// with the library beyond the Graph type.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fracspec/graph.hpp"

namespace fracspec::testing {

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

/// Largest eigenvalue by a dense symmetric eigensolver.
inline double dense_spectral_radius(const Graph& g) {
  if (g.order() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(g), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

/// Largest eigenvalue of a small non-negative matrix given row-major.
inline double dense_matrix_radius(std::size_t k, const std::vector<double>& entries) {
  Eigen::MatrixXd q(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i * k + j];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(q, false);
  double best = -1e300;
  for (const auto& ev : solver.eigenvalues()) {
    if (std::abs(ev.imag()) < 1e-9) best = std::max(best, ev.real());
  }
  return best;
}

/// Maximum matching size over all edge subsets; keep m small.
inline std::size_t brute_matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      const std::uint64_t bits = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
      ok = (used & bits) == 0;
      used |= bits;
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// G(n, p) sample.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

/// Random connected graph: a random spanning tree plus G(n, p) edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    b.add_edge(parent(rng), v);
  }
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace fracspec::testing
