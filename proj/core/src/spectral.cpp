#include "fracspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

constexpr std::size_t kRefreshInterval = 16;

std::size_t iteration_cap(std::size_t n) { return 200 * n + 10000; }

// Compressed neighbour lists of one component, local labels 0..k-1.
struct LocalAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;

  std::size_t size() const { return offsets.size() - 1; }
};

LocalAdjacency local_adjacency(const Graph& g, const VertexSet& members) {
  std::vector<std::uint32_t> local(g.order(), 0);
  for (std::uint32_t i = 0; i < members.size(); ++i) local[members.members()[i]] = i;
  LocalAdjacency adj;
  adj.offsets.reserve(members.size() + 1);
  adj.offsets.push_back(0);
  for (Vertex v : members) {
    for (Vertex u : g.neighbors(v)) adj.targets.push_back(local[u]);
    adj.offsets.push_back(adj.targets.size());
  }
  return adj;
}

void multiply(const LocalAdjacency& a, const std::vector<double>& x, std::vector<double>& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = a.offsets[i]; k < a.offsets[i + 1]; ++k) acc += x[a.targets[k]];
    out[i] = acc;
  }
}

void normalize(std::vector<double>& x) {
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;
}

struct PowerOutcome {
  double value;
  double residual;
  std::size_t iterations;
  std::vector<double> vector;
};

// Power iteration on (M + I) for a symmetric non-negative M given through
// `apply`. Returns once the Rayleigh residual of M drops to tol.
template <typename Apply>
PowerOutcome shifted_power_iteration(std::size_t k, std::size_t cap, double tol, Apply apply) {
  std::vector<double> x(k, 1.0);
  normalize(x);
  std::vector<double> ax(k, 0.0);
  double estimate = 0.0;
  double residual = 0.0;
  for (std::size_t it = 0;; ++it) {
    if (it % kRefreshInterval == 0 || it == cap) {
      apply(x, ax);
      estimate = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
      residual = 0.0;
      for (std::size_t i = 0; i < k; ++i) residual = std::max(residual, std::fabs(ax[i] - estimate * x[i]));
      if (residual <= tol) return {estimate, residual, it, std::move(x)};
      if (it >= cap) throw ConvergenceError(estimate, residual, it);
    }
    apply(x, ax);
    for (std::size_t i = 0; i < k; ++i) ax[i] += x[i];
    normalize(ax);
    std::swap(x, ax);
  }
}

}  // namespace

RhoResult spectral_radius(const Graph& g, double tol) {
  if (g.order() == 0) throw InvalidInput("spectral radius of the null graph is undefined");
  if (!(tol > 0)) throw InvalidInput("tolerance must be positive");

  const auto comps = components(g);
  RhoResult best;
  bool have_best = false;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const VertexSet& members = comps[c];
    PowerOutcome outcome{0.0, 0.0, 0, {1.0}};
    if (members.size() > 1) {
      const LocalAdjacency adj = local_adjacency(g, members);
      outcome = shifted_power_iteration(members.size(), iteration_cap(g.order()), tol,
                                        [&](const std::vector<double>& x, std::vector<double>& out) { multiply(adj, x, out); });
    }
    if (!have_best || outcome.value > best.value) {
      have_best = true;
      best.value = outcome.value;
      best.residual = outcome.residual;
      best.component_index = c;
      best.vector.assign(g.order(), 0.0);
      for (std::size_t i = 0; i < members.size(); ++i) best.vector[members.members()[i]] = outcome.vector[i];
    }
    best.iterations += outcome.iterations;
  }
  return best;
}

NotEquitable::NotEquitable(Vertex vertex, std::size_t cell, std::int64_t expected, std::int64_t actual)
    : InvalidInput("partition is not equitable: vertex " + std::to_string(vertex) + " has " + std::to_string(actual) +
                   " neighbours in cell " + std::to_string(cell) + ", expected " + std::to_string(expected)),
      vertex_(vertex),
      cell_(cell) {}

QuotientMatrix adjacency_quotient(const Graph& g, std::span<const VertexSet> partition) {
  std::vector<const VertexSet*> cells;
  for (const VertexSet& cell : partition) {
    if (!cell.empty()) cells.push_back(&cell);
  }
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(g.order(), kUnassigned);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Vertex v : *cells[i]) {
      if (v >= g.order()) throw InvalidInput("partition mentions vertex " + std::to_string(v) + " outside the graph");
      if (cell_of[v] != kUnassigned) throw InvalidInput("vertex " + std::to_string(v) + " appears in two cells");
      cell_of[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cell_of[v] == kUnassigned) throw InvalidInput("vertex " + std::to_string(v) + " is not in any cell");
  }

  const std::size_t k = cells.size();
  QuotientMatrix q;
  q.cells = k;
  q.entries.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) q.cell_sizes.push_back(static_cast<std::int64_t>(cells[i]->size()));

  std::vector<std::int64_t> counts(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool first = true;
    for (Vertex v : *cells[i]) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex u : g.neighbors(v)) ++counts[cell_of[u]];
      for (std::size_t j = 0; j < k; ++j) {
        if (first) {
          q.entries[i * k + j] = counts[j];
        } else if (counts[j] != q.entries[i * k + j]) {
          throw NotEquitable(v, j, q.entries[i * k + j], counts[j]);
        }
      }
      first = false;
    }
  }
  return q;
}

double quotient_spectral_radius(const QuotientMatrix& q, double tol) {
  const std::size_t k = q.cells;
  if (k == 0) throw InvalidInput("empty quotient matrix");
  if (q.entries.size() != k * k || q.cell_sizes.size() != k) throw InvalidInput("malformed quotient matrix");
  std::vector<double> sym(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (q.at(i, j) < 0 || q.at(i, j) > q.cell_sizes[j]) throw InvalidInput("quotient entry out of range");
      if (q.cell_sizes[i] * q.at(i, j) != q.cell_sizes[j] * q.at(j, i)) {
        throw InvalidInput("quotient matrix is not consistent with its cell sizes");
      }
      sym[i * k + j] = std::sqrt(static_cast<double>(q.at(i, j)) * static_cast<double>(q.at(j, i)));
    }
  }
  const auto n = static_cast<std::size_t>(std::accumulate(q.cell_sizes.begin(), q.cell_sizes.end(), std::int64_t{0}));
  const auto outcome =
      shifted_power_iteration(k, iteration_cap(n), tol, [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t i = 0; i < k; ++i) {
          double acc = 0.0;
          for (std::size_t j = 0; j < k; ++j) acc += sym[i * k + j] * x[j];
          out[i] = acc;
        }
      });
  return outcome.value;
}

IntPoly quotient_characteristic_polynomial(const QuotientMatrix& q) { return characteristic_polynomial(q.as_matrix()); }

double quotient_spectral_radius_closed_form(const QuotientMatrix& q) {
  return largest_real_root(quotient_characteristic_polynomial(q));
}

IntPoly char_poly_f_polynomial(std::int64_t n, HalfIntegral beta_star, std::int64_t s) {
  const std::int64_t d = beta_star.doubled();  // 2 b*
  // Each printed term rewritten with b* = d/2.
  const std::int64_t x2 = -(d - s - 2);
  const std::int64_t x1 = d * s - s * s - d + s - s * n + 1;
  const std::int64_t x0 = -d * d * s + d * n * s + 3 * d * s * s - 2 * n * s * s - 2 * s * s * s + s * d - s * n - s * s;
  return IntPoly({x0, x1, x2, 1});
}

double char_poly_f(double x, std::int64_t n, HalfIntegral beta_star, std::int64_t s) {
  return static_cast<double>(char_poly_f_polynomial(n, beta_star, s).eval(x));
}

Rational char_poly_f_exact(Rational x, std::int64_t n, HalfIntegral beta_star, std::int64_t s) {
  return eval_exact(char_poly_f_polynomial(n, beta_star, s), x);
}

IntPoly char_poly_g_polynomial(std::int64_t n, std::int64_t b) {
  if (b < 0 || b > n) throw InvalidInput("char_poly_g needs 0 <= b <= n");
  return IntPoly({-b * (n - b), -(b - 1), 1});
}

double char_poly_g(double x, std::int64_t n, std::int64_t b) {
  return static_cast<double>(char_poly_g_polynomial(n, b).eval(x));
}

IntPoly exact_char_poly(const Graph& g) {
  if (g.order() > kMaxExactCharPolyOrder) {
    throw LimitExceeded("exact characteristic polynomial is limited to " + std::to_string(kMaxExactCharPolyOrder) +
                        " vertices");
  }
  IntMatrix a{g.order(), std::vector<std::int64_t>(g.order() * g.order(), 0)};
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) a.entries[u * g.order() + v] = g.adjacent(u, v) ? 1 : 0;
  }
  return characteristic_polynomial(a);
}

}  // namespace fracspec
