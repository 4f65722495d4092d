#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fracspec/errors.hpp"
#include "fracspec/graph.hpp"
#include "fracspec/half_integral.hpp"
#include "fracspec/polynomial.hpp"

namespace fracspec {

inline constexpr double kDefaultTolerance = 1e-10;

/// Spectral radius of an adjacency matrix together with the evidence for it.
struct RhoResult {
  double value = 0.0;
  /// ||A x - value x||_inf for the returned unit vector.
  double residual = 0.0;
  std::size_t iterations = 0;
  /// Index into components(g) of the component attaining the maximum.
  std::size_t component_index = 0;
  /// Perron vector of that component (2-norm 1), zero elsewhere.
  std::vector<double> vector;
};

/// Largest adjacency eigenvalue, computed per connected component by power
/// iteration on A + I from the all-ones vector, with a Rayleigh quotient
/// refresh every 16 steps. The shift keeps bipartite components from
/// oscillating between +rho and -rho without moving the Perron vector.
/// Iteration cap: 200 n + 10000 per component.
///
/// Throws InvalidInput for the null graph or tol <= 0, and ConvergenceError
/// (carrying the best estimate) when the cap is reached.
RhoResult spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// Quotient matrix of an equitable partition: entry (i, j) is the number of
/// neighbours every vertex of cell i has in cell j.
struct QuotientMatrix {
  std::size_t cells = 0;
  std::vector<std::int64_t> entries;  // row-major, cells x cells
  std::vector<std::int64_t> cell_sizes;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * cells + j]; }
  IntMatrix as_matrix() const { return {cells, entries}; }
};

/// Error raised when a partition is not equitable.
class NotEquitable : public InvalidInput {
 public:
  NotEquitable(Vertex vertex, std::size_t cell, std::int64_t expected, std::int64_t actual);

  Vertex vertex() const noexcept { return vertex_; }
  std::size_t cell() const noexcept { return cell_; }

 private:
  Vertex vertex_;
  std::size_t cell_;
};

/// Empty cells are dropped first; the remaining ones must be disjoint and
/// cover V(g). Throws NotEquitable naming a (vertex, target cell) witness.
QuotientMatrix adjacency_quotient(const Graph& g, std::span<const VertexSet> partition);

/// Largest eigenvalue of Q, by power iteration on the symmetrised matrix
/// sqrt(b_ij b_ji) (similar to Q whenever |V_i| b_ij = |V_j| b_ji).
double quotient_spectral_radius(const QuotientMatrix& q, double tol = kDefaultTolerance);
/// Same value through det(xI - Q) and largest_real_root; intended for k <= 3.
double quotient_spectral_radius_closed_form(const QuotientMatrix& q);
IntPoly quotient_characteristic_polynomial(const QuotientMatrix& q);

/// Quotient characteristic polynomial of K_s v (K_{2b*-2s} u t K_1),
/// t = n + s - 2b*:
///   x^3 - (2b*-s-2) x^2 + (2b* s - s^2 - 2b* + s - s n + 1) x
///   - 4b*^2 s + 2b* n s + 6b* s^2 - 2 n s^2 - 2 s^3 + 2 s b* - s n - s^2.
/// With b* = d/2 every coefficient is an integer.
IntPoly char_poly_f_polynomial(std::int64_t n, HalfIntegral beta_star, std::int64_t s);
double char_poly_f(double x, std::int64_t n, HalfIntegral beta_star, std::int64_t s);
Rational char_poly_f_exact(Rational x, std::int64_t n, HalfIntegral beta_star, std::int64_t s);

/// det(xI - Q) for K_b v complement(K_{n-b}): x^2 - (b-1) x - b (n-b).
IntPoly char_poly_g_polynomial(std::int64_t n, std::int64_t b);
double char_poly_g(double x, std::int64_t n, std::int64_t b);

/// Exact det(xI - A(g)); n <= 16 (LimitExceeded otherwise).
inline constexpr std::size_t kMaxExactCharPolyOrder = 16;
IntPoly exact_char_poly(const Graph& g);

}  // namespace fracspec
