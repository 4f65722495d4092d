#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracspec/graph.hpp"
#include "fracspec/half_integral.hpp"
#include "fracspec/polynomial.hpp"

namespace fracspec {

/// Parameters of K_s v (K_{2b*-2s} u t K_1) with t = n + s - 2b*.
struct ExtremalSpec {
  std::int64_t n = 0;
  HalfIntegral beta_star;
  std::int64_t s = 0;

  std::int64_t t() const noexcept { return n + s - beta_star.doubled(); }
  std::int64_t middle_clique() const noexcept { return beta_star.doubled() - 2 * s; }

  /// Throws InvalidInput naming the first violated constraint:
  /// 0 <= s <= b*, 2b* <= n, t >= s, and a middle clique of size other than
  /// one (a lone middle vertex has no edge to cover, so the graph would have
  /// fractional matching number s instead of b*).
  void validate() const;
};

Graph build_extremal(const ExtremalSpec& spec);

/// K_b v complement(K_{n-b}).
Graph complete_split(std::int64_t n, std::int64_t b);

/// x^3 - (2b*-3) x^2 - (n-1) x - 4b*^2 + 2b* n + 8b* - 3n - 3.
IntPoly theta_cubic_polynomial(std::int64_t n, HalfIntegral beta_star);
/// Largest root of theta_cubic_polynomial; requires 2b* + 1 <= n.
double theta_cubic(std::int64_t n, HalfIntegral beta_star);

/// (b - 1 + sqrt((b-1)^2 + 4 b (n-b))) / 2, the spectral radius of
/// K_b v complement(K_{n-b}); requires 0 <= b <= n.
double rho_join_formula(std::int64_t n, std::int64_t b);

/// x^3 - (n-4) x^2 - (n-1) x + 2(n-4).
IntPoly theta_n_polynomial(std::int64_t n);
/// Largest root of theta_n_polynomial; requires n >= 3.
double theta_n(std::int64_t n);

/// Spectral radius of K_1 v (K_{2b-1} u (n-2b) K_1), computed from its
/// three-cell quotient matrix. This is the threshold of the connected
/// matching-number bound in its middle range.
double matching_cubic_threshold(std::int64_t n, std::int64_t beta);
/// The degree-3 polynomial x^3 - (2b-2) x^2 + (1-n) x + 2(b-1)(n-2b) that
/// the quotient matrix above annihilates.
IntPoly matching_cubic_polynomial(std::int64_t n, std::int64_t beta);
/// The same polynomial as literally printed in the source statement, with
/// two degree-1 terms: x^3 - (2b-2) x + (1-n) x + 2(b-1)(n-2b).
IntPoly matching_cubic_polynomial_as_printed(std::int64_t n, std::int64_t beta);

/// Which bound a selector applied. The tags name the regime of each theorem:
/// connected fractional (fc_*), general fractional (fg_*), general matching
/// (mg_*), connected matching (mc_*).
enum class Regime {
  fc_complete,      // n = 2b*
  fc_cubic,         // 2b*+1 <= n < 3 ceil(b*) - 3
  fc_split,         // n >= 3 ceil(b*) - 3
  fg_complete,      // n = 2b*
  fg_clique,        // 2b*+1 <= n < 3 ceil(b*) - 1
  fg_tie,           // n = 3 ceil(b*) - 1
  fg_split,         // n > 3 ceil(b*) - 1
  mg_complete,      // n = 2b or 2b+1
  mg_clique,        // 2b+2 <= n < 3b+2
  mg_tie,           // n = 3b+2
  mg_split,         // n > 3b+2
  mc_complete,      // n = 2b or 2b+1
  mc_cubic,         // 2b+2 <= n <= 3b-1
  mc_split,         // n >= 3b
};

std::string to_string(Regime r);

struct RegimePrediction {
  Regime regime;
  double bound = 0.0;
  /// The extremal graph, or both graphs in a tie regime.
  std::vector<Graph> extremal_graphs;
  /// Whether some listed graph actually has the class parameter (fractional
  /// matching number or matching number) the prediction was made for.
  bool bound_is_attained = false;
  /// Notes on cross-derivations: known misprints that were resolved and any
  /// listed graph that falls outside its class.
  std::vector<std::string> diagnostics;
};

/// Maximum spectral radius over connected graphs with fractional matching
/// number b*. Requires 1 <= 2b* <= n.
RegimePrediction predicted_maximizer_connected(std::int64_t n, HalfIntegral beta_star);
/// Maximum over all graphs with fractional matching number b*. The bound in
/// the clique and tie regimes is 2b* - 1 = rho(K_{2b*}).
RegimePrediction predicted_maximizer_general(std::int64_t n, HalfIntegral beta_star);
/// Maximum over connected graphs with matching number beta; 1 <= beta <= n/2.
RegimePrediction matching_bound_connected(std::int64_t n, std::int64_t beta);
/// Maximum over all graphs with matching number beta; 1 <= beta <= n/2.
RegimePrediction matching_bound_general(std::int64_t n, std::int64_t beta);

/// "regime <tag>", "bound <12 significant digits>", one "extremal <graph6>"
/// per graph, then "attained true|false" and "note ..." lines.
std::string to_text(const RegimePrediction& p);

/// Formats with 12 significant digits.
std::string format_real(double value);

}  // namespace fracspec
