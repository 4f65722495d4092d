#include "fracspec/extremal.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/graph_io.hpp"
#include "fracspec/matching.hpp"
#include "fracspec/spectral.hpp"

namespace fracspec {

namespace {

constexpr double kCrossCheckTolerance = 1e-8;

// K_d u (n - d) K_1.
Graph clique_plus_isolated(std::int64_t n, std::int64_t d) {
  return graph_union(complete(static_cast<std::size_t>(d)), empty(static_cast<std::size_t>(n - d)));
}

// K_1 v (K_{2b-1} u (n-2b) K_1).
Graph apex_over_clique(std::int64_t n, std::int64_t beta) {
  return join(complete(1), clique_plus_isolated(n - 1, 2 * beta - 1));
}

void require_fractional_domain(std::int64_t n, HalfIntegral beta_star) {
  if (beta_star.doubled() < 1 || beta_star.doubled() > n) {
    throw InvalidInput("need 1 <= 2b* <= n (got n=" + std::to_string(n) + ", b*=" + beta_star.to_string() + ")");
  }
}

void require_matching_domain(std::int64_t n, std::int64_t beta) {
  if (beta < 1 || 2 * beta > n) {
    throw InvalidInput("need 1 <= beta <= n/2 (got n=" + std::to_string(n) + ", beta=" + std::to_string(beta) + ")");
  }
}

void cross_check(RegimePrediction& p, const std::string& what, double printed, double derived) {
  if (std::fabs(printed - derived) > kCrossCheckTolerance) {
    p.diagnostics.push_back(what + ": printed form gives " + format_real(printed) + ", quotient matrix gives " +
                            format_real(derived));
  }
}

// Marks which listed graphs really belong to the class the prediction is for.
template <typename ClassOf>
void audit_membership(RegimePrediction& p, bool need_connected, ClassOf class_of, const std::string& expected) {
  p.bound_is_attained = false;
  for (const Graph& g : p.extremal_graphs) {
    const std::string actual = class_of(g);
    const bool connected_ok = !need_connected || (g.order() > 0 && is_connected(g));
    if (actual == expected && connected_ok) {
      p.bound_is_attained = true;
    } else {
      const std::string code = g.order() <= kGraph6MaxEncodeOrder ? to_graph6(g) : std::to_string(g.order()) + "-vertex graph";
      p.diagnostics.push_back("extremal graph " + code + " lies outside the class: parameter " + actual + " instead of " +
                              expected + (connected_ok ? "" : ", not connected"));
    }
  }
}

void audit_fractional(RegimePrediction& p, bool need_connected, HalfIntegral beta_star) {
  audit_membership(p, need_connected, [](const Graph& g) { return fractional_matching_number(g).to_string(); },
                   beta_star.to_string());
}

void audit_matching(RegimePrediction& p, bool need_connected, std::int64_t beta) {
  audit_membership(p, need_connected, [](const Graph& g) { return std::to_string(matching_number(g)); },
                   std::to_string(beta));
}

}  // namespace

void ExtremalSpec::validate() const {
  const std::int64_t d = beta_star.doubled();
  if (n < 0) throw InvalidInput("extremal spec: n must be non-negative");
  if (d > n) throw InvalidInput("extremal spec violates 2b* <= n");
  if (s < 0) throw InvalidInput("extremal spec violates s >= 0");
  if (2 * s > d) throw InvalidInput("extremal spec violates s <= b*");
  if (t() < s) throw InvalidInput("extremal spec violates t >= s");
  if (middle_clique() == 1) {
    throw InvalidInput("extremal spec has a middle clique of size 1 (2b* - 2s = 1); its vertex covers no edge");
  }
}

Graph build_extremal(const ExtremalSpec& spec) {
  spec.validate();
  const Graph rest = clique_plus_isolated(spec.n - spec.s, spec.middle_clique());
  return join(complete(static_cast<std::size_t>(spec.s)), rest);
}

Graph complete_split(std::int64_t n, std::int64_t b) {
  if (b < 0 || b > n) throw InvalidInput("complete_split needs 0 <= b <= n");
  return join(complete(static_cast<std::size_t>(b)), empty(static_cast<std::size_t>(n - b)));
}

IntPoly theta_cubic_polynomial(std::int64_t n, HalfIntegral beta_star) {
  const std::int64_t d = beta_star.doubled();
  // -4b*^2 + 2b* n + 8b* - 3n - 3 with b* = d/2.
  return IntPoly({-d * d + d * n + 4 * d - 3 * n - 3, -(n - 1), -(d - 3), 1});
}

double theta_cubic(std::int64_t n, HalfIntegral beta_star) {
  if (beta_star.doubled() + 1 > n) throw InvalidInput("theta_cubic needs 2b* + 1 <= n");
  return largest_real_root(theta_cubic_polynomial(n, beta_star));
}

double rho_join_formula(std::int64_t n, std::int64_t b) {
  if (b < 0 || b > n) throw InvalidInput("rho_join_formula needs 0 <= b <= n");
  const auto bm1 = static_cast<double>(b - 1);
  const double disc = bm1 * bm1 + 4.0 * static_cast<double>(b) * static_cast<double>(n - b);
  return (bm1 + std::sqrt(disc)) / 2.0;
}

IntPoly theta_n_polynomial(std::int64_t n) { return IntPoly({2 * (n - 4), -(n - 1), -(n - 4), 1}); }

double theta_n(std::int64_t n) {
  if (n < 3) throw InvalidInput("theta_n needs n >= 3");
  return largest_real_root(theta_n_polynomial(n));
}

double matching_cubic_threshold(std::int64_t n, std::int64_t beta) {
  require_matching_domain(n, beta);
  QuotientMatrix q;
  if (n == 2 * beta) {
    q.cells = 2;
    q.entries = {0, 2 * beta - 1, 1, 2 * beta - 2};
    q.cell_sizes = {1, 2 * beta - 1};
  } else {
    q.cells = 3;
    q.entries = {0, 2 * beta - 1, n - 2 * beta, 1, 2 * beta - 2, 0, 1, 0, 0};
    q.cell_sizes = {1, 2 * beta - 1, n - 2 * beta};
  }
  return quotient_spectral_radius(q);
}

IntPoly matching_cubic_polynomial(std::int64_t n, std::int64_t beta) {
  return IntPoly({2 * (beta - 1) * (n - 2 * beta), 1 - n, -(2 * beta - 2), 1});
}

IntPoly matching_cubic_polynomial_as_printed(std::int64_t n, std::int64_t beta) {
  return IntPoly({2 * (beta - 1) * (n - 2 * beta), -(2 * beta - 2) + (1 - n), 0, 1});
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::fc_complete: return "fc_complete";
    case Regime::fc_cubic: return "fc_cubic";
    case Regime::fc_split: return "fc_split";
    case Regime::fg_complete: return "fg_complete";
    case Regime::fg_clique: return "fg_clique";
    case Regime::fg_tie: return "fg_tie";
    case Regime::fg_split: return "fg_split";
    case Regime::mg_complete: return "mg_complete";
    case Regime::mg_clique: return "mg_clique";
    case Regime::mg_tie: return "mg_tie";
    case Regime::mg_split: return "mg_split";
    case Regime::mc_complete: return "mc_complete";
    case Regime::mc_cubic: return "mc_cubic";
    case Regime::mc_split: return "mc_split";
  }
  return "unknown";
}

RegimePrediction predicted_maximizer_connected(std::int64_t n, HalfIntegral beta_star) {
  require_fractional_domain(n, beta_star);
  const std::int64_t d = beta_star.doubled();
  const std::int64_t up = beta_star.ceil();
  const std::int64_t down = beta_star.floor();
  RegimePrediction p;
  if (n == d) {
    p.regime = Regime::fc_complete;
    p.bound = static_cast<double>(n - 1);
    p.extremal_graphs.push_back(complete(static_cast<std::size_t>(n)));
  } else if (n < 3 * up - 3) {
    p.regime = Regime::fc_cubic;
    p.bound = theta_cubic(n, beta_star);
    p.extremal_graphs.push_back(build_extremal({n, beta_star, 1}));
    cross_check(p, "cubic threshold", p.bound, largest_real_root(char_poly_f_polynomial(n, beta_star, 1)));
  } else {
    p.regime = Regime::fc_split;
    p.bound = rho_join_formula(n, down);
    p.extremal_graphs.push_back(complete_split(n, down));
    cross_check(p, "split threshold", p.bound, largest_real_root(char_poly_g_polynomial(n, down)));
  }
  audit_fractional(p, true, beta_star);
  return p;
}

RegimePrediction predicted_maximizer_general(std::int64_t n, HalfIntegral beta_star) {
  require_fractional_domain(n, beta_star);
  const std::int64_t d = beta_star.doubled();
  const std::int64_t up = beta_star.ceil();
  const std::int64_t down = beta_star.floor();
  RegimePrediction p;
  if (n == d) {
    p.regime = Regime::fg_complete;
    p.bound = static_cast<double>(n - 1);
    p.extremal_graphs.push_back(complete(static_cast<std::size_t>(n)));
  } else if (n <= 3 * up - 1) {
    p.regime = n < 3 * up - 1 ? Regime::fg_clique : Regime::fg_tie;
    p.bound = static_cast<double>(d - 1);
    if (p.regime == Regime::fg_tie) {
      p.extremal_graphs.push_back(complete_split(n, down));
      cross_check(p, "tie value", p.bound, rho_join_formula(n, down));
    }
    p.extremal_graphs.push_back(clique_plus_isolated(n, d));
    p.diagnostics.push_back("printed bound 2b* = " + std::to_string(d) + " replaced by rho(K_{2b*}) = 2b* - 1 = " +
                            std::to_string(d - 1));
  } else {
    p.regime = Regime::fg_split;
    p.bound = rho_join_formula(n, down);
    p.extremal_graphs.push_back(complete_split(n, down));
    cross_check(p, "split threshold", p.bound, largest_real_root(char_poly_g_polynomial(n, down)));
  }
  audit_fractional(p, false, beta_star);
  return p;
}

RegimePrediction matching_bound_general(std::int64_t n, std::int64_t beta) {
  require_matching_domain(n, beta);
  RegimePrediction p;
  if (n <= 2 * beta + 1) {
    p.regime = Regime::mg_complete;
    p.bound = static_cast<double>(n - 1);
    p.extremal_graphs.push_back(complete(static_cast<std::size_t>(n)));
  } else if (n <= 3 * beta + 2) {
    p.regime = n < 3 * beta + 2 ? Regime::mg_clique : Regime::mg_tie;
    p.bound = static_cast<double>(2 * beta);
    if (p.regime == Regime::mg_tie) {
      p.extremal_graphs.push_back(complete_split(n, beta));
      cross_check(p, "tie value", p.bound, rho_join_formula(n, beta));
    }
    p.extremal_graphs.push_back(clique_plus_isolated(n, 2 * beta + 1));
  } else {
    p.regime = Regime::mg_split;
    p.bound = rho_join_formula(n, beta);
    p.extremal_graphs.push_back(complete_split(n, beta));
  }
  audit_matching(p, false, beta);
  return p;
}

RegimePrediction matching_bound_connected(std::int64_t n, std::int64_t beta) {
  require_matching_domain(n, beta);
  RegimePrediction p;
  if (n <= 2 * beta + 1) {
    p.regime = Regime::mc_complete;
    p.bound = static_cast<double>(n - 1);
    p.extremal_graphs.push_back(complete(static_cast<std::size_t>(n)));
  } else if (n <= 3 * beta - 1) {
    p.regime = Regime::mc_cubic;
    p.bound = matching_cubic_threshold(n, beta);
    p.extremal_graphs.push_back(apex_over_clique(n, beta));
    cross_check(p, "printed cubic", largest_real_root(matching_cubic_polynomial_as_printed(n, beta)), p.bound);
  } else {
    p.regime = Regime::mc_split;
    p.bound = rho_join_formula(n, beta);
    p.extremal_graphs.push_back(complete_split(n, beta));
  }
  audit_matching(p, true, beta);
  return p;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_text(const RegimePrediction& p) {
  std::ostringstream out;
  out << "regime " << to_string(p.regime) << '\n' << "bound " << format_real(p.bound) << '\n';
  for (const Graph& g : p.extremal_graphs) {
    out << "extremal " << (g.order() <= kGraph6MaxEncodeOrder ? to_graph6(g) : std::string("-")) << '\n';
  }
  out << "attained " << (p.bound_is_attained ? "true" : "false") << '\n';
  for (const auto& note : p.diagnostics) out << "note " << note << '\n';
  return out.str();
}

}  // namespace fracspec
