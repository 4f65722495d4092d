#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fracspec/extremal.hpp"
#include "fracspec/graph.hpp"
#include "fracspec/half_integral.hpp"

namespace fracspec {

/// Largest order enumerated by default; one more is allowed with long_run.
inline constexpr std::size_t kMaxEnumerationOrder = 7;
inline constexpr std::size_t kMaxLongRunOrder = 8;
/// Tolerance for comparing rho against bounds and against other graphs.
inline constexpr double kHarnessTolerance = 1e-8;

/// Number of vertex pairs, n(n-1)/2.
std::size_t pair_count(std::size_t n);
/// The labelled graph whose edge bits are `code`: bit i is the i-th pair in
/// graph6 column order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Calls visit(code, graph) for every labelled graph on n vertices in
/// ascending code order, optionally only the connected ones. Throws
/// LimitExceeded above kMaxEnumerationOrder (kMaxLongRunOrder with long_run).
void enumerate_graphs(std::size_t n, bool connected_only, const std::function<void(std::uint64_t, const Graph&)>& visit,
                      bool long_run = false);

/// Exhaustive maximum of the doubled weight sum over {0,1,2}^m with vertex
/// sums at most 2; m <= 18.
HalfIntegral oracle_beta_star(const Graph& g);
/// Exhaustive maximum independent edge set; m <= 24.
std::int64_t oracle_beta(const Graph& g);
inline constexpr std::size_t kOracleBetaStarMaxEdges = 18;
inline constexpr std::size_t kOracleBetaMaxEdges = 24;

enum class Theorem { t32, t33, t12, t13 };
std::string to_string(Theorem t);
/// Accepts "t32", "t33", "t12", "t13".
Theorem parse_theorem(const std::string& text);
/// Connected-only theorems: t32 and t13.
bool theorem_is_connected(Theorem t);
/// t32/t33 bucket by fractional matching number, t12/t13 by matching number.
bool theorem_is_fractional(Theorem t);

struct VerifyOptions {
  std::size_t jobs = 1;
  bool long_run = false;
  /// Only these class parameters (2b* or beta) get spectral radii; empty
  /// means all classes.
  std::set<std::int64_t> classes;
  /// Added to every predicted bound. Non-zero only to exercise failure paths.
  double bound_offset = 0.0;
};

struct ClassRecord {
  /// 2b* for t32/t33, beta for t12/t13.
  std::int64_t parameter = 0;
  std::uint64_t members = 0;
  Regime regime{};
  double bound = 0.0;
  double max_rho = 0.0;
  /// Pairwise non-isomorphic maximizers, each the lowest-coded labelled copy.
  std::vector<Graph> maximizers;
  std::vector<Graph> predicted;
  /// No member exceeds the bound by more than the tolerance.
  bool bound_holds = true;
  /// Every maximizer at the bound is isomorphic to a predicted graph.
  bool equality_matches = true;
  /// Every predicted graph that really lies in the class is a maximizer.
  bool predictions_attained = true;
  /// Maximizers equal the predicted set up to isomorphism, at the bound.
  bool argmax_matches = false;
  /// A violating graph, when bound_holds is false.
  std::optional<std::string> violation_g6;

  /// The hard checks.
  bool ok() const noexcept { return bound_holds && equality_matches && predictions_attained; }
};

struct VerificationReport {
  Theorem theorem{};
  std::size_t n = 0;
  std::uint64_t labeled = 0;
  std::uint64_t examined = 0;  // connected count for connected theorems
  std::vector<ClassRecord> classes;
  /// Hard failures, one line each.
  std::vector<std::string> discrepancies;
  /// Facts observed along the way that are not failures: predicted graphs
  /// outside their class, classes whose bound is not attained, and so on.
  std::vector<std::string> findings;
  /// How the printed-constant questions came out at this n.
  std::vector<std::string> resolution;

  bool ok() const noexcept { return discrepancies.empty(); }
};

VerificationReport verify_theorem(Theorem theorem, std::size_t n, const VerifyOptions& options = {});

/// Columns n, two_beta_star, regime, bound, max_rho, n_maximizers,
/// argmax_g6, prediction_g6, bound_holds, argmax_matches; several graph6
/// codes in one cell are joined by ';'. For t12/t13 the second column holds
/// the matching number.
std::string to_csv(const VerificationReport& r, bool header = true);
/// Human-readable summary: population, class lines, findings, resolution.
std::string summary(const VerificationReport& r);

struct SoundnessReport {
  std::size_t n = 0;
  std::uint64_t examined = 0;
  /// Per certificate family (xue, fpm, pm, beta_star_increment,
  /// beta_increment): applicable, fired and at-threshold counts.
  struct Tally {
    std::uint64_t applicable = 0;
    std::uint64_t fired = 0;
    std::uint64_t at_threshold = 0;
    std::uint64_t unsound = 0;
  };
  std::map<std::string, Tally> tallies;
  /// "graph6 certificate" for every fired-but-false record.
  std::vector<std::string> unsound;

  bool ok() const noexcept { return unsound.empty(); }
};

/// certify_all with ground truth on every connected labelled graph.
SoundnessReport verify_certificates(std::size_t n, const VerifyOptions& options = {});
std::string summary(const SoundnessReport& r);

struct CrossCheckReport {
  std::size_t n = 0;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t beta_star_agree = 0;
  std::uint64_t beta_agree = 0;
  std::vector<std::string> mismatches;

  bool ok() const noexcept { return mismatches.empty() && beta_star_agree == checked && beta_agree == checked; }
};

/// Library values against the exhaustive oracles: every labelled graph for
/// n <= 6, otherwise `samples` random graphs whose edge count is uniform on
/// [0, min(N, 18)] with N the number of pairs (the fractional oracle's cap).
CrossCheckReport cross_check_matching_implementations(std::size_t n, std::size_t samples, std::uint64_t seed = 20240601);
std::string summary(const CrossCheckReport& r);

struct StructureAudit {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t connected = 0;
  std::uint64_t duality_failures = 0;   // primal total != dual total, or infeasible witness
  std::uint64_t wrc_failures = 0;       // connected graphs only
  std::uint64_t canonical_failures = 0;
  std::uint64_t fpm_failures = 0;  // partition exists iff 2b* = n
  std::uint64_t fpm_graphs = 0;
  std::vector<std::string> examples;

  bool ok() const noexcept {
    return duality_failures == 0 && wrc_failures == 0 && canonical_failures == 0 && fpm_failures == 0;
  }
};

/// Duality, W/R/C, canonical-form and fractional-perfect-matching partition
/// checks over every labelled graph on n vertices.
StructureAudit audit_structure(std::size_t n, const VerifyOptions& options = {});
std::string summary(const StructureAudit& a);

}  // namespace fracspec
