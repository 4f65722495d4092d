#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracspec/graph.hpp"
#include "fracspec/half_integral.hpp"
#include "fracspec/spectral.hpp"

namespace fracspec {

/// Half-width of the band around a threshold inside which rho counts as
/// equal to it. Strict inequalities must clear the band to fire.
inline constexpr double kGuardBand = 1e-9;

/// What a fired certificate promises about the graph.
struct Guarantee {
  enum class Kind { fractional_perfect_matching, perfect_matching, beta_star_at_least, beta_at_least };
  Kind kind = Kind::fractional_perfect_matching;
  /// Doubled fractional matching number for beta_star_at_least; matching
  /// number for beta_at_least; n for the two perfect variants.
  std::int64_t value = 0;

  /// e.g. "beta_star >= 3" or "beta = n/2".
  std::string describe() const;
  bool holds(std::int64_t beta, HalfIntegral beta_star) const noexcept;
};

enum class CertStatus { not_applicable, fired, not_fired, at_threshold };
std::string to_string(CertStatus s);

struct CertificateRecord {
  std::string name;
  CertStatus status = CertStatus::not_applicable;
  /// The spectral threshold that was compared against, when applicable.
  std::optional<double> threshold;
  Guarantee guarantee;
  /// Whether the guarantee holds, when ground truth was computed.
  std::optional<bool> truth;
  /// Why the certificate does not apply, or which case was used.
  std::string note;

  bool applicable() const noexcept { return status != CertStatus::not_applicable; }
  bool fired() const noexcept { return status == CertStatus::fired; }
  /// Fired with a guarantee that ground truth refutes.
  bool unsound() const noexcept { return fired() && truth.has_value() && !*truth; }
};

/// Graph quantities every certificate reads.
struct GraphFacts {
  std::size_t n = 0;
  bool connected = false;
  std::size_t delta = 0;
  double rho = 0.0;
  double rho_tol = kDefaultTolerance;
};

/// n = 0 yields all-zero facts without running the eigen-solver.
GraphFacts graph_facts(const Graph& g, double tol = kDefaultTolerance);

/// rho < delta sqrt((n+1)/(n-1)) implies a fractional perfect matching.
/// Needs a connected graph with n >= 2.
CertificateRecord cert_xue(const GraphFacts& f);
/// rho above theta(n) (n >= 8, n != 9) or above the split value with
/// b* = (n-1)/2 (3 <= n <= 7, n = 9) implies a fractional perfect matching.
CertificateRecord cert_fpm_spectral(const GraphFacts& f);
/// Even n: rho above sqrt(3) (n = 4), (1+sqrt(33))/2 (n = 6) or theta(n)
/// (n >= 8) implies a perfect matching.
CertificateRecord cert_pm_spectral(const GraphFacts& f);
/// rho above the case threshold implies b*(G) >= target + 1/2. Requires
/// 1 <= 2 target <= n - 1 (InvalidInput otherwise) once the graph is
/// connected with n >= 3.
CertificateRecord cert_beta_star_increment(const GraphFacts& f, HalfIntegral target);
/// rho above the case threshold implies beta(G) >= beta + 1. Requires
/// 1 <= beta <= (n-2)/2 (InvalidInput otherwise) once the graph is connected.
CertificateRecord cert_beta_increment(const GraphFacts& f, std::int64_t beta);

/// Convenience overloads computing the facts first.
CertificateRecord cert_xue(const Graph& g);
CertificateRecord cert_fpm_spectral(const Graph& g);
CertificateRecord cert_pm_spectral(const Graph& g);
CertificateRecord cert_beta_star_increment(const Graph& g, HalfIntegral target);
CertificateRecord cert_beta_increment(const Graph& g, std::int64_t beta);

struct CertificateReport {
  std::string graph;  // graph6, empty above the encodable order
  GraphFacts facts;
  std::int64_t beta = 0;
  HalfIntegral beta_star;
  std::vector<CertificateRecord> certificates;

  bool sound() const noexcept;
};

/// Runs xue, fpm, pm, then the b*-increment for every target k/2 with
/// 1 <= k <= n-1, then the beta-increment for 1 <= beta <= (n-2)/2, in that
/// order. With verify_truth each applicable record gets its truth filled in.
CertificateReport certify_all(const Graph& g, bool verify_truth, double tol = kDefaultTolerance);
/// verify_truth defaults on for n <= 12.
CertificateReport certify_all(const Graph& g);

/// JSON object with fields graph, n, connected, delta, rho, rho_tol, beta,
/// beta_star_doubled, certificates[{name, applicable, fired, status,
/// threshold, guarantee, truth, note}] and sound.
std::string to_json(const CertificateReport& r, int indent = 2);

}  // namespace fracspec
