#include "fracspec/certify.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <json.hpp>

#include "fracspec/errors.hpp"
#include "fracspec/extremal.hpp"
#include "fracspec/graph_io.hpp"
#include "fracspec/matching.hpp"

namespace fracspec {

namespace {

constexpr std::size_t kTruthDefaultMaxOrder = 12;

CertificateRecord not_applicable(std::string name, Guarantee guarantee, std::string why) {
  CertificateRecord r;
  r.name = std::move(name);
  r.guarantee = guarantee;
  r.note = std::move(why);
  return r;
}

// Hypothesis rho > threshold.
CertStatus compare_above(double rho, double threshold) {
  if (rho > threshold + kGuardBand) return CertStatus::fired;
  if (std::fabs(rho - threshold) <= kGuardBand) return CertStatus::at_threshold;
  return CertStatus::not_fired;
}

// Hypothesis rho < threshold.
CertStatus compare_below(double rho, double threshold) {
  if (rho < threshold - kGuardBand) return CertStatus::fired;
  if (std::fabs(rho - threshold) <= kGuardBand) return CertStatus::at_threshold;
  return CertStatus::not_fired;
}

CertificateRecord decided(std::string name, Guarantee guarantee, double threshold, CertStatus status, std::string note) {
  CertificateRecord r;
  r.name = std::move(name);
  r.guarantee = guarantee;
  r.threshold = threshold;
  r.status = status;
  r.note = std::move(note);
  return r;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// Thresholds depend only on (n, parameter); sweeps ask for the same few
// values millions of times.
enum class ThresholdKind { theta_n, theta_cubic, matching_cubic };

template <typename Compute>
double cached(ThresholdKind kind, std::int64_t n, std::int64_t p, Compute compute) {
  thread_local std::map<std::tuple<ThresholdKind, std::int64_t, std::int64_t>, double> cache;
  const auto key = std::make_tuple(kind, n, p);
  if (const auto it = cache.find(key); it != cache.end()) return it->second;
  const double value = compute();
  cache.emplace(key, value);
  return value;
}

double cached_theta_n(std::int64_t n) {
  return cached(ThresholdKind::theta_n, n, 0, [n] { return theta_n(n); });
}

double cached_theta_cubic(std::int64_t n, HalfIntegral b) {
  return cached(ThresholdKind::theta_cubic, n, b.doubled(), [n, b] { return theta_cubic(n, b); });
}

double cached_matching_cubic(std::int64_t n, std::int64_t beta) {
  return cached(ThresholdKind::matching_cubic, n, beta, [n, beta] { return matching_cubic_threshold(n, beta); });
}

}  // namespace

std::string Guarantee::describe() const {
  switch (kind) {
    case Kind::fractional_perfect_matching: return "beta_star = n/2";
    case Kind::perfect_matching: return "beta = n/2";
    case Kind::beta_star_at_least: return "beta_star >= " + HalfIntegral::from_doubled(value).to_string();
    case Kind::beta_at_least: return "beta >= " + std::to_string(value);
  }
  return "";
}

bool Guarantee::holds(std::int64_t beta, HalfIntegral beta_star) const noexcept {
  switch (kind) {
    case Kind::fractional_perfect_matching: return beta_star.doubled() == value;
    case Kind::perfect_matching: return 2 * beta == value;
    case Kind::beta_star_at_least: return beta_star.doubled() >= value;
    case Kind::beta_at_least: return beta >= value;
  }
  return false;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::not_applicable: return "not_applicable";
    case CertStatus::fired: return "fired";
    case CertStatus::not_fired: return "not_fired";
    case CertStatus::at_threshold: return "at_threshold";
  }
  return "unknown";
}

GraphFacts graph_facts(const Graph& g, double tol) {
  GraphFacts f;
  f.n = g.order();
  f.rho_tol = tol;
  if (f.n == 0) return f;
  f.connected = is_connected(g);
  f.delta = min_degree(g);
  f.rho = spectral_radius(g, tol).value;
  return f;
}

CertificateRecord cert_xue(const GraphFacts& f) {
  const Guarantee promise{Guarantee::Kind::fractional_perfect_matching, as_int(f.n)};
  if (f.n < 2) return not_applicable("xue", promise, "needs n >= 2");
  if (!f.connected) return not_applicable("xue", promise, "graph is disconnected");
  const double n = static_cast<double>(f.n);
  const double threshold = static_cast<double>(f.delta) * std::sqrt((n + 1.0) / (n - 1.0));
  return decided("xue", promise, threshold, compare_below(f.rho, threshold), "rho < delta sqrt((n+1)/(n-1))");
}

CertificateRecord cert_fpm_spectral(const GraphFacts& f) {
  const Guarantee promise{Guarantee::Kind::fractional_perfect_matching, as_int(f.n)};
  if (f.n < 3) return not_applicable("fpm", promise, "needs n >= 3");
  if (!f.connected) return not_applicable("fpm", promise, "graph is disconnected");
  const auto n = as_int(f.n);
  if (n >= 8 && n != 9) {
    const double threshold = cached_theta_n(n);
    return decided("fpm", promise, threshold, compare_above(f.rho, threshold), "theta(n)");
  }
  const double threshold = rho_join_formula(n, (n - 1) / 2);
  return decided("fpm", promise, threshold, compare_above(f.rho, threshold), "split value at b* = (n-1)/2");
}

CertificateRecord cert_pm_spectral(const GraphFacts& f) {
  const Guarantee promise{Guarantee::Kind::perfect_matching, as_int(f.n)};
  if (f.n % 2 != 0) return not_applicable("pm", promise, "n is odd");
  if (f.n < 4) return not_applicable("pm", promise, "needs n >= 4");
  if (!f.connected) return not_applicable("pm", promise, "graph is disconnected");
  const auto n = as_int(f.n);
  double threshold = 0.0;
  std::string note;
  if (n == 4) {
    threshold = std::sqrt(3.0);
    note = "sqrt(3)";
  } else if (n == 6) {
    threshold = (1.0 + std::sqrt(33.0)) / 2.0;
    note = "(1+sqrt(33))/2";
  } else {
    threshold = cached_theta_n(n);
    note = "theta(n)";
  }
  return decided("pm", promise, threshold, compare_above(f.rho, threshold), note);
}

CertificateRecord cert_beta_star_increment(const GraphFacts& f, HalfIntegral target) {
  const std::int64_t k = target.doubled();
  const std::string name = "beta_star_increment(" + target.to_string() + ")";
  const Guarantee promise{Guarantee::Kind::beta_star_at_least, k + 1};
  if (f.n < 3) return not_applicable(name, promise, "needs n >= 3");
  if (!f.connected) return not_applicable(name, promise, "graph is disconnected");
  const auto n = as_int(f.n);
  if (k < 1 || k > n - 1) throw InvalidInput("beta_star_increment target must satisfy 1 <= 2b* <= n-1");
  if (k % 2 == 0 && 2 * (n + 3) < 3 * k && n >= 11) {
    const double threshold = cached_theta_cubic(n, target);
    return decided(name, promise, threshold, compare_above(f.rho, threshold), "even case, theta(n, b*)");
  }
  if (k % 2 == 1 && 2 * n + 3 < 3 * k && n >= 8 && n != 9) {
    const double threshold = cached_theta_cubic(n, target);
    return decided(name, promise, threshold, compare_above(f.rho, threshold), "odd case, theta(n, b*)");
  }
  if (3 * target.ceil() <= n + 3) {
    const double threshold = rho_join_formula(n, target.floor());
    return decided(name, promise, threshold, compare_above(f.rho, threshold), "split case");
  }
  return not_applicable(name, promise, "no case covers (n, b*)");
}

CertificateRecord cert_beta_increment(const GraphFacts& f, std::int64_t beta) {
  const std::string name = "beta_increment(" + std::to_string(beta) + ")";
  const Guarantee promise{Guarantee::Kind::beta_at_least, beta + 1};
  if (!f.connected) return not_applicable(name, promise, "graph is disconnected");
  const auto n = as_int(f.n);
  if (beta < 1 || 2 * beta > n - 2) throw InvalidInput("beta_increment needs 1 <= beta <= (n-2)/2");
  if (3 * beta >= n + 1 && n >= 8) {
    const double threshold = cached_matching_cubic(n, beta);
    return decided(name, promise, threshold, compare_above(f.rho, threshold), "cubic case");
  }
  if (3 * beta <= n) {
    const double threshold = rho_join_formula(n, beta);
    return decided(name, promise, threshold, compare_above(f.rho, threshold), "split case");
  }
  return not_applicable(name, promise, "no case covers (n, beta)");
}

CertificateRecord cert_xue(const Graph& g) { return cert_xue(graph_facts(g)); }
CertificateRecord cert_fpm_spectral(const Graph& g) { return cert_fpm_spectral(graph_facts(g)); }
CertificateRecord cert_pm_spectral(const Graph& g) { return cert_pm_spectral(graph_facts(g)); }
CertificateRecord cert_beta_star_increment(const Graph& g, HalfIntegral target) {
  return cert_beta_star_increment(graph_facts(g), target);
}
CertificateRecord cert_beta_increment(const Graph& g, std::int64_t beta) {
  return cert_beta_increment(graph_facts(g), beta);
}

bool CertificateReport::sound() const noexcept {
  for (const auto& c : certificates) {
    if (c.unsound()) return false;
  }
  return true;
}

CertificateReport certify_all(const Graph& g, bool verify_truth, double tol) {
  CertificateReport r;
  r.graph = g.order() <= kGraph6MaxEncodeOrder ? to_graph6(g) : std::string();
  r.facts = graph_facts(g, tol);
  r.beta = static_cast<std::int64_t>(matching_number(g));
  r.beta_star = fractional_matching_number(g);

  const auto n = as_int(g.order());
  auto& out = r.certificates;
  out.push_back(cert_xue(r.facts));
  out.push_back(cert_fpm_spectral(r.facts));
  out.push_back(cert_pm_spectral(r.facts));
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    out.push_back(cert_beta_star_increment(r.facts, HalfIntegral::from_doubled(k)));
  }
  for (std::int64_t b = 1; 2 * b <= n - 2; ++b) out.push_back(cert_beta_increment(r.facts, b));

  if (verify_truth) {
    for (auto& c : out) {
      if (c.applicable()) c.truth = c.guarantee.holds(r.beta, r.beta_star);
    }
  }
  return r;
}

CertificateReport certify_all(const Graph& g) { return certify_all(g, g.order() <= kTruthDefaultMaxOrder); }

std::string to_json(const CertificateReport& r, int indent) {
  using nlohmann::json;
  json certs = json::array();
  for (const auto& c : r.certificates) {
    json item;
    item["name"] = c.name;
    item["applicable"] = c.applicable();
    item["fired"] = c.fired();
    item["status"] = to_string(c.status);
    item["threshold"] = c.threshold ? json(*c.threshold) : json(nullptr);
    item["guarantee"] = c.guarantee.describe();
    item["truth"] = c.truth ? json(*c.truth) : json(nullptr);
    item["note"] = c.note;
    certs.push_back(std::move(item));
  }
  json doc;
  doc["graph"] = r.graph;
  doc["n"] = r.facts.n;
  doc["connected"] = r.facts.connected;
  doc["delta"] = r.facts.delta;
  doc["rho"] = r.facts.rho;
  doc["rho_tol"] = r.facts.rho_tol;
  doc["beta"] = r.beta;
  doc["beta_star_doubled"] = r.beta_star.doubled();
  doc["certificates"] = std::move(certs);
  doc["sound"] = r.sound();
  return doc.dump(indent);
}

}  // namespace fracspec
