#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fracspec/certify.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/extremal.hpp"
#include "fracspec/graph_io.hpp"
#include "fracspec/matching.hpp"
#include "fracspec/spectral.hpp"
#include "fracspec/verify.hpp"

namespace fracspec::cli {

namespace {

struct GraphSource {
  std::string g6;
  std::string edges;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--g6", src.g6, "Graph in graph6 format");
  cmd->add_option("--edges", src.edges, "Edge-list file: 'n m' then m lines 'u v'");
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    if (token.find_first_of(" \t") != std::string::npos) {
      std::istringstream body(text);
      return read_edge_list(body);
    }
    return from_graph6(token);
  }
  throw InvalidInput("no graph on standard input");
}

Graph read_graph(const GraphSource& src, std::istream& in) {
  if (!src.g6.empty() && !src.edges.empty()) throw InvalidInput("give either --g6 or --edges, not both");
  if (!src.g6.empty()) return from_graph6(src.g6);
  if (!src.edges.empty()) {
    std::ifstream file(src.edges);
    if (!file) throw InvalidInput("cannot open edge list '" + src.edges + "'");
    return read_edge_list(file);
  }
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph_text(text);
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing ") + flag);
  return *v;
}

HalfIntegral require_half(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
  return HalfIntegral::parse(text);
}

double threshold_for(const std::string& theorem, std::int64_t n, const std::string& beta_star_text,
                     const std::optional<std::int64_t>& beta) {
  if (theorem == "t32") return predicted_maximizer_connected(n, require_half(beta_star_text, "--beta-star")).bound;
  if (theorem == "t33") return predicted_maximizer_general(n, require_half(beta_star_text, "--beta-star")).bound;
  if (theorem == "t12") return matching_bound_general(n, require(beta, "--beta")).bound;
  if (theorem == "t13") return matching_bound_connected(n, require(beta, "--beta")).bound;
  GraphFacts facts;
  facts.n = static_cast<std::size_t>(std::max<std::int64_t>(n, 0));
  facts.connected = true;
  const CertificateRecord r =
      theorem == "t35" ? cert_fpm_spectral(facts) : cert_beta_increment(facts, require(beta, "--beta"));
  if (!r.threshold) throw InvalidInput(r.name + " has no threshold here: " + r.note);
  return *r.threshold;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius, (fractional) matchings and extremal bounds for small graphs", "fracspec"};
  app.require_subcommand(1);

  GraphSource src;
  double tol = kDefaultTolerance;
  bool witness = false;

  auto* rho_cmd = app.add_subcommand("rho", "Spectral radius of the adjacency matrix");
  add_graph_options(rho_cmd, src);
  rho_cmd->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto* beta_cmd = app.add_subcommand("beta", "Matching number");
  add_graph_options(beta_cmd, src);
  beta_cmd->add_flag("--witness", witness, "Also print a maximum matching");

  auto* star_cmd = app.add_subcommand("beta-star", "Fractional matching number");
  add_graph_options(star_cmd, src);
  star_cmd->add_flag("--witness", witness, "Also print a canonical optimal fractional matching");

  auto* transversal_cmd = app.add_subcommand("transversal", "Optimal fractional transversal and its W/R/C parts");
  add_graph_options(transversal_cmd, src);

  auto* decompose_cmd = app.add_subcommand("decompose", "Partition certifying a fractional perfect matching");
  add_graph_options(decompose_cmd, src);

  bool no_truth = false;
  auto* certify_cmd = app.add_subcommand("certify", "Evaluate every spectral certificate (JSON report)");
  add_graph_options(certify_cmd, src);
  certify_cmd->add_flag("--no-truth", no_truth, "Skip the ground-truth soundness check");

  std::optional<std::int64_t> n_opt, s_opt, beta_opt;
  std::string beta_star_text;
  bool general = false;
  auto* extremal_cmd = app.add_subcommand("extremal", "Build K_s v (K_{2b*-2s} u tK_1), or the predicted maximizer");
  extremal_cmd->add_option("--n", n_opt, "Order")->required();
  extremal_cmd->add_option("--beta-star", beta_star_text, "Fractional matching number, k/2, k, x.0 or x.5")->required();
  extremal_cmd->add_option("--s", s_opt, "Size of the weight-1 part; omit for the prediction");
  extremal_cmd->add_flag("--general", general, "Predict over all graphs instead of connected ones");

  std::string theorem;
  auto* threshold_cmd = app.add_subcommand("threshold", "Spectral threshold of a bound or certificate");
  threshold_cmd->add_option("--theorem", theorem, "t32, t33, t35, t37, t12 or t13")
      ->required()
      ->check(CLI::IsMember({"t32", "t33", "t35", "t37", "t12", "t13"}));
  threshold_cmd->add_option("--n", n_opt, "Order")->required();
  threshold_cmd->add_option("--beta-star", beta_star_text, "Fractional matching number (t32, t33)");
  threshold_cmd->add_option("--beta", beta_opt, "Matching number (t12, t13, t37)");

  std::size_t jobs = 1;
  std::string out_path;
  bool connected = false, long_run = false;
  double bound_offset = 0.0;
  std::vector<std::int64_t> classes;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification over labelled graphs");
  verify_cmd->add_option("--theorem", theorem, "t32, t33, t12, t13, certificates or structure")
      ->required()
      ->check(CLI::IsMember({"t32", "t33", "t12", "t13", "certificates", "structure"}));
  verify_cmd->add_option("--n", n_opt, "Order")->required();
  verify_cmd->add_flag("--connected", connected, "Connected graphs only (t33 runs as t32, t12 as t13)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "Write the CSV report here");
  verify_cmd->add_flag("--long-run", long_run, "Allow n = 8");
  verify_cmd->add_option("--class", classes, "Only these class parameters (2b* or beta)");
  verify_cmd->add_option("--inject-bound-offset", bound_offset)->group("");

  std::size_t samples = 1000;
  std::uint64_t seed = 20240601;
  auto* cross_cmd = app.add_subcommand("cross-check", "Library matching numbers against exhaustive oracles");
  cross_cmd->add_option("--n", n_opt, "Order")->required();
  cross_cmd->add_option("--samples", samples, "Random graphs for n > 6");
  cross_cmd->add_option("--seed", seed, "Sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (rho_cmd->parsed()) {
      out << format_real(spectral_radius(read_graph(src, in), tol).value) << '\n';
    } else if (beta_cmd->parsed()) {
      const Matching m = maximum_matching(read_graph(src, in));
      out << m.size() << '\n';
      if (witness) {
        for (const Edge& e : m.edges) out << "edge " << e.u << ' ' << e.v << " 1\n";
      }
    } else if (star_cmd->parsed()) {
      const Graph g = read_graph(src, in);
      out << fractional_matching_number(g).to_string() << '\n';
      if (witness) write_witness(out, optimal_fractional_matching(g));
    } else if (transversal_cmd->parsed()) {
      const Graph g = read_graph(src, in);
      const Transversal t = fractional_transversal(g);
      const WrcReport w = wrc_decomposition(g, t);
      out << t.total().to_string() << '\n';
      write_witness(out, t);
      out << "wrc s " << w.s << " t " << w.t << " c " << w.c << " ok " << (w.ok() ? "true" : "false") << '\n';
    } else if (decompose_cmd->parsed()) {
      const Graph g = read_graph(src, in);
      if (!has_fractional_perfect_matching(g)) {
        err << "no fractional perfect matching: beta_star = " << fractional_matching_number(g).to_string() << '\n';
        return kComputationError;
      }
      write_witness(out, fpm_partition(g, optimal_fractional_matching(g)));
    } else if (certify_cmd->parsed()) {
      const Graph g = read_graph(src, in);
      const CertificateReport report = certify_all(g, !no_truth);
      out << to_json(report) << '\n';
      if (!report.sound()) return kVerificationFailure;
    } else if (extremal_cmd->parsed()) {
      const std::int64_t n = *n_opt;
      const HalfIntegral b = HalfIntegral::parse(beta_star_text);
      if (s_opt) {
        const Graph g = build_extremal({n, b, *s_opt});
        if (g.order() > kGraph6MaxEncodeOrder) {
          write_edge_list(out, g);
        } else {
          out << to_graph6(g) << '\n';
        }
      } else {
        out << to_text(general ? predicted_maximizer_general(n, b) : predicted_maximizer_connected(n, b));
      }
    } else if (threshold_cmd->parsed()) {
      out << format_real(threshold_for(theorem, *n_opt, beta_star_text, beta_opt)) << '\n';
    } else if (verify_cmd->parsed()) {
      if (*n_opt < 1) throw InvalidInput("--n must be positive");
      const auto n = static_cast<std::size_t>(*n_opt);
      VerifyOptions options;
      options.jobs = jobs;
      options.long_run = long_run;
      options.bound_offset = bound_offset;
      options.classes.insert(classes.begin(), classes.end());
      bool ok = false;
      if (theorem == "certificates") {
        const SoundnessReport r = verify_certificates(n, options);
        out << summary(r);
        ok = r.ok();
      } else if (theorem == "structure") {
        const StructureAudit a = audit_structure(n, options);
        out << summary(a);
        ok = a.ok();
      } else {
        Theorem t = parse_theorem(theorem);
        if (connected && t == Theorem::t33) t = Theorem::t32;
        if (connected && t == Theorem::t12) t = Theorem::t13;
        const VerificationReport r = verify_theorem(t, n, options);
        out << summary(r);
        if (!out_path.empty()) {
          std::ofstream csv(out_path);
          if (!csv) throw InvalidInput("cannot write '" + out_path + "'");
          csv << to_csv(r);
        }
        ok = r.ok();
      }
      if (!ok) return kVerificationFailure;
    } else if (cross_cmd->parsed()) {
      if (*n_opt < 1) throw InvalidInput("--n must be positive");
      const CrossCheckReport r = cross_check_matching_implementations(static_cast<std::size_t>(*n_opt), samples, seed);
      out << summary(r);
      if (!r.ok()) return kVerificationFailure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kSuccess;
}

}  // namespace fracspec::cli
