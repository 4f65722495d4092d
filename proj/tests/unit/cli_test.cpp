#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cli.hpp"
#include "fracspec/extremal.hpp"
#include "fracspec/graph_io.hpp"

using namespace fracspec;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// First "extremal <g6>" line of the prediction text.
std::string first_extremal(const std::string& text) {
  const auto at = text.find("extremal ");
  REQUIRE(at != std::string::npos);
  const auto end = text.find('\n', at);
  return text.substr(at + 9, end - at - 9);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("threshold") {
    const auto t35 = run_cli({"threshold", "--theorem", "t35", "--n", "8"});
    CHECK(t35.code == 0);
    CHECK(std::fabs(std::stod(t35.out) - 5.07) <= 0.01);
    CHECK(t35.out.rfind("5.0695", 0) == 0);
    CHECK(run_cli({"threshold", "--theorem", "t32", "--n", "8", "--beta-star", "7/2"}).out == "5.06951799192\n");
    CHECK(run_cli({"threshold", "--theorem", "t37", "--n", "10", "--beta", "3"}).out == "5.69041575982\n");
    CHECK(run_cli({"threshold", "--theorem", "t12", "--n", "7", "--beta", "2"}).out == "4\n");
    CHECK(run_cli({"threshold", "--theorem", "t99", "--n", "7"}).code == 1);
    CHECK(run_cli({"threshold", "--theorem", "t32", "--n", "8", "--beta-star", "2.25"}).code == 1);
  }

  TEST_CASE("extremal") {
    const auto built = run_cli({"extremal", "--n", "8", "--beta-star", "7/2", "--s", "1"});
    CHECK(built.code == 0);
    CHECK(built.out == to_graph6(build_extremal({8, HalfIntegral::from_doubled(7), 1})) + "\n");
    CHECK(is_isomorphic(from_graph6(built.out.substr(0, built.out.size() - 1)),
                        join(complete(1), graph_union(complete(5), empty(2)))));
    const auto predicted = run_cli({"extremal", "--n", "8", "--beta-star", "3.5"});
    CHECK(predicted.out.rfind("regime fc_cubic\n", 0) == 0);
    CHECK(run_cli({"extremal", "--n", "8", "--beta-star", "5/2", "--s", "2"}).code == 2);
  }

  TEST_CASE("graph inputs") {
    CHECK(run_cli({"beta-star"}, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").out == "5/2\n");
    CHECK(run_cli({"beta"}, "Dhc\n").out == "2\n");
    CHECK(run_cli({"rho", "--g6", "C~"}).out == "3\n");
    const auto witness = run_cli({"beta-star", "--witness", "--g6", "Bw"});
    CHECK(witness.out == "3/2\nedge 0 1 1/2\nedge 0 2 1/2\nedge 1 2 1/2\n");
    CHECK(run_cli({"transversal", "--g6", "Cs"}).code == 0);
    CHECK(run_cli({"decompose", "--g6", "Bw"}).out.find("part CYCLE") != std::string::npos);
  }

  TEST_CASE("certify report") {
    const auto r = run_cli({"certify", "--g6", "G~~~~{"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"beta_star_doubled\"") != std::string::npos);
    CHECK(r.out.find("\"sound\": true") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);

    const auto bad = run_cli({"rho", "--g6", "B!"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("at byte 1") != std::string::npos);

    CHECK(run_cli({"decompose", "--g6", "Bg"}).code == 2);  // P_3 has no fractional perfect matching
    CHECK(run_cli({"verify", "--theorem", "t32", "--n", "8"}).code == 2);

    CHECK(run_cli({"verify", "--theorem", "t32", "--n", "5"}).code == 0);
    CHECK(run_cli({"verify", "--theorem", "t32", "--n", "5", "--inject-bound-offset", "-1"}).code == 3);
    CHECK(run_cli({"verify", "--theorem", "certificates", "--n", "4"}).code == 0);
    CHECK(run_cli({"verify", "--theorem", "structure", "--n", "4"}).code == 0);
    CHECK(run_cli({"cross-check", "--n", "4"}).code == 0);
  }

  TEST_CASE("extremal output round-trips through rho") {
    int pairs = 0;
    for (std::int64_t n = 4; n <= 16 && pairs < 50; ++n) {
      for (std::int64_t d = 2; d <= n && pairs < 50; d += 2) {
        const std::string b = HalfIntegral::from_doubled(d).to_string();
        const auto text = run_cli({"extremal", "--n", std::to_string(n), "--beta-star", b});
        REQUIRE(text.code == 0);
        const auto rho = run_cli({"rho"}, first_extremal(text.out) + "\n");
        const auto threshold = run_cli({"threshold", "--theorem", "t32", "--n", std::to_string(n), "--beta-star", b});
        CAPTURE(n);
        CAPTURE(d);
        REQUIRE(std::fabs(std::stod(rho.out) - std::stod(threshold.out)) <= 1e-8);
        ++pairs;
      }
    }
    CHECK(pairs == 50);
  }
}
