#include <doctest.h>

#include <cmath>

#include "fracspec/errors.hpp"
#include "fracspec/graph_io.hpp"
#include "fracspec/matching.hpp"
#include "fracspec/spectral.hpp"
#include "fracspec/verify.hpp"

using namespace fracspec;

namespace {

std::pair<std::uint64_t, std::uint64_t> count(std::size_t n) {
  std::uint64_t all = 0, connected = 0;
  enumerate_graphs(n, false, [&](std::uint64_t, const Graph& g) {
    ++all;
    if (g.order() > 0 && is_connected(g)) ++connected;
  });
  std::uint64_t filtered = 0;
  enumerate_graphs(n, true, [&](std::uint64_t, const Graph&) { ++filtered; });
  REQUIRE(filtered == connected);
  return {all, connected};
}

const ClassRecord& find_class(const VerificationReport& r, std::int64_t parameter) {
  for (const auto& c : r.classes) {
    if (c.parameter == parameter) return c;
  }
  FAIL("class missing");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("edge codes") {
    CHECK(pair_count(4) == 6);
    CHECK(graph_from_code(3, 0b111) == complete(3));
    CHECK(graph_from_code(3, 0b001) == Graph::from_edge_list(3, {{0, 1}}));
    CHECK(graph_from_code(3, 0b010) == Graph::from_edge_list(3, {{0, 2}}));
    CHECK(graph_from_code(3, 0b100) == Graph::from_edge_list(3, {{1, 2}}));
    CHECK(graph_from_code(4, 0b001000) == Graph::from_edge_list(4, {{0, 3}}));
    CHECK_THROWS_AS(graph_from_code(3, 0b1000), InvalidInput);
  }

  TEST_CASE("labelled graph counts") {
    CHECK(count(1) == std::make_pair<std::uint64_t, std::uint64_t>(1, 1));
    CHECK(count(3) == std::make_pair<std::uint64_t, std::uint64_t>(8, 4));
    CHECK(count(4) == std::make_pair<std::uint64_t, std::uint64_t>(64, 38));
    CHECK(count(5) == std::make_pair<std::uint64_t, std::uint64_t>(1024, 728));
    CHECK(count(6) == std::make_pair<std::uint64_t, std::uint64_t>(32768, 26704));
    CHECK_THROWS_AS(enumerate_graphs(8, false, [](std::uint64_t, const Graph&) {}), LimitExceeded);
    CHECK_THROWS_AS(enumerate_graphs(9, false, [](std::uint64_t, const Graph&) {}, true), LimitExceeded);
  }

  TEST_CASE("enumeration order is ascending") {
    std::uint64_t last = 0;
    bool first = true;
    enumerate_graphs(5, true, [&](std::uint64_t code, const Graph& g) {
      if (!first) REQUIRE(code > last);
      REQUIRE(g == graph_from_code(5, code));
      first = false;
      last = code;
    });
  }

  TEST_CASE("exhaustive oracles") {
    CHECK(oracle_beta_star(cycle(5)) == HalfIntegral::from_doubled(5));
    CHECK(oracle_beta_star(complete(4)) == HalfIntegral::from_doubled(4));
    CHECK(oracle_beta_star(join(complete(1), empty(3))) == HalfIntegral::from_doubled(2));
    CHECK(oracle_beta(cycle(5)) == 2);
    CHECK(oracle_beta(complete(6)) == 3);
    CHECK(oracle_beta(path(5)) == 2);
    CHECK_THROWS_AS(oracle_beta_star(complete(7)), LimitExceeded);
    CHECK_THROWS_AS(oracle_beta(complete(8)), LimitExceeded);
  }

  TEST_CASE("connected fractional bound at n = 6 and n = 7") {
    const VerificationReport six = verify_theorem(Theorem::t32, 6);
    CHECK(six.ok());
    CHECK(six.examined == 26704);
    for (const auto& c : six.classes) CHECK(c.bound_holds);

    VerifyOptions only;
    only.classes = {7};
    const VerificationReport seven = verify_theorem(Theorem::t32, 7, only);
    CHECK(seven.ok());
    const ClassRecord& top = find_class(seven, 7);
    CHECK(top.max_rho == doctest::Approx(6.0));
    REQUIRE(top.maximizers.size() == 1);
    CHECK(top.maximizers[0] == complete(7));
    CHECK(top.argmax_matches);
  }

  TEST_CASE("general fractional bound at n = 6") {
    const VerificationReport r = verify_theorem(Theorem::t33, 6);
    CHECK(r.ok());
    CHECK(r.labeled == 32768);
    const ClassRecord& four = find_class(r, 4);
    CHECK(four.regime == Regime::fg_split);
    CHECK(four.max_rho == doctest::Approx((1 + std::sqrt(33.0)) / 2));
    CHECK(four.argmax_matches);
    REQUIRE(four.maximizers.size() == 1);
    CHECK(is_isomorphic(four.maximizers[0], join(complete(2), empty(4))));
  }

  TEST_CASE("matching bounds at n = 6") {
    CHECK(verify_theorem(Theorem::t12, 6).ok());
    CHECK(verify_theorem(Theorem::t13, 6).ok());
  }

  TEST_CASE("reports do not depend on the worker count") {
    VerifyOptions one, three;
    three.jobs = 3;
    const auto a = verify_theorem(Theorem::t33, 6, one);
    const auto b = verify_theorem(Theorem::t33, 6, three);
    CHECK(to_csv(a) == to_csv(b));
    CHECK(summary(a) == summary(b));
    CHECK(summary(verify_certificates(5, one)) == summary(verify_certificates(5, three)));
  }

  TEST_CASE("a wrong bound is caught") {
    VerifyOptions wrong;
    wrong.bound_offset = -1.0;
    const auto r = verify_theorem(Theorem::t32, 5, wrong);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.discrepancies.empty());
    bool violated = false;
    for (const auto& c : r.classes) violated = violated || (!c.bound_holds && c.violation_g6.has_value());
    CHECK(violated);
  }

  TEST_CASE("csv layout") {
    const std::string csv = to_csv(verify_theorem(Theorem::t32, 4));
    CHECK(csv.rfind("n,two_beta_star,regime,bound,max_rho,n_maximizers,argmax_g6,prediction_g6,bound_holds,argmax_matches\n", 0) ==
          0);
    CHECK(csv.find("4,4,fc_complete,3,3,1,C~,C~,true,true") != std::string::npos);
  }

  TEST_CASE("certificate soundness on small orders") {
    const SoundnessReport three = verify_certificates(3);
    CHECK(three.ok());
    CHECK(three.examined == 4);
    CHECK(three.tallies.at("pm").applicable == 0);

    const SoundnessReport four = verify_certificates(4);
    CHECK(four.ok());
    CHECK(four.examined == 38);
    // Fires exactly on graphs with rho > sqrt(3); all of those have perfect matchings.
    std::uint64_t above = 0;
    enumerate_graphs(4, true, [&](std::uint64_t, const Graph& g) {
      if (spectral_radius(g).value > std::sqrt(3.0) + 1e-9) {
        ++above;
        CHECK(2 * matching_number(g) == 4);
      }
    });
    CHECK(four.tallies.at("pm").fired == above);

    CHECK(verify_certificates(6).ok());
  }

  TEST_CASE("matching implementations against the oracles") {
    const auto five = cross_check_matching_implementations(5, 0);
    CHECK(five.exhaustive);
    CHECK(five.checked == 1024);
    CHECK(five.ok());
    const auto nine = cross_check_matching_implementations(9, 200);
    CHECK_FALSE(nine.exhaustive);
    CHECK(nine.checked == 200);
    CHECK(nine.ok());
  }

  TEST_CASE("structure audit") {
    const StructureAudit a = audit_structure(5);
    CHECK(a.ok());
    CHECK(a.graphs == 1024);
    CHECK(a.connected == 728);
    CHECK(a.fpm_graphs > 0);
  }
}
