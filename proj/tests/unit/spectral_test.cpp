#include <doctest.h>

#include <cmath>
#include <random>

#include "fracspec/errors.hpp"
#include "fracspec/extremal.hpp"
#include "fracspec/spectral.hpp"
#include "oracles.hpp"

using namespace fracspec;

namespace {

Graph star(std::size_t leaves) { return join(complete(1), empty(leaves)); }

// K_s v (K_mid u t K_1) with its three natural cells, empty ones included.
std::vector<VertexSet> natural_cells(std::size_t s, std::size_t mid, std::size_t t) {
  std::vector<Vertex> a, b, c;
  for (std::size_t v = 0; v < s; ++v) a.push_back(static_cast<Vertex>(v));
  for (std::size_t v = s; v < s + mid; ++v) b.push_back(static_cast<Vertex>(v));
  for (std::size_t v = s + mid; v < s + mid + t; ++v) c.push_back(static_cast<Vertex>(v));
  return {VertexSet(a), VertexSet(b), VertexSet(c)};
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("closed-form spectral radii") {
    CHECK(spectral_radius(complete(4)).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_radius(cycle(5)).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(star(3)).value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(spectral_radius(empty(3)).value == 0.0);
    CHECK(spectral_radius(complete(1)).value == 0.0);
    // Bipartite: the shift keeps the iteration from oscillating.
    CHECK(spectral_radius(path(7)).value == doctest::Approx(2 * std::cos(M_PI / 8)).epsilon(1e-12));
  }

  TEST_CASE("values quoted for the extremal graphs") {
    const Graph g1 = join(complete(1), graph_union(repeat(complete(3), 2), complete(1)));
    CHECK(std::fabs(spectral_radius(g1).value - 3.73) <= 0.01);
    CHECK(std::fabs(spectral_radius(g1).value - (2 + std::sqrt(3.0))) <= 1e-9);
    const Graph g4 = join(complete(1), graph_union(complete(5), empty(2)));
    CHECK(std::fabs(spectral_radius(g4).value - 5.07) <= 0.01);
    // Dense eigensolver value.
    CHECK(std::fabs(spectral_radius(g4).value - 5.069517991915756) <= 1e-9);
  }

  TEST_CASE("agrees with a dense eigensolver") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> size(1, 30);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int i = 0; i < 300; ++i) {
      const Graph g = testing::random_graph(size(rng), density(rng), rng);
      const RhoResult r = spectral_radius(g);
      REQUIRE(std::fabs(r.value - testing::dense_spectral_radius(g)) <= 1e-8);
      REQUIRE(r.residual <= kDefaultTolerance);
      REQUIRE(r.value <= static_cast<double>(max_degree(g)) + 1e-9);
      REQUIRE(r.value >= 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.order()) - 1e-9);
      REQUIRE(r.value <= static_cast<double>(g.order()) - 1.0 + 1e-9);
    }
  }

  TEST_CASE("disconnected graphs take the largest component") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const Graph a = testing::random_connected_graph(6, 0.3, rng);
      const Graph b = testing::random_connected_graph(9, 0.2, rng);
      const double joint = spectral_radius(graph_union(a, b)).value;
      REQUIRE(std::fabs(joint - std::max(spectral_radius(a).value, spectral_radius(b).value)) <= 2 * kDefaultTolerance);
    }
    // Equal components: the first one is reported.
    const RhoResult twin = spectral_radius(repeat(complete(4), 2));
    CHECK(twin.value == doctest::Approx(3.0));
    CHECK(twin.component_index == 0);
  }

  TEST_CASE("deterministic") {
    std::mt19937_64 rng(13);
    const Graph g = testing::random_graph(40, 0.2, rng);
    CHECK(spectral_radius(g).value == spectral_radius(g).value);
  }

  TEST_CASE("edge addition strictly increases rho") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> size(3, 12);
    int trials = 0;
    while (trials < 500) {
      const Graph g = testing::random_connected_graph(size(rng), 0.2, rng);
      std::vector<Edge> missing;
      for (Vertex v = 1; v < g.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
          if (!g.adjacent(u, v)) missing.push_back({u, v});
        }
      }
      if (missing.empty()) continue;
      const Edge e = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
      REQUIRE(spectral_radius(g.with_edge(e.u, e.v)).value > spectral_radius(g).value + 1e-9);
      ++trials;
    }
  }

  TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(spectral_radius(empty(0)), InvalidInput);
    CHECK_THROWS_AS(spectral_radius(complete(3), 0.0), InvalidInput);
  }

  TEST_CASE("equitable quotient matrices") {
    const Graph split = complete_split(7, 2);
    const std::vector<VertexSet> cells{VertexSet{0, 1}, VertexSet{2, 3, 4, 5, 6}};
    const QuotientMatrix q = adjacency_quotient(split, cells);
    CHECK(q.cells == 2);
    CHECK(q.entries == std::vector<std::int64_t>{1, 5, 2, 0});
    CHECK(quotient_spectral_radius(q) == doctest::Approx((1 + std::sqrt(41.0)) / 2).epsilon(1e-12));
    CHECK(quotient_spectral_radius_closed_form(q) == doctest::Approx((1 + std::sqrt(41.0)) / 2).epsilon(1e-12));

    const std::vector<VertexSet> whole{VertexSet{0, 1, 2, 3, 4}};
    CHECK(adjacency_quotient(cycle(5), whole).entries == std::vector<std::int64_t>{2});

    const std::vector<VertexSet> p3{VertexSet{0, 2}, VertexSet{1}};
    CHECK(adjacency_quotient(path(3), p3).entries == std::vector<std::int64_t>{0, 1, 2, 0});

    const std::vector<VertexSet> bad{VertexSet{0, 1}, VertexSet{2}};
    try {
      (void)adjacency_quotient(path(3), bad);
      FAIL("expected NotEquitable");
    } catch (const NotEquitable& e) {
      CHECK(e.vertex() == 1);  // differs from vertex 0 on the second cell
      CHECK(e.cell() == 1);
    }
    const std::vector<VertexSet> overlap{VertexSet{0, 1}, VertexSet{1, 2}};
    CHECK_THROWS_AS(adjacency_quotient(path(3), overlap), InvalidInput);
    const std::vector<VertexSet> missing{VertexSet{0, 1}};
    CHECK_THROWS_AS(adjacency_quotient(path(3), missing), InvalidInput);
  }

  TEST_CASE("quotient of the three-part family") {
    // s = 2, middle clique 3, t = 4 (n = 9, 2b* = 7).
    const Graph g = build_extremal({9, HalfIntegral::from_doubled(7), 2});
    const QuotientMatrix q = adjacency_quotient(g, natural_cells(2, 3, 4));
    CHECK(q.entries == std::vector<std::int64_t>{1, 3, 4, 2, 2, 0, 2, 0, 0});
    const double dense = testing::dense_matrix_radius(3, {1, 3, 4, 2, 2, 0, 2, 0, 0});
    CHECK(std::fabs(quotient_spectral_radius(q) - dense) <= 1e-9);
    CHECK(std::fabs(quotient_spectral_radius(q) - spectral_radius(g).value) <= 1e-9);
    // Empty middle cell is dropped.
    const Graph split = build_extremal({7, HalfIntegral::from_doubled(4), 2});
    CHECK(adjacency_quotient(split, natural_cells(2, 0, 5)).cells == 2);
  }

  TEST_CASE("cubic f matches the quotient determinant") {
    for (std::int64_t n = 2; n <= 30; ++n) {
      for (std::int64_t d = 2; d <= n; ++d) {
        for (std::int64_t s = 1; 2 * s <= d; ++s) {
          const ExtremalSpec spec{n, HalfIntegral::from_doubled(d), s};
          if (spec.t() < s || spec.middle_clique() == 1) continue;
          const Graph g = build_extremal(spec);
          const auto cells = natural_cells(static_cast<std::size_t>(s), static_cast<std::size_t>(spec.middle_clique()),
                                           static_cast<std::size_t>(spec.t()));
          const QuotientMatrix q = adjacency_quotient(g, cells);
          if (q.cells == 3) {
            REQUIRE(quotient_characteristic_polynomial(q) == char_poly_f_polynomial(n, spec.beta_star, s));
          }
          const double rho = spectral_radius(g).value;
          REQUIRE(std::fabs(char_poly_f(rho, n, spec.beta_star, s)) <= 1e-6 * (1.0 + rho * rho * rho));
        }
      }
    }
  }

  TEST_CASE("cubic f at s = 1 is the connected threshold cubic") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> order(3, 400);
    for (int i = 0; i < 50; ++i) {
      const std::int64_t n = order(rng);
      const std::int64_t d = std::uniform_int_distribution<std::int64_t>(2, n - 1)(rng);
      const auto b = HalfIntegral::from_doubled(d);
      REQUIRE(char_poly_f_polynomial(n, b, 1) == theta_cubic_polynomial(n, b));
    }
    for (std::int64_t n = 3; n <= 60; ++n) {
      REQUIRE(char_poly_f_polynomial(n, HalfIntegral::from_doubled(n - 1), 1) == theta_n_polynomial(n));
    }
  }

  TEST_CASE("exact rational evaluation of f") {
    // f(x, 1) at x = 5, n = 8, b* = 7/2: 125 - 4*25 - 7*5 + 8 = -2.
    const Rational r = char_poly_f_exact({5, 1}, 8, HalfIntegral::from_doubled(7), 1);
    CHECK(r.num == -2);
    CHECK(r.den == 1);
  }

  TEST_CASE("quadratic g") {
    CHECK(char_poly_g_polynomial(7, 2) == IntPoly::from_leading({1, -1, -10}));
    CHECK(largest_real_root(char_poly_g_polynomial(6, 2)) == doctest::Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-12));
    CHECK(largest_real_root(char_poly_g_polynomial(4, 1)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::fabs(char_poly_g(rho_join_formula(11, 3), 11, 3)) < 1e-9);
    CHECK_THROWS_AS(char_poly_g_polynomial(4, 5), InvalidInput);
  }

  TEST_CASE("exact characteristic polynomials") {
    // Coefficients from a symbolic determinant.
    CHECK(exact_char_poly(complete(3)) == IntPoly::from_leading({1, 0, -3, -2}));
    CHECK(exact_char_poly(empty(2)) == IntPoly::from_leading({1, 0, 0}));
    CHECK(exact_char_poly(path(3)) == IntPoly::from_leading({1, 0, -2, 0}));
    CHECK(exact_char_poly(cycle(5)) == IntPoly::from_leading({1, 0, -5, 0, 5, -2}));
    const Graph petersen = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                                      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    CHECK(exact_char_poly(petersen) == IntPoly::from_leading({1, 0, -15, 0, 75, -24, -165, 120, 120, -160, 48}));
    CHECK(exact_char_poly(join(complete(1), graph_union(complete(5), empty(2)))) ==
          IntPoly::from_leading({1, 0, -17, -40, -25, 16, 25, 8, 0}));
    CHECK_THROWS_AS(exact_char_poly(complete(17)), LimitExceeded);
  }

  TEST_CASE("quotient polynomial divides the characteristic polynomial") {
    for (std::int64_t n = 2; n <= 14; ++n) {
      for (std::int64_t d = 1; d <= n; ++d) {
        for (std::int64_t s = 0; 2 * s <= d; ++s) {
          const ExtremalSpec spec{n, HalfIntegral::from_doubled(d), s};
          if (spec.t() < s || spec.middle_clique() == 1) continue;
          const Graph g = build_extremal(spec);
          const auto cells = natural_cells(static_cast<std::size_t>(s), static_cast<std::size_t>(spec.middle_clique()),
                                           static_cast<std::size_t>(spec.t()));
          const auto division = divide_monic(exact_char_poly(g), quotient_characteristic_polynomial(adjacency_quotient(g, cells)));
          REQUIRE(division.remainder.is_zero());
        }
      }
    }
  }
}
