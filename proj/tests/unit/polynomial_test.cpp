#include <doctest.h>

#include <cmath>

#include "fracspec/errors.hpp"
#include "fracspec/polynomial.hpp"

using namespace fracspec;

TEST_SUITE("polynomial") {
  TEST_CASE("construction and evaluation") {
    const IntPoly p = IntPoly::from_leading({1, 0, -3, -2});
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK(p.coeff(1) == -3);
    CHECK(p.eval_exact(2) == 0);
    CHECK(p.eval_exact(-1) == 0);
    CHECK(p.to_string() == "x^3 - 3x - 2");
    CHECK(IntPoly({0, 0}).is_zero());
  }

  TEST_CASE("exact rational evaluation") {
    const IntPoly p = IntPoly::from_leading({2, -1});  // 2x - 1
    const Rational r = eval_exact(p, {1, 2});
    CHECK(r.num == 0);
    const Rational s = eval_exact(IntPoly::from_leading({1, 0, 0}), {3, 6});
    CHECK(s.num == 1);
    CHECK(s.den == 4);
  }

  TEST_CASE("division") {
    const IntPoly a = IntPoly::from_leading({1, -1});
    const IntPoly b = IntPoly::from_leading({1, 2, 3});
    const auto d = divide_monic(a * b, a);
    CHECK(d.quotient == b);
    CHECK(d.remainder.is_zero());
    const auto e = divide_monic(b, a);
    CHECK(e.remainder == IntPoly({6}));
  }

  TEST_CASE("characteristic polynomial of small matrices") {
    const IntMatrix k3{3, {0, 1, 1, 1, 0, 1, 1, 1, 0}};
    CHECK(characteristic_polynomial(k3) == IntPoly::from_leading({1, 0, -3, -2}));
    const IntMatrix q{2, {1, 5, 2, 0}};
    CHECK(characteristic_polynomial(q) == IntPoly::from_leading({1, -1, -10}));
    const IntMatrix zero{2, {0, 0, 0, 0}};
    CHECK(characteristic_polynomial(zero) == IntPoly::from_leading({1, 0, 0}));
  }

  TEST_CASE("largest real root") {
    CHECK(largest_real_root(IntPoly::from_leading({1, 0, -3, 0})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
    CHECK(largest_real_root(IntPoly::from_leading({1, -1, -10})) ==
          doctest::Approx((1 + std::sqrt(41.0)) / 2).epsilon(1e-13));
    // x^3 - 4x^2 - 7x + 8; value from a 30-digit polynomial root finder.
    CHECK(std::fabs(largest_real_root(IntPoly::from_leading({1, -4, -7, 8})) - 5.069517991915756) < 1e-12);
    // Double root.
    CHECK(largest_real_root(IntPoly::from_leading({1, -4, 4})) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS_AS(largest_real_root(IntPoly::from_leading({1, 0, 1})), InvalidInput);
    CHECK_THROWS_AS(largest_real_root(IntPoly({5})), InvalidInput);
  }

  TEST_CASE("root residual is small") {
    for (std::int64_t n = 3; n <= 200; ++n) {
      const IntPoly p = IntPoly::from_leading({1, -(n - 4), -(n - 1), 2 * (n - 4)});
      const double x = largest_real_root(p);
      double scale = 1.0;
      for (auto c : p.coeffs()) scale = std::max(scale, std::fabs(static_cast<double>(c)));
      REQUIRE(std::fabs(static_cast<double>(p.eval(x))) <= 1e-9 * (1.0 + scale));
    }
  }
}
