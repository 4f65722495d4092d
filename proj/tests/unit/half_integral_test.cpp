#include <doctest.h>

#include "fracspec/errors.hpp"
#include "fracspec/half_integral.hpp"

using namespace fracspec;

TEST_SUITE("half_integral") {
  TEST_CASE("parsing") {
    CHECK(HalfIntegral::parse("5/2").doubled() == 5);
    CHECK(HalfIntegral::parse("4/2").doubled() == 4);
    CHECK(HalfIntegral::parse("3").doubled() == 6);
    CHECK(HalfIntegral::parse("3.0").doubled() == 6);
    CHECK(HalfIntegral::parse("3.5").doubled() == 7);
    CHECK(HalfIntegral::parse("0.5").doubled() == 1);
    for (const char* bad : {"", "2.25", "5/3", "-1/2", "abc", "1.", "/2", "3.50", "1e1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(HalfIntegral::parse(bad), ParseError);
    }
  }

  TEST_CASE("rounding and printing") {
    const auto h = HalfIntegral::from_doubled(7);
    CHECK(h.floor() == 3);
    CHECK(h.ceil() == 4);
    CHECK_FALSE(h.is_integer());
    CHECK(h.to_string() == "7/2");
    CHECK(HalfIntegral::from_doubled(8).to_string() == "4");
    CHECK(HalfIntegral::from_doubled(8).ceil() == 4);
    CHECK(h.value() == doctest::Approx(3.5));
    CHECK(HalfIntegral::from_doubled(3) < HalfIntegral::from_doubled(4));
    CHECK_THROWS_AS(HalfIntegral::from_doubled(-1), InvalidInput);
  }
}
