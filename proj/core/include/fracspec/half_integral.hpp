#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fracspec {

/// Exact non-negative multiple of 1/2, stored as twice its value.
class HalfIntegral {
 public:
  constexpr HalfIntegral() = default;

  static HalfIntegral from_doubled(std::int64_t doubled);
  static HalfIntegral from_integer(std::int64_t value) { return from_doubled(2 * value); }
  /// Accepts "k/2", "k", "x.0" and "x.5"; anything else throws ParseError.
  static HalfIntegral parse(std::string_view text);

  constexpr std::int64_t doubled() const noexcept { return doubled_; }
  constexpr bool is_integer() const noexcept { return doubled_ % 2 == 0; }
  constexpr std::int64_t floor() const noexcept { return doubled_ / 2; }
  constexpr std::int64_t ceil() const noexcept { return (doubled_ + 1) / 2; }
  constexpr double value() const noexcept { return static_cast<double>(doubled_) / 2.0; }

  /// "k/2" when the doubled value is odd, otherwise the plain integer.
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfIntegral, HalfIntegral) = default;

 private:
  std::int64_t doubled_ = 0;
};

}  // namespace fracspec
