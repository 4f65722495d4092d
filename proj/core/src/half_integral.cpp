#include "fracspec/half_integral.hpp"

#include <charconv>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

// Parses a run of decimal digits starting at `pos`; advances `pos`.
std::int64_t parse_digits(std::string_view text, std::size_t& pos) {
  std::int64_t value = 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first || *first == '-' || *first == '+') {
    throw ParseError("expected a non-negative integer in half-integer literal \"" + std::string(text) + "\"", pos);
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

HalfIntegral HalfIntegral::from_doubled(std::int64_t doubled) {
  if (doubled < 0) throw InvalidInput("half-integral values must be non-negative");
  HalfIntegral h;
  h.doubled_ = doubled;
  return h;
}

HalfIntegral HalfIntegral::parse(std::string_view text) {
  std::size_t pos = 0;
  const std::int64_t whole = parse_digits(text, pos);
  if (pos == text.size()) return from_integer(whole);
  if (text[pos] == '/') {
    ++pos;
    if (text.substr(pos) != "2") throw ParseError("only the denominator 2 is accepted", pos);
    return from_doubled(whole);
  }
  if (text[pos] == '.') {
    const std::string_view frac = text.substr(pos + 1);
    if (frac == "0") return from_integer(whole);
    if (frac == "5") return from_doubled(2 * whole + 1);
    throw ParseError("decimal half-integers must end in .0 or .5", pos);
  }
  throw ParseError("unexpected character in half-integer literal", pos);
}

std::string HalfIntegral::to_string() const {
  if (is_integer()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

}  // namespace fracspec
