#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fracspec {

/// Polynomial with 64-bit integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is
/// non-zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  /// Highest degree first, the way polynomials are usually written:
  /// IntPoly::from_leading({1, 0, -3, -2}) is x^3 - 3x - 2.
  static IntPoly from_leading(std::initializer_list<std::int64_t> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(std::size_t power) const noexcept { return power < coeffs_.size() ? coeffs_[power] : 0; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  long double eval(long double x) const noexcept;
  /// Exact value at an integer point; throws std::overflow_error if the
  /// result leaves the 64-bit range.
  std::int64_t eval_exact(std::int64_t x) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Exact rational number num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Exact p(x) at a rational point, reduced to lowest terms. Throws
/// std::overflow_error when intermediate values do not fit.
Rational eval_exact(const IntPoly& p, Rational x);

IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};
/// Long division by a monic divisor; exact over the integers.
PolyDivision divide_monic(const IntPoly& dividend, const IntPoly& divisor);

/// Square integer matrix stored row-major.
struct IntMatrix {
  std::size_t size = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

/// det(xI - M) with exact integer coefficients, via fraction-free (Bareiss)
/// elimination over Z[x]. Throws std::overflow_error if a coefficient does
/// not fit in 64 bits.
IntPoly characteristic_polynomial(const IntMatrix& m);

/// Largest real root of p: roots of p' split the line into monotone pieces,
/// the rightmost sign-changing piece is bisected to width 1e-13 and then
/// polished with one guarded Newton step. Throws InvalidInput if p is
/// constant or has no real root.
double largest_real_root(const IntPoly& p);

}  // namespace fracspec
