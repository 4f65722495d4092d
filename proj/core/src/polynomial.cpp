#include "fracspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracspec/errors.hpp"

namespace fracspec {

namespace {

__extension__ using Wide = __int128;
using WidePoly = std::vector<Wide>;

void trim(std::vector<std::int64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim(WidePoly& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("polynomial coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide checked_mul(Wide a, Wide b) {
  Wide out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in exact arithmetic");
  return out;
}

Wide checked_add(Wide a, Wide b) {
  Wide out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in exact arithmetic");
  return out;
}

WidePoly widen(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

IntPoly narrow(WidePoly p) {
  trim(p);
  std::vector<std::int64_t> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = narrow(p[i]);
  return IntPoly(std::move(out));
}

WidePoly mul(const WidePoly& a, const WidePoly& b) {
  if (a.empty() || b.empty()) return {};
  WidePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

WidePoly sub(WidePoly a, const WidePoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = checked_add(a[i], -b[i]);
  trim(a);
  return a;
}

// Exact quotient of `num` by the monic polynomial `den`; throws if the
// division leaves a remainder (which would indicate a logic error upstream).
WidePoly exact_div_monic(WidePoly num, const WidePoly& den) {
  trim(num);
  if (num.empty()) return {};
  const std::size_t dn = den.size();
  if (num.size() < dn) throw std::logic_error("inexact polynomial division");
  WidePoly q(num.size() - dn + 1, 0);
  for (std::size_t k = num.size(); k >= dn; --k) {
    const Wide lead = num[k - 1];
    q[k - dn] = lead;
    if (lead != 0) {
      for (std::size_t j = 0; j < dn; ++j) num[k - dn + j] = checked_add(num[k - dn + j], -checked_mul(lead, den[j]));
    }
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

IntPoly derivative(const IntPoly& p) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out.push_back(narrow(static_cast<Wide>(p.coeffs()[i]) * static_cast<Wide>(i)));
  return IntPoly(std::move(out));
}

int sign(long double v) { return (v > 0) - (v < 0); }

// Bisects a sign change of p on [lo, hi] down to width 1e-13 (or until the
// midpoint can no longer be represented strictly inside the bracket).
long double bisect(const IntPoly& p, long double lo, long double hi) {
  const int s_lo = sign(p.eval(lo));
  if (s_lo == 0) return lo;
  if (sign(p.eval(hi)) == 0) return hi;
  while (hi - lo > 1e-13L) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const int s_mid = sign(p.eval(mid));
    if (s_mid == 0) return mid;
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

long double cauchy_bound(const IntPoly& p) {
  const auto& c = p.coeffs();
  const long double lead = std::fabs(static_cast<long double>(c.back()));
  long double worst = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) worst = std::max(worst, std::fabs(static_cast<long double>(c[i])) / lead);
  return 1 + worst;
}

// All real roots in ascending order (double roots appear once, and only when
// they are hit exactly at a critical point).
std::vector<long double> real_roots(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {-static_cast<long double>(p.coeff(0)) / static_cast<long double>(p.coeff(1))};
  const long double bound = cauchy_bound(p);
  std::vector<long double> knots{-bound};
  for (long double c : real_roots(derivative(p))) {
    if (c > -bound && c < bound) knots.push_back(c);
  }
  knots.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const long double a = knots[i];
    const long double b = knots[i + 1];
    const int sa = sign(p.eval(a));
    const int sb = sign(p.eval(b));
    if (sa == 0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if (sb != 0 && sa != sb) {
      roots.push_back(bisect(p, a, b));
    }
  }
  if (sign(p.eval(knots.back())) == 0) roots.push_back(knots.back());
  return roots;
}

}  // namespace

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

IntPoly IntPoly::from_leading(std::initializer_list<std::int64_t> coeffs) {
  return IntPoly(std::vector<std::int64_t>(std::rbegin(coeffs), std::rend(coeffs)));
}

long double IntPoly::eval(long double x) const noexcept {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
  return acc;
}

std::int64_t IntPoly::eval_exact(std::int64_t x) const {
  Wide acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
  return narrow(acc);
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Rational eval_exact(const IntPoly& p, Rational x) {
  if (x.den <= 0) throw InvalidInput("rational denominators must be positive");
  // Homogenised Horner: sum c_i num^i den^(d-i), then divide by den^d.
  const auto& c = p.coeffs();
  if (c.empty()) return {0, 1};
  Wide acc = 0;
  Wide den_power = 1;
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = checked_add(checked_mul(acc, x.num), checked_mul(c[k], den_power));
    if (k > 0) den_power = checked_mul(den_power, x.den);
  }
  Wide g = acc < 0 ? -acc : acc;
  Wide h = den_power;
  while (h != 0) {
    const Wide t = g % h;
    g = h;
    h = t;
  }
  if (g == 0) g = 1;
  return {narrow(acc / g), narrow(den_power / g)};
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return narrow(mul(widen(a), widen(b))); }

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return narrow(sub(widen(a), widen(b))); }

PolyDivision divide_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw InvalidInput("divisor must be monic");
  WidePoly rem = widen(dividend);
  const WidePoly den = widen(divisor);
  const std::size_t dn = den.size();
  if (rem.size() < dn) return {IntPoly{}, dividend};
  WidePoly q(rem.size() - dn + 1, 0);
  for (std::size_t k = rem.size(); k >= dn; --k) {
    const Wide lead = rem[k - 1];
    q[k - dn] = lead;
    if (lead != 0) {
      for (std::size_t j = 0; j < dn; ++j) rem[k - dn + j] = checked_add(rem[k - dn + j], -checked_mul(lead, den[j]));
    }
  }
  return {narrow(std::move(q)), narrow(std::move(rem))};
}

IntPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t k = m.size;
  if (m.entries.size() != k * k) throw InvalidInput("matrix entries do not match its size");
  if (k == 0) return IntPoly({1});
  // Work on xI - M entry-wise.
  std::vector<WidePoly> a(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      WidePoly e{-static_cast<Wide>(m.at(i, j))};
      if (i == j) e.push_back(1);
      trim(e);
      a[i * k + j] = std::move(e);
    }
  }
  WidePoly previous{1};
  for (std::size_t p = 0; p + 1 < k; ++p) {
    const WidePoly& pivot = a[p * k + p];  // leading principal minor: monic, never zero
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        WidePoly t = sub(mul(a[i * k + j], pivot), mul(a[i * k + p], a[p * k + j]));
        a[i * k + j] = exact_div_monic(std::move(t), previous);
      }
    }
    previous = pivot;
  }
  return narrow(a[k * k - 1]);
}

double largest_real_root(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidInput("largest_real_root needs a non-constant polynomial");
  const auto roots = real_roots(p);
  if (roots.empty()) throw InvalidInput("polynomial " + p.to_string() + " has no real root");
  const long double lo_bracket = roots.back() - 1e-12L;
  const long double hi_bracket = roots.back() + 1e-12L;
  long double x = roots.back();
  const long double slope = derivative(p).eval(x);
  if (slope != 0) {
    const long double polished = x - p.eval(x) / slope;
    if (polished >= lo_bracket && polished <= hi_bracket && std::fabs(p.eval(polished)) <= std::fabs(p.eval(x))) {
      x = polished;
    }
  }
  return static_cast<double>(x);
}

}  // namespace fracspec
