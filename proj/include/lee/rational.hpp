#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace lee {

// Exact fractions for constructing lattice constants.  All built-in sets have
// rational weights and equilibrium coefficients, so building them in integer
// arithmetic and rounding to double exactly once keeps the tabulated values
// bit-reproducible.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend constexpr Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend constexpr Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  constexpr Rational operator-() const { return Rational(-num, den); }

  friend constexpr bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend constexpr bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend constexpr bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend constexpr bool operator>(Rational a, Rational b) { return b < a; }
  friend constexpr bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend constexpr bool operator>=(Rational a, Rational b) { return !(a < b); }
};

}  // namespace lee
