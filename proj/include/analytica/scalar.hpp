#ifndef ANALYTICA_SCALAR_HPP
#define ANALYTICA_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "analytica/errors.hpp"

namespace analytica {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default relative tolerance for float64 comparisons.
inline constexpr double kDefaultRelTol = 1e-9;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* kind_name() { return "rational"; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* kind_name() { return "float64"; }
};

inline bool approx_equal(double a, double b, double rel = kDefaultRelTol) {
  double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) <= rel * scale;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // divides exactly: r is always a binomial prefix
  }
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  for (; e; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

inline Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
  Rational r(int_pow(numerator(base), mag), int_pow(denominator(base), mag));
  if (e < 0) {
    if (r == 0) throw error("zero base raised to a negative power");
    r = Rational(1) / r;
  }
  return r;
}

template <class S>
S scalar_pow(const S& base, int e);

template <>
inline Rational scalar_pow<Rational>(const Rational& base, int e) {
  return rational_pow(base, e);
}

template <>
inline double scalar_pow<double>(const double& base, int e) {
  return std::pow(base, e);
}

template <class S>
S scalar_abs(const S& x) {
  using std::abs;
  return abs(x);
}

/// log2 of a positive big integer, accurate to ~1 ulp of double.
inline double log2_bigint(const BigInt& v) {
  if (v <= 0) throw error("log2 of a non-positive integer");
  std::size_t bits = msb(v);
  if (bits <= 62) return std::log2(static_cast<double>(v.convert_to<std::int64_t>()));
  BigInt top = v >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

/// log2 |q|; -infinity for q == 0. Safe for values far outside double range.
inline double log2_abs(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  return log2_bigint(abs(numerator(q))) - log2_bigint(denominator(q));
}

inline double log2_abs(double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(x));
}

/// Nearest-double conversion that survives values outside double range and
/// huge numerator/denominator pairs with a moderate ratio.
inline double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  double l = log2_abs(q);
  if (l > 1020.0) return q > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
  if (l < -1020.0) return q > 0 ? 0.0 : -0.0;
  if (msb(abs(numerator(q))) > 900 || msb(denominator(q)) > 900) {
    double magnitude = std::exp2(l);
    return q > 0 ? magnitude : -magnitude;
  }
  return q.convert_to<double>();
}

inline double to_double(double x) { return x; }

/// Gaussian rational: a + b*i with exact rational parts. Used where a
/// polarization identity is exercised at lambda = i.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return im == 0; }
  Rational abs_sq() const { return re * re + im * im; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const Rational& s) {
    return {a.re / s, a.im / s};
  }
  ComplexRational& operator+=(const ComplexRational& b) { return *this = *this + b; }
  ComplexRational& operator*=(const ComplexRational& b) { return *this = *this * b; }
};

inline ComplexRational scalar_pow(const ComplexRational& base, int e) {
  if (e < 0) throw error("negative power of a complex rational is not supported");
  ComplexRational r{Rational(1)};
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

template <>
struct scalar_traits<ComplexRational> {
  static constexpr bool exact = true;
  static constexpr const char* kind_name() { return "complex-rational"; }
};

}  // namespace analytica

#endif  // ANALYTICA_SCALAR_HPP
