#ifndef ANALYTICA_SERIES_HPP
#define ANALYTICA_SERIES_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "analytica/errors.hpp"
#include "analytica/scalar.hpp"

namespace analytica {

/// Finite prefix (a_0, ..., a_N) of a power series sum a_k t^k. All
/// arithmetic is exact modulo t^{N+1}; binary operations truncate to the
/// smaller order. Values are immutable after construction.
template <class S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw error("a truncated series needs at least the constant term");
  }

  static TruncatedSeries zero(int order) {
    return TruncatedSeries(std::vector<S>(static_cast<std::size_t>(order) + 1, S(0)));
  }

  static TruncatedSeries one(int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, S(0));
    c[0] = S(1);
    return TruncatedSeries(std::move(c));
  }

  /// The series t itself (requires order >= 1).
  static TruncatedSeries identity(int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, S(0));
    c.at(1) = S(1);
    return TruncatedSeries(std::move(c));
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const S& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<S>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return c == S(0); });
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<S> coeffs_;
};

template <class S>
TruncatedSeries<S> truncated(const TruncatedSeries<S>& a, int order) {
  if (order > a.order()) throw insufficient_data_error("cannot extend a series by truncation");
  std::vector<S> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
  return TruncatedSeries<S>(std::move(c));
}

/// Coefficientwise sum truncated to the smaller order.
template <class S>
TruncatedSeries<S> series_add(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  int n = std::min(a.order(), b.order());
  std::vector<S> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries<S>(std::move(c));
}

/// Convolution c_n = sum_{i<=n} a_i b_{n-i}, exact modulo t^{min order + 1}.
template <class S>
TruncatedSeries<S> cauchy_product(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  int n = std::min(a.order(), b.order());
  std::vector<S> c(static_cast<std::size_t>(n) + 1, S(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == S(0)) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries<S>(std::move(c));
}

template <class S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  return series_add(a, b);
}

template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a) {
  std::vector<S> c = a.coeffs();
  for (S& x : c) x = -x;
  return TruncatedSeries<S>(std::move(c));
}

template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  return series_add(a, -b);
}

template <class S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  return cauchy_product(a, b);
}

template <class S>
TruncatedSeries<S> operator*(const S& s, const TruncatedSeries<S>& a) {
  std::vector<S> c = a.coeffs();
  for (S& x : c) x = s * x;
  return TruncatedSeries<S>(std::move(c));
}

/// Termwise derivative b_k = (k+1) a_{k+1} of order N-1.
template <class S>
TruncatedSeries<S> series_derivative(const TruncatedSeries<S>& a) {
  if (a.order() < 1) throw empty_derivative_error();
  std::vector<S> c(static_cast<std::size_t>(a.order()));
  for (int k = 0; k < a.order(); ++k) c[k] = S(k + 1) * a[k + 1];
  return TruncatedSeries<S>(std::move(c));
}

/// Drops the first `amount` coefficients, which must all be zero; the result
/// represents the series divided by t^amount.
template <class S>
TruncatedSeries<S> shifted_down(const TruncatedSeries<S>& a, int amount) {
  if (amount < 0 || amount > a.order())
    throw insufficient_data_error("shift amount exceeds series order");
  for (int k = 0; k < amount; ++k)
    if (a[k] != S(0)) throw error("shifted_down requires vanishing low-order coefficients");
  std::vector<S> c(a.coeffs().begin() + amount, a.coeffs().end());
  return TruncatedSeries<S>(std::move(c));
}

/// Multiplies by t^amount, keeping the original order.
template <class S>
TruncatedSeries<S> shifted_up(const TruncatedSeries<S>& a, int amount) {
  std::vector<S> c(a.coeffs().size(), S(0));
  for (int k = amount; k <= a.order(); ++k) c[k] = a[k - amount];
  return TruncatedSeries<S>(std::move(c));
}

template <class S>
struct EvalWithTail {
  S value;       // sum of the represented prefix at t
  S tail_bound;  // M (rho|t|)^{N+1} / (1 - rho|t|)
};

/// Evaluates the prefix at t together with a geometric tail bound. The caller
/// asserts |a_k| <= M rho^k for every k beyond the truncation order; under
/// that assertion the true sum lies within tail_bound of value.
template <class S>
EvalWithTail<S> evaluate_with_tail_bound(const TruncatedSeries<S>& a, const S& t, const S& M,
                                         const S& rho) {
  if (!(rho > S(0)) || M < S(0)) throw error("tail majorant needs rho > 0 and M >= 0");
  S q = scalar_abs(t) * rho;
  if (!(q < S(1)))
    throw divergent_majorant_error("tail majorant diverges: |t| * rho must be < 1");
  S value(0);
  for (int k = a.order(); k >= 0; --k) value = value * t + a[k];
  S tail = M * scalar_pow(q, a.order() + 1) / (S(1) - q);
  return {value, tail};
}

/// Closed-form coefficient rule a_k, deterministic in k. Feeds test fixtures
/// and the model gallery.
template <class S>
class SeriesGenerator {
 public:
  using Rule = std::function<S(int)>;

  SeriesGenerator(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  S coefficient(int k) const { return rule_(k); }

  TruncatedSeries<S> prefix(int order) const {
    std::vector<S> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[k] = rule_(k);
    return TruncatedSeries<S>(std::move(c));
  }

  /// a_k = ratio^k, the series of 1/(1 - ratio t).
  static SeriesGenerator geometric(const S& ratio) {
    return {"geometric", [ratio](int k) { return scalar_pow(ratio, k); }};
  }

  /// a_k = 1/k!, the series of e^t.
  static SeriesGenerator exponential() {
    return {"exp", [](int k) {
              if constexpr (scalar_traits<S>::exact) {
                return S(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
              } else {
                return std::exp(-std::lgamma(static_cast<double>(k) + 1.0));
              }
            }};
  }

  /// a_k = k!.
  static SeriesGenerator factorial_growth() {
    return {"factorial", [](int k) {
              if constexpr (scalar_traits<S>::exact) {
                return S(Rational(factorial(static_cast<unsigned>(k))));
              } else {
                return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
              }
            }};
  }

  /// a_k = k^k (a_0 = 1).
  static SeriesGenerator self_power() {
    return {"self-power", [](int k) {
              if constexpr (scalar_traits<S>::exact) {
                return k == 0 ? S(1) : S(Rational(int_pow(BigInt(k), static_cast<unsigned>(k))));
              } else {
                return k == 0 ? 1.0 : std::pow(static_cast<double>(k), static_cast<double>(k));
              }
            }};
  }

  /// a_k = (-1)^{k/2} for even k, 0 otherwise: the series of 1/(1 + t^2).
  static SeriesGenerator alternating_even() {
    return {"alternating-even",
            [](int k) { return k % 2 ? S(0) : (k / 2 % 2 ? S(-1) : S(1)); }};
  }

  /// Coefficients of 1/(1 + (t/scale)^2): a_k = (-1)^{k/2} scale^{-k} for even k.
  static SeriesGenerator reciprocal_one_plus_square(const S& scale) {
    return {"reciprocal-one-plus-square", [scale](int k) {
              if (k % 2) return S(0);
              S v = scalar_pow(scale, -k);
              return k / 2 % 2 ? S(-v) : v;
            }};
  }

  static SeriesGenerator table(std::vector<S> values) {
    return {"table", [values = std::move(values)](int k) {
              return values.at(static_cast<std::size_t>(k));
            }};
  }

 private:
  std::string name_;
  Rule rule_;
};

}  // namespace analytica

#endif  // ANALYTICA_SERIES_HPP
