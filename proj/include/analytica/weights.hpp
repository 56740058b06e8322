#ifndef ANALYTICA_WEIGHTS_HPP
#define ANALYTICA_WEIGHTS_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "analytica/errors.hpp"
#include "analytica/scalar.hpp"

namespace analytica {

/// A positive test sequence (r_k). The built-in families satisfy, in closed
/// form, r_k r_l >= r_{k+l} and r_k t^k -> 0 for every t > 0; explicit tables
/// carry a caller-supplied attestation flag for the decay property instead.
template <class S>
class WeightSeq {
 public:
  enum class Family { inverse_factorial, gaussian, scaled_inverse_factorial, explicit_table };

  /// r_k = 1/k!.
  static WeightSeq inverse_factorial() {
    return WeightSeq(Family::inverse_factorial, "inverse-factorial", [](int k) {
      if constexpr (scalar_traits<S>::exact) {
        return S(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
      } else {
        return std::exp(-std::lgamma(static_cast<double>(k) + 1.0));
      }
    });
  }

  /// r_k = e^{-k^2}. Irrational values: float64 only.
  static WeightSeq gaussian() {
    static_assert(!scalar_traits<S>::exact, "the gaussian family has irrational values");
    return WeightSeq(Family::gaussian, "gaussian", [](int k) {
      return std::exp(-static_cast<double>(k) * static_cast<double>(k));
    });
  }

  /// r_k = c^k / k! for a fixed c > 0.
  static WeightSeq scaled_inverse_factorial(const S& c) {
    if (!(c > S(0))) throw error("weight scale must be positive");
    return WeightSeq(Family::scaled_inverse_factorial,
                     "scaled-inverse-factorial", [c](int k) {
                       if constexpr (scalar_traits<S>::exact) {
                         return scalar_pow(c, k) *
                                S(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
                       } else {
                         return std::pow(c, k) *
                                std::exp(-std::lgamma(static_cast<double>(k) + 1.0));
                       }
                     });
  }

  static WeightSeq explicit_table(std::vector<S> values, bool decay_attested) {
    for (const S& v : values)
      if (!(v > S(0))) throw error("weight table entries must be positive");
    WeightSeq w(Family::explicit_table, "table", {});
    w.table_ = std::move(values);
    w.decay_attested_ = decay_attested;
    return w;
  }

  Family family() const { return family_; }
  const std::string& name() const { return name_; }

  bool covers(int k) const {
    if (family_ == Family::explicit_table)
      return k >= 0 && static_cast<std::size_t>(k) < table_.size();
    return k >= 0;
  }

  S at(int k) const {
    if (!covers(k))
      throw insufficient_data_error("weight sequence does not cover index " + std::to_string(k));
    if (family_ == Family::explicit_table) return table_[static_cast<std::size_t>(k)];
    return rule_(k);
  }

  /// Whether r_k t^k -> 0 holds by closed form (built-ins) or attestation.
  bool decay_certified() const {
    return family_ != Family::explicit_table || decay_attested_;
  }

  /// Checks r_k r_l >= r_{k+l} for every k + l <= k_max that the sequence
  /// covers. Exact for exact scalars; floats allow `rel_slack` relative slack.
  bool subadditive_up_to(int k_max, double rel_slack = 0.0) const {
    for (int k = 0; k <= k_max; ++k) {
      if (!covers(k)) break;
      for (int l = k; k + l <= k_max; ++l) {
        if (!covers(l) || !covers(k + l)) break;
        S prod = at(k) * at(l);
        S whole = at(k + l);
        if constexpr (scalar_traits<S>::exact) {
          if (prod < whole) return false;
        } else {
          if (to_double(prod) < to_double(whole) * (1.0 - rel_slack)) return false;
        }
      }
    }
    return true;
  }

  std::size_t table_size() const { return table_.size(); }

 private:
  WeightSeq(Family family, std::string name, std::function<S(int)> rule)
      : family_(family), name_(std::move(name)), rule_(std::move(rule)) {}

  Family family_;
  std::string name_;
  std::function<S(int)> rule_;
  std::vector<S> table_;
  bool decay_attested_ = false;
};

}  // namespace analytica

#endif  // ANALYTICA_WEIGHTS_HPP
