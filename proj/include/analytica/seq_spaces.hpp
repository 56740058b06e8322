#ifndef ANALYTICA_SEQ_SPACES_HPP
#define ANALYTICA_SEQ_SPACES_HPP

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "analytica/convergence.hpp"
#include "analytica/errors.hpp"
#include "analytica/multilinear.hpp"
#include "analytica/scalar.hpp"

namespace analytica {

enum class PNorm { one, two, infinity };

inline std::string pnorm_name(PNorm p) {
  switch (p) {
    case PNorm::one: return "1";
    case PNorm::two: return "2";
    case PNorm::infinity: return "inf";
  }
  return "?";
}

/// A componentwise-positive weight vector defining a weighted p-norm.
template <class S>
struct PolyRadius {
  std::vector<S> r;

  explicit PolyRadius(std::vector<S> values) : r(std::move(values)) {
    for (const S& x : r)
      if (!(x > S(0))) throw error("poly-radius entries must be positive");
  }

  int dim() const { return static_cast<int>(r.size()); }

  S power(const MultiIndex& alpha) const {
    if (static_cast<int>(alpha.size()) != dim())
      throw dimension_mismatch_error("multi-index length must match the poly-radius");
    S p(1);
    for (int i = 0; i < dim(); ++i)
      p = p * scalar_pow(r[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);
    return p;
  }
};

/// Finitely supported element of the weighted sequence space: a map from
/// multi-indices in N_0^n to scalars.
template <class S>
struct WeightedElement {
  int n = 0;
  std::map<MultiIndex, S> entries;

  void validate() const {
    for (const auto& [alpha, value] : entries) {
      if (static_cast<int>(alpha.size()) != n)
        throw dimension_mismatch_error("entry multi-index length must equal n");
      for (int a : alpha)
        if (a < 0) throw dimension_mismatch_error("multi-index entries must be nonnegative");
    }
  }
};

/// p-norm of the weighted family (x_alpha r^alpha) over the support.
/// p = 2 takes square roots and is float64-only; p in {1, inf} is exact for
/// exact scalars.
template <class S>
S lpr_norm(const WeightedElement<S>& x, const PolyRadius<S>& r, PNorm p) {
  x.validate();
  if (x.n != r.dim())
    throw dimension_mismatch_error("element and poly-radius dimensions differ");
  if (p == PNorm::two && scalar_traits<S>::exact)
    throw error("the p=2 norm takes square roots; use float64 scalars");
  S acc(0);
  for (const auto& [alpha, value] : x.entries) {
    S v = scalar_abs(value) * r.power(alpha);
    switch (p) {
      case PNorm::one: acc = acc + v; break;
      case PNorm::two: acc = acc + v * v; break;
      case PNorm::infinity:
        if (v > acc) acc = v;
        break;
    }
  }
  if (p == PNorm::two) {
    if constexpr (!scalar_traits<S>::exact) return std::sqrt(acc);
  }
  return acc;
}

template <class S>
struct SpaceParams {
  PNorm p;
  PolyRadius<S> radius;
};

namespace detail {
inline int pnorm_rank(PNorm p) {
  switch (p) {
    case PNorm::one: return 1;
    case PNorm::two: return 2;
    case PNorm::infinity: return 3;
  }
  return 0;
}
}  // namespace detail

/// Certified operator-norm upper bound for the inclusion map between two
/// weighted spaces: 1 for the same radius with nondecreasing p, and the
/// geometric-series product prod_i 1/(1 - s_i/r_i) for a strictly smaller
/// target radius (any p combination, via l^1 domination of every p-norm and
/// the coefficientwise Cauchy bound). Incomparable parameters yield nullopt.
template <class S>
std::optional<S> inclusion_norm_bound(const SpaceParams<S>& from, const SpaceParams<S>& to) {
  if (from.radius.dim() != to.radius.dim())
    throw dimension_mismatch_error("poly-radius dimensions differ");
  const auto& r = from.radius.r;
  const auto& s = to.radius.r;
  if (r == s) {
    if (detail::pnorm_rank(to.p) >= detail::pnorm_rank(from.p)) return S(1);
    return std::nullopt;
  }
  bool strictly_smaller = true;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!(s[i] < r[i])) strictly_smaller = false;
  if (!strictly_smaller) return std::nullopt;
  S bound(1);
  for (std::size_t i = 0; i < r.size(); ++i) bound = bound * (S(1) / (S(1) - s[i] / r[i]));
  return bound;
}

/// Coefficient bounds |a_k| <= M / rho^k from samples of |f| on the circle
/// of radius rho around the expansion point, M = max sample.
template <class S>
std::vector<S> cauchy_coeff_bound(const std::vector<S>& circle_samples, const S& rho,
                                  int k_max) {
  if (circle_samples.empty()) throw error("cauchy bound needs at least one circle sample");
  if (!(rho > S(0))) throw error("circle radius must be positive");
  S m(0);
  for (const S& v : circle_samples)
    if (scalar_abs(v) > m) m = scalar_abs(v);
  std::vector<S> bounds(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) bounds[static_cast<std::size_t>(k)] = m / scalar_pow(rho, k);
  return bounds;
}

/// Built-in holomorphic models for circle sampling and bound verification.
enum class HoloModel { constant_one, geometric, exponential, reciprocal_one_plus_square };

inline std::optional<HoloModel> holo_model_by_name(const std::string& name) {
  if (name == "one" || name == "constant-one") return HoloModel::constant_one;
  if (name == "geometric") return HoloModel::geometric;
  if (name == "exp" || name == "exponential") return HoloModel::exponential;
  if (name == "reciprocal-one-plus-square") return HoloModel::reciprocal_one_plus_square;
  return std::nullopt;
}

inline std::complex<double> holo_model_value(HoloModel model, std::complex<double> w) {
  switch (model) {
    case HoloModel::constant_one: return 1.0;
    case HoloModel::geometric: return 1.0 / (1.0 - w);
    case HoloModel::exponential: return std::exp(w);
    case HoloModel::reciprocal_one_plus_square: return 1.0 / (1.0 + w * w);
  }
  return 0.0;
}

/// Taylor coefficient a_k of the model at 0.
inline double holo_model_coefficient(HoloModel model, int k) {
  switch (model) {
    case HoloModel::constant_one: return k == 0 ? 1.0 : 0.0;
    case HoloModel::geometric: return 1.0;
    case HoloModel::exponential: return std::exp(-std::lgamma(static_cast<double>(k) + 1.0));
    case HoloModel::reciprocal_one_plus_square:
      return k % 2 ? 0.0 : (k / 2 % 2 ? -1.0 : 1.0);
  }
  return 0.0;
}

/// |f| sampled on a uniform angular grid of the circle |w - center| = rho.
/// A max over the grid under-estimates the true sup by at most the modulus
/// of continuity of f at the grid spacing; reports carry the grid size.
inline std::vector<double> sample_circle_modulus(HoloModel model, std::complex<double> center,
                                                 double rho, int grid_size = 256) {
  if (grid_size < 1) throw error("circle sampling needs a positive grid");
  std::vector<double> out(static_cast<std::size_t>(grid_size));
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int j = 0; j < grid_size; ++j) {
    double theta = two_pi * j / grid_size;
    std::complex<double> w = center + std::polar(rho, theta);
    out[static_cast<std::size_t>(j)] = std::abs(holo_model_value(model, w));
  }
  return out;
}

template <class S>
struct FamilyCandidateReport {
  S r{0};
  S sup{0};
  bool stabilizes = false;
  std::vector<S> per_degree_sup;
};

template <class S>
struct FamilyBoundednessReport {
  std::optional<S> best_r;  // largest stabilizing candidate
  std::vector<FamilyCandidateReport<S>> candidates;
};

/// For each candidate r, the sup over the family and all multi-indices of
/// |f_alpha| r^{|alpha|}, with the convergence module's stabilization rule
/// applied to the per-degree sups. A family admitting no stabilizing r in
/// the grid is reported with best_r = nullopt.
template <class S>
FamilyBoundednessReport<S> bounded_family_test(const std::vector<WeightedElement<S>>& family,
                                               const std::vector<S>& r_grid) {
  int max_degree = 0;
  for (const auto& f : family) {
    f.validate();
    if (!family.empty() && f.n != family.front().n)
      throw dimension_mismatch_error("family members must share the index dimension");
    for (const auto& [alpha, value] : f.entries)
      max_degree = std::max(max_degree, multi_index_degree(alpha));
  }

  FamilyBoundednessReport<S> rep;
  for (const S& r : r_grid) {
    if (!(r > S(0))) throw error("candidate radii must be positive");
    std::vector<S> per_degree(static_cast<std::size_t>(max_degree) + 1, S(0));
    for (const auto& f : family) {
      for (const auto& [alpha, value] : f.entries) {
        int deg = multi_index_degree(alpha);
        S v = scalar_abs(value) * scalar_pow(r, deg);
        auto& slot = per_degree[static_cast<std::size_t>(deg)];
        if (v > slot) slot = v;
      }
    }
    auto verdict = detail::stabilization_verdict(per_degree);
    FamilyCandidateReport<S> cand;
    cand.r = r;
    cand.sup = verdict.sup;
    cand.stabilizes = verdict.bounded;
    cand.per_degree_sup = std::move(verdict.values);
    rep.candidates.push_back(std::move(cand));
  }
  for (const auto& cand : rep.candidates)
    if (cand.stabilizes && (!rep.best_r || cand.r > *rep.best_r)) rep.best_r = cand.r;
  return rep;
}

}  // namespace analytica

#endif  // ANALYTICA_SEQ_SPACES_HPP
