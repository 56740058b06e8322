#ifndef ANALYTICA_COMPOSITION_HPP
#define ANALYTICA_COMPOSITION_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "analytica/convergence.hpp"
#include "analytica/errors.hpp"
#include "analytica/multilinear.hpp"
#include "analytica/scalar.hpp"
#include "analytica/series.hpp"
#include "analytica/weights.hpp"

namespace analytica {

/// A finitely supported multiplicity map n -> m_n with sum m_n = k and
/// sum n m_n = l: the index set of the composition formula.
struct PartitionMultiset {
  std::map<int, int> parts;  // part size -> multiplicity, multiplicities >= 1

  int k() const {
    int s = 0;
    for (const auto& [n, m] : parts) s += m;
    return s;
  }

  int l() const {
    int s = 0;
    for (const auto& [n, m] : parts) s += n * m;
    return s;
  }

  /// k! / prod_n m_n!.
  BigInt multinomial_weight() const {
    BigInt r = factorial(static_cast<unsigned>(k()));
    for (const auto& [n, m] : parts) r /= factorial(static_cast<unsigned>(m));
    return r;
  }
};

/// Complete duplicate-free enumeration of partitions of l into exactly k
/// positive parts, ordered by descending part lists (largest part first).
/// k > l yields the empty list.
inline std::vector<PartitionMultiset> enumerate_partitions(int k, int l) {
  if (k < 1 || l < 1) throw error("partition enumeration needs k >= 1 and l >= 1");
  std::vector<PartitionMultiset> out;
  std::vector<int> parts;
  // parts are chosen nonincreasing; remaining parts each at least 1
  auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      if (remaining == 0) {
        PartitionMultiset p;
        for (int n : parts) ++p.parts[n];
        out.push_back(std::move(p));
      }
      return;
    }
    int hi = std::min(max_part, remaining - (slots - 1));
    for (int n = hi; n >= 1; --n) {
      if (n * slots < remaining) break;  // even all-equal parts fall short
      parts.push_back(n);
      self(self, remaining - n, slots - 1, n);
      parts.pop_back();
    }
  };
  rec(rec, l, k, l);
  return out;
}

/// sum over the partitions of k!/prod m_n!, which collapses to the binomial
/// coefficient C(l-1, k-1).
inline BigInt multinomial_partition_sum(int k, int l) {
  BigInt sum = 0;
  for (const auto& p : enumerate_partitions(k, l)) sum += p.multinomial_weight();
  return sum;
}

/// Derivative data of a map at an expansion point: forms[k] is the raw
/// k-linear derivative (no factorial normalization; the 1/k! of the
/// composition formula is applied inside compose_jet, never stored).
template <class S>
struct JetOfMap {
  int dim = 0;
  std::vector<SymForm<S>> forms;  // forms[k] has degree k and dimension dim

  int degree_max() const { return static_cast<int>(forms.size()) - 1; }

  void validate() const {
    for (int k = 0; k < static_cast<int>(forms.size()); ++k) {
      const auto& f = forms[static_cast<std::size_t>(k)];
      if (f.degree() != k)
        throw dimension_mismatch_error("forms[k] must have degree k");
      if (f.dim() != dim) throw dimension_mismatch_error("form dimension mismatch");
    }
  }
};

/// Normalized curve derivatives c^{(n)}(a)/n! for n = 1..N; the constant
/// term lives in the expansion point of the jet, so indexing starts at 1.
template <class S>
struct CurveCoefficients {
  int dim = 0;
  std::vector<std::vector<S>> coeffs;  // coeffs[n-1] is the R^dim vector for n

  int max_part() const { return static_cast<int>(coeffs.size()); }

  const std::vector<S>& at(int n) const {
    if (n < 1 || n > max_part())
      throw insufficient_data_error("curve coefficient index out of range");
    return coeffs[static_cast<std::size_t>(n - 1)];
  }

  void validate() const {
    for (const auto& v : coeffs)
      if (static_cast<int>(v.size()) != dim)
        throw dimension_mismatch_error("curve coefficient dimension mismatch");
  }
};

/// Taylor coefficients of f o c through order L: the t^l coefficient is
/// sum over k and partitions (m_n) of (1/prod m_n!) d^k f(tuple), where the
/// tuple repeats the n-th normalized curve coefficient m_n times, parts
/// ascending. Missing derivative or curve data raises truncation_data_error
/// naming the first missing (k, n).
template <class S>
TruncatedSeries<S> compose_jet(const JetOfMap<S>& f, const CurveCoefficients<S>& c, int L) {
  f.validate();
  c.validate();
  if (f.dim != c.dim) throw dimension_mismatch_error("jet and curve dimensions differ");
  if (L < 0) throw error("composition order must be nonnegative");
  if (f.degree_max() < 0) throw truncation_data_error(0, 0);

  std::vector<S> out(static_cast<std::size_t>(L) + 1, S(0));
  out[0] = f.forms[0].evaluate(std::vector<std::vector<S>>{});

  for (int l = 1; l <= L; ++l) {
    S acc(0);
    for (int k = 1; k <= l; ++k) {
      for (const auto& p : enumerate_partitions(k, l)) {
        int largest = p.parts.rbegin()->first;
        if (k > f.degree_max()) throw truncation_data_error(k, largest);
        if (largest > c.max_part()) throw truncation_data_error(k, largest);
        BigInt denom = 1;
        std::vector<std::vector<S>> tuple;
        tuple.reserve(static_cast<std::size_t>(k));
        for (const auto& [n, m] : p.parts) {
          denom *= factorial(static_cast<unsigned>(m));
          for (int rep = 0; rep < m; ++rep) tuple.push_back(c.at(n));
        }
        S value = f.forms[static_cast<std::size_t>(k)].evaluate(tuple);
        acc = acc + scalar_from_rational<S>(Rational(BigInt(1), denom)) * value;
      }
    }
    out[static_cast<std::size_t>(l)] = acc;
  }
  return TruncatedSeries<S>(std::move(out));
}

/// Independent composition oracle: substitutes c into f by Horner over
/// truncated products, exact. The inner series must have zero constant term;
/// the result is truncated to the smaller input order.
template <class S>
TruncatedSeries<S> faa_di_bruno_oracle(const TruncatedSeries<S>& f, const TruncatedSeries<S>& c) {
  if (c[0] != S(0)) throw composition_domain_error();
  int n = std::min(f.order(), c.order());
  TruncatedSeries<S> inner = truncated(c, n);
  TruncatedSeries<S> acc = TruncatedSeries<S>::zero(n);
  for (int k = n; k >= 0; --k) {
    acc = cauchy_product(acc, inner);
    std::vector<S> coeffs = acc.coeffs();
    coeffs[0] += f[k];
    acc = TruncatedSeries<S>(std::move(coeffs));
  }
  return acc;
}

template <class S>
struct MajorantCheckReport {
  bool derivative_bound_ok = true;  // sampled |d^k f(...)|/k! <= C, args in the eps-box
  bool curve_in_unit_box = true;    // ||c^{(n)}(a)/n!||_inf * r_n <= 1 on the grid
  bool estimate_holds = true;       // |(f o c)_l| r_l (eps/2)^l <= C/2 for l = 1..L
  S max_lhs{0};
  int violations = 0;
  int sampled_tuples = 0;
};

/// Checks the composition majorant on one harness instance: jets and curve
/// coefficient sets are aligned per grid point, B is the unit sup-norm box.
/// Precondition failures are reported, never thrown.
template <class S>
MajorantCheckReport<S> majorant_estimate_check(const std::vector<JetOfMap<S>>& jets,
                                               const std::vector<CurveCoefficients<S>>& curves,
                                               const WeightSeq<S>& r, const S& eps, int L,
                                               const S& bound_c, int samples,
                                               std::uint64_t seed) {
  if (jets.size() != curves.size())
    throw dimension_mismatch_error("one jet per grid point is required");
  MajorantCheckReport<S> rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-64, 64);

  auto sample_coord = [&]() -> S {
    if constexpr (scalar_traits<S>::exact) {
      return eps * S(Rational(num(rng), 64));
    } else {
      return eps * (static_cast<double>(num(rng)) / 64.0);
    }
  };

  for (std::size_t g = 0; g < jets.size(); ++g) {
    const auto& jet = jets[g];
    const auto& curve = curves[g];
    jet.validate();
    curve.validate();

    for (int k = 1; k <= jet.degree_max(); ++k) {
      for (int s = 0; s < samples; ++s) {
        std::vector<std::vector<S>> tuple(static_cast<std::size_t>(k));
        for (auto& v : tuple) {
          v.resize(static_cast<std::size_t>(jet.dim));
          for (auto& x : v) x = sample_coord();
        }
        S value = scalar_abs(jet.forms[static_cast<std::size_t>(k)].evaluate(tuple)) *
                  scalar_from_rational<S>(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
        ++rep.sampled_tuples;
        if (value > bound_c) rep.derivative_bound_ok = false;
      }
    }

    for (int n = 1; n <= std::min(L, curve.max_part()); ++n) {
      for (const S& x : curve.at(n))
        if (scalar_abs(x) * r.at(n) > S(1)) rep.curve_in_unit_box = false;
    }

    TruncatedSeries<S> composed = compose_jet(jet, curve, L);
    S half_eps = eps / S(2);
    S half_c = bound_c / S(2);
    for (int l = 1; l <= L; ++l) {
      S lhs = scalar_abs(composed[l]) * r.at(l) * scalar_pow(half_eps, l);
      if (lhs > rep.max_lhs) rep.max_lhs = lhs;
      if (lhs > half_c) {
        rep.estimate_holds = false;
        ++rep.violations;
      }
    }
  }
  return rep;
}

}  // namespace analytica

#endif  // ANALYTICA_COMPOSITION_HPP
