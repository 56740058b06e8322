#ifndef ANALYTICA_MULTILINEAR_HPP
#define ANALYTICA_MULTILINEAR_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "analytica/errors.hpp"
#include "analytica/scalar.hpp"

namespace analytica {

using MultiIndex = std::vector<int>;

inline int multi_index_degree(const MultiIndex& alpha) {
  int d = 0;
  for (int a : alpha) d += a;
  return d;
}

/// All alpha in N_0^dim with |alpha| = degree, in lexicographic order.
inline std::vector<MultiIndex> multi_indices(int degree, int dim) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == dim - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// k! / prod_i alpha_i! for |alpha| = k.
inline BigInt multinomial(int k, const MultiIndex& alpha) {
  BigInt r = factorial(static_cast<unsigned>(k));
  for (int a : alpha) r /= factorial(static_cast<unsigned>(a));
  return r;
}

template <class A>
A scalar_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<A, double>) {
    return to_double(q);
  } else {
    return A(q);
  }
}

namespace detail {

template <class A>
std::vector<A> vec_add(const std::vector<A>& a, const std::vector<A>& b) {
  if (a.size() != b.size()) throw dimension_mismatch_error("vector dimensions differ");
  std::vector<A> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class A>
std::vector<A> vec_scaled(const A& s, const std::vector<A>& v) {
  std::vector<A> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

}  // namespace detail

/// A degree-k symmetric multilinear form on R^dim, stored densely by
/// multi-index: coefficient at alpha is the tensor value on any argument
/// tuple whose coordinate histogram is alpha. Degree 0 forms are constants.
/// The degree and dimension caps keep the 2^k polarization sums and the
/// dim^k evaluation loops tractable.
template <class S>
class SymForm {
 public:
  static constexpr int kMaxDegree = 12;
  static constexpr int kMaxDim = 4;

  SymForm(int degree, int dim) : degree_(degree), dim_(dim) {
    if (degree < 0 || degree > kMaxDegree)
      throw dimension_mismatch_error("form degree out of the supported range");
    if (dim < 1 || dim > kMaxDim)
      throw dimension_mismatch_error("form dimension out of the supported range");
  }

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  void set(const MultiIndex& alpha, S value) {
    check_index(alpha);
    if (value == S(0))
      coeffs_.erase(alpha);
    else
      coeffs_[alpha] = std::move(value);
  }

  S coefficient(const MultiIndex& alpha) const {
    check_index(alpha);
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  const std::map<MultiIndex, S>& coefficients() const { return coeffs_; }

  /// Full multilinear expansion over all dim^degree coordinate assignments.
  template <class A = S>
  A evaluate(const std::vector<std::vector<A>>& args) const {
    if (static_cast<int>(args.size()) != degree_)
      throw dimension_mismatch_error("argument count must equal the form degree");
    for (const auto& v : args)
      if (static_cast<int>(v.size()) != dim_)
        throw dimension_mismatch_error("argument dimension mismatch");
    A acc(0);
    MultiIndex assignment(static_cast<std::size_t>(degree_), 0);
    while (true) {
      MultiIndex hist(static_cast<std::size_t>(dim_), 0);
      for (int slot = 0; slot < degree_; ++slot)
        ++hist[static_cast<std::size_t>(assignment[static_cast<std::size_t>(slot)])];
      auto it = coeffs_.find(hist);
      if (it != coeffs_.end()) {
        A prod = A(it->second);
        for (int slot = 0; slot < degree_; ++slot)
          prod = prod * args[static_cast<std::size_t>(slot)]
                            [static_cast<std::size_t>(assignment[static_cast<std::size_t>(slot)])];
        acc = acc + prod;
      }
      // odometer over {0..dim-1}^degree
      int slot = 0;
      for (; slot < degree_; ++slot) {
        if (++assignment[static_cast<std::size_t>(slot)] < dim_) break;
        assignment[static_cast<std::size_t>(slot)] = 0;
      }
      if (slot == degree_) break;
    }
    return acc;
  }

  /// Diagonal value f(x^k) = sum_alpha (k!/alpha!) c_alpha x^alpha.
  template <class A = S>
  A diagonal(const std::vector<A>& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw dimension_mismatch_error("argument dimension mismatch");
    A acc(0);
    for (const auto& [alpha, c] : coeffs_) {
      A term = scalar_from_rational<A>(Rational(multinomial(degree_, alpha))) * A(c);
      for (int i = 0; i < dim_; ++i)
        for (int rep = 0; rep < alpha[static_cast<std::size_t>(i)]; ++rep)
          term = term * x[static_cast<std::size_t>(i)];
      acc = acc + term;
    }
    return acc;
  }

 private:
  void check_index(const MultiIndex& alpha) const {
    if (static_cast<int>(alpha.size()) != dim_)
      throw dimension_mismatch_error("multi-index length must equal the dimension");
    for (int a : alpha)
      if (a < 0) throw dimension_mismatch_error("multi-index entries must be nonnegative");
    if (multi_index_degree(alpha) != degree_)
      throw dimension_mismatch_error("multi-index degree must equal the form degree");
  }

  int degree_;
  int dim_;
  std::map<MultiIndex, S> coeffs_;
};

inline SymForm<ComplexRational> complexified(const SymForm<Rational>& f) {
  SymForm<ComplexRational> g(f.degree(), f.dim());
  for (const auto& [alpha, c] : f.coefficients()) g.set(alpha, ComplexRational(c));
  return g;
}

/// Recovers f(x_1,...,x_k) from diagonal values only:
/// (1/k!) sum over sign vectors eps of (-1)^{k-|eps|} f((x0 + sum eps_j x_j)^k).
/// The result does not depend on the base point x0.
template <class A, class Diag>
A polarize_eps(Diag&& f_diag, int k, const std::vector<A>& x0,
               const std::vector<std::vector<A>>& args) {
  if (static_cast<int>(args.size()) != k)
    throw dimension_mismatch_error("polarization needs exactly k arguments");
  A acc(0);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<A> point = x0;
    int ones = 0;
    for (int j = 0; j < k; ++j) {
      if (mask & (1u << j)) {
        point = detail::vec_add(point, args[static_cast<std::size_t>(j)]);
        ++ones;
      }
    }
    A value = f_diag(point);
    if ((k - ones) % 2)
      acc = acc - value;
    else
      acc = acc + value;
  }
  return acc * scalar_from_rational<A>(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
}

/// f(x^k) = (1/k!) sum_j (-1)^{k-j} C(k,j) f((a + j x)^k); independent of a.
template <class A, class Diag>
A polarize_binom(Diag&& f_diag, int k, const std::vector<A>& a, const std::vector<A>& x) {
  A acc(0);
  for (int j = 0; j <= k; ++j) {
    std::vector<A> point =
        detail::vec_add(a, detail::vec_scaled(scalar_from_rational<A>(Rational(j)), x));
    A value = scalar_from_rational<A>(Rational(binomial(static_cast<unsigned>(k),
                                                        static_cast<unsigned>(j)))) *
              f_diag(point);
    if ((k - j) % 2)
      acc = acc - value;
    else
      acc = acc + value;
  }
  return acc * scalar_from_rational<A>(Rational(BigInt(1), factorial(static_cast<unsigned>(k))));
}

/// f(x^k) = (k^k/k!) sum_j (-1)^{k-j} C(k,j) f((a + (j/k) x)^k); needs k >= 1.
template <class A, class Diag>
A polarize_scaled(Diag&& f_diag, int k, const std::vector<A>& a, const std::vector<A>& x) {
  if (k < 1) throw error("the scaled polarization formula needs k >= 1");
  A acc(0);
  for (int j = 0; j <= k; ++j) {
    std::vector<A> point =
        detail::vec_add(a, detail::vec_scaled(scalar_from_rational<A>(Rational(j, k)), x));
    A value = scalar_from_rational<A>(Rational(binomial(static_cast<unsigned>(k),
                                                        static_cast<unsigned>(j)))) *
              f_diag(point);
    if ((k - j) % 2)
      acc = acc - value;
    else
      acc = acc + value;
  }
  Rational scale(int_pow(BigInt(k), static_cast<unsigned>(k)), factorial(static_cast<unsigned>(k)));
  return acc * scalar_from_rational<A>(scale);
}

template <class A>
struct LambdaSplit {
  A lhs;  // f(x_1^0 + lam x_1^1, ..., x_k^0 + lam x_k^1)
  A rhs;  // sum over eps of lam^{|eps|} f(x^{eps_1}, ..., x^{eps_k})
  std::size_t term_count = 0;
};

/// Both sides of the lambda-splitting identity; equality is the contract.
/// Exercised with lambda = i through complex-rational scalars.
template <class A>
LambdaSplit<A> lambda_split_check(const SymForm<A>& f,
                                  const std::vector<std::pair<std::vector<A>, std::vector<A>>>& pairs,
                                  const A& lam) {
  const int k = f.degree();
  if (static_cast<int>(pairs.size()) != k)
    throw dimension_mismatch_error("need exactly k argument pairs");
  LambdaSplit<A> out;

  std::vector<std::vector<A>> combined;
  combined.reserve(static_cast<std::size_t>(k));
  for (const auto& [x0, x1] : pairs)
    combined.push_back(detail::vec_add(x0, detail::vec_scaled(lam, x1)));
  out.lhs = f.evaluate(combined);

  out.rhs = A(0);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::vector<A>> args;
    args.reserve(static_cast<std::size_t>(k));
    int ones = 0;
    for (int j = 0; j < k; ++j) {
      bool hi = mask & (1u << j);
      args.push_back(hi ? pairs[static_cast<std::size_t>(j)].second
                        : pairs[static_cast<std::size_t>(j)].first);
      if (hi) ++ones;
    }
    out.rhs = out.rhs + scalar_pow(lam, ones) * f.evaluate(args);
    ++out.term_count;
  }
  return out;
}

struct BoundChainReport {
  bool precondition_ok = false;  // sampled diagonal stayed within the asserted bound
  double diagonal_sup = 0.0;     // max |f(x^k)| over sampled box points
  double tuple_sup = 0.0;        // max |f(x_1..x_k)| over sampled tuples
  double bound = 0.0;            // C (2e)^k
  double max_ratio = 0.0;        // tuple_sup relative to the bound
  int violations = 0;
  int samples = 0;
};

/// Samples the bound chain "diagonal bound C on a box implies tuple bound
/// C (2e)^k": first checks |f(x^k)| <= C on sampled box points, then
/// verifies |f(x_1,...,x_k)| <= C (2e)^k on sampled tuples. A tuple
/// violation under a valid diagonal bound would contradict the chain and is
/// treated as a build-breaking bug by the test suite.
inline BoundChainReport bound_chain_22(const SymForm<double>& f, double box_radius,
                                       double diag_bound, int samples, std::uint64_t seed) {
  BoundChainReport rep;
  rep.samples = samples;
  rep.bound = diag_bound * std::pow(2.0 * std::exp(1.0), f.degree());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-box_radius, box_radius);

  auto random_vec = [&] {
    std::vector<double> v(static_cast<std::size_t>(f.dim()));
    for (double& x : v) x = coord(rng);
    return v;
  };

  rep.precondition_ok = true;
  for (int s = 0; s < samples; ++s) {
    double v = std::abs(f.diagonal(random_vec()));
    rep.diagonal_sup = std::max(rep.diagonal_sup, v);
    if (v > diag_bound) rep.precondition_ok = false;
  }
  if (!rep.precondition_ok) return rep;

  for (int s = 0; s < samples; ++s) {
    std::vector<std::vector<double>> tuple;
    tuple.reserve(static_cast<std::size_t>(f.degree()));
    for (int j = 0; j < f.degree(); ++j) tuple.push_back(random_vec());
    double v = std::abs(f.evaluate(tuple));
    rep.tuple_sup = std::max(rep.tuple_sup, v);
    if (v > rep.bound) ++rep.violations;
  }
  rep.max_ratio = rep.bound > 0 ? rep.tuple_sup / rep.bound : 0.0;
  return rep;
}

}  // namespace analytica

#endif  // ANALYTICA_MULTILINEAR_HPP
