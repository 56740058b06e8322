#ifndef ANALYTICA_TESTS_SUPPORT_HPP
#define ANALYTICA_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "analytica/multilinear.hpp"
#include "analytica/scalar.hpp"
#include "analytica/series.hpp"

namespace analytica::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline TruncatedSeries<Rational> random_series(std::mt19937_64& rng, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = random_rational(rng);
  return TruncatedSeries<Rational>(std::move(c));
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, int dim) {
  std::vector<Rational> v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = random_rational(rng, 5, 4);
  return v;
}

inline SymForm<Rational> random_form(std::mt19937_64& rng, int degree, int dim) {
  SymForm<Rational> f(degree, dim);
  std::uniform_int_distribution<int> keep(0, 3);
  bool any = false;
  for (const auto& alpha : multi_indices(degree, dim)) {
    if (keep(rng) == 0) continue;
    Rational c = random_rational(rng, 5, 4);
    if (c != 0) {
      f.set(alpha, c);
      any = true;
    }
  }
  if (!any && degree >= 0) {
    auto alphas = multi_indices(degree, dim);
    f.set(alphas.front(), Rational(1));
  }
  return f;
}

}  // namespace analytica::testing

#endif  // ANALYTICA_TESTS_SUPPORT_HPP
