#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "analytica/composition.hpp"
#include "support.hpp"

using namespace analytica;
using testing::random_rational;
using testing::random_series;

namespace {

/// Univariate reduction: a coefficient prefix as a jet (forms store the raw
/// derivative k! a_k) plus curve coefficients for the inner series.
JetOfMap<Rational> jet_from_series(const TruncatedSeries<Rational>& f) {
  JetOfMap<Rational> jet;
  jet.dim = 1;
  for (int k = 0; k <= f.order(); ++k) {
    SymForm<Rational> form(k, 1);
    Rational raw = Rational(factorial(static_cast<unsigned>(k))) * f[k];
    if (raw != 0) form.set({k}, raw);
    jet.forms.push_back(std::move(form));
  }
  return jet;
}

CurveCoefficients<Rational> curve_from_series(const TruncatedSeries<Rational>& c) {
  CurveCoefficients<Rational> curve;
  curve.dim = 1;
  for (int n = 1; n <= c.order(); ++n) curve.coeffs.push_back({c[n]});
  return curve;
}

}  // namespace

TEST_CASE("partition enumeration: pinned small cases") {
  auto single = enumerate_partitions(1, 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].parts == std::map<int, int>{{5, 1}});

  auto two_of_three = enumerate_partitions(2, 3);
  REQUIRE(two_of_three.size() == 1);
  CHECK(two_of_three[0].parts == std::map<int, int>{{1, 1}, {2, 1}});

  auto all_ones = enumerate_partitions(3, 3);
  REQUIRE(all_ones.size() == 1);
  CHECK(all_ones[0].parts == std::map<int, int>{{1, 3}});

  CHECK(enumerate_partitions(5, 3).empty());
  CHECK_THROWS_AS(enumerate_partitions(0, 3), error);
}

TEST_CASE("partition enumeration is complete and duplicate-free") {
  const int expected_p[] = {0, 1, 2, 3, 5, 7, 11, 15, 22};  // p(l) for l = 0..8
  for (int l = 1; l <= 8; ++l) {
    std::size_t total = 0;
    std::set<std::map<int, int>> seen;
    for (int k = 1; k <= l; ++k) {
      for (const auto& p : enumerate_partitions(k, l)) {
        CHECK(p.k() == k);
        CHECK(p.l() == l);
        seen.insert(p.parts);
        ++total;
      }
    }
    CHECK(total == static_cast<std::size_t>(expected_p[l]));
    CHECK(seen.size() == total);
  }
}

TEST_CASE("multinomial partition sum collapses to a binomial coefficient") {
  CHECK(multinomial_partition_sum(1, 5) == 1);
  CHECK(multinomial_partition_sum(2, 3) == 2);
  CHECK(multinomial_partition_sum(3, 6) == 10);
  for (int l = 1; l <= 18; ++l)
    for (int k = 1; k <= l; ++k)
      CHECK(multinomial_partition_sum(k, l) ==
            binomial(static_cast<unsigned>(l - 1), static_cast<unsigned>(k - 1)));
}

TEST_CASE("composing with a linear map applies the form to each coefficient") {
  std::mt19937_64 rng(31);
  JetOfMap<Rational> jet;
  jet.dim = 2;
  jet.forms.emplace_back(0, 2);
  SymForm<Rational> linear(1, 2);
  linear.set({1, 0}, Rational(3));
  linear.set({0, 1}, Rational(-2));
  jet.forms.push_back(linear);
  for (int k = 2; k <= 5; ++k) jet.forms.emplace_back(k, 2);

  CurveCoefficients<Rational> curve;
  curve.dim = 2;
  for (int n = 1; n <= 5; ++n) curve.coeffs.push_back(testing::random_vector(rng, 2));

  auto out = compose_jet(jet, curve, 5);
  CHECK(out[0] == Rational(0));
  for (int l = 1; l <= 5; ++l) CHECK(out[l] == linear.evaluate({curve.at(l)}));
}

TEST_CASE("composing the square with t + t^2") {
  // f(u) = u^2 around 0: only the second derivative survives, d^2 f = 2.
  JetOfMap<Rational> jet;
  jet.dim = 1;
  jet.forms.emplace_back(0, 1);
  jet.forms.emplace_back(1, 1);
  SymForm<Rational> second(2, 1);
  second.set({2}, Rational(2));
  jet.forms.push_back(second);
  jet.forms.emplace_back(3, 1);
  jet.forms.emplace_back(4, 1);

  CurveCoefficients<Rational> curve;
  curve.dim = 1;
  curve.coeffs = {{Rational(1)}, {Rational(1)}, {Rational(0)}, {Rational(0)}};

  auto out = compose_jet(jet, curve, 4);
  CHECK(out.coeffs() == std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(2),
                                              Rational(1)});
}

TEST_CASE("composing the exponential jet with t recovers the exponential series") {
  auto exp_series = SeriesGenerator<Rational>::exponential().prefix(8);
  auto jet = jet_from_series(exp_series);
  CurveCoefficients<Rational> curve;
  curve.dim = 1;
  curve.coeffs.push_back({Rational(1)});
  for (int n = 2; n <= 8; ++n) curve.coeffs.push_back({Rational(0)});
  CHECK(compose_jet(jet, curve, 8) == exp_series);
}

TEST_CASE("missing jet or curve data raises a named truncation error") {
  auto exp_series = SeriesGenerator<Rational>::exponential().prefix(3);
  auto jet = jet_from_series(exp_series);
  auto curve = curve_from_series(SeriesGenerator<Rational>::exponential().prefix(3));
  try {
    compose_jet(jet, curve, 5);
    FAIL("expected truncation_data_error");
  } catch (const truncation_data_error& e) {
    CHECK(e.part() >= 4);
  }

  CurveCoefficients<Rational> short_curve;
  short_curve.dim = 1;
  short_curve.coeffs = {{Rational(1)}};
  auto jet5 = jet_from_series(SeriesGenerator<Rational>::exponential().prefix(5));
  try {
    compose_jet(jet5, short_curve, 3);
    FAIL("expected truncation_data_error");
  } catch (const truncation_data_error& e) {
    CHECK(e.part() >= 2);
  }
}

TEST_CASE("substitution oracle basics") {
  std::mt19937_64 rng(32);
  auto c = random_series(rng, 6);
  std::vector<Rational> cc = c.coeffs();
  cc[0] = Rational(0);
  TruncatedSeries<Rational> inner(cc);

  auto identity = TruncatedSeries<Rational>::identity(6);
  CHECK(faa_di_bruno_oracle(identity, inner) == inner);

  std::vector<Rational> half_t(9, Rational(0));
  half_t[1] = Rational(1, 2);
  auto geo = SeriesGenerator<Rational>::geometric(Rational(1)).prefix(8);
  auto composed = faa_di_bruno_oracle(geo, TruncatedSeries<Rational>(std::move(half_t)));
  for (int k = 0; k <= 8; ++k) CHECK(composed[k] == rational_pow(Rational(1, 2), k));

  CHECK_THROWS_AS(faa_di_bruno_oracle(geo, TruncatedSeries<Rational>::one(8)),
                  composition_domain_error);
}

TEST_CASE("compose_jet matches the substitution oracle on random instances") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    int order = 3 + static_cast<int>(rng() % 8);  // up to 10
    auto f = random_series(rng, order);
    auto c = random_series(rng, order);
    std::vector<Rational> cc = c.coeffs();
    cc[0] = Rational(0);
    TruncatedSeries<Rational> inner(std::move(cc));

    auto via_jet = compose_jet(jet_from_series(f), curve_from_series(inner), order);
    auto via_oracle = faa_di_bruno_oracle(f, inner);
    CHECK(via_jet == via_oracle);
  }
}

TEST_CASE("termwise derivative of a composition satisfies the chain rule") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    int order = 3 + static_cast<int>(rng() % 6);  // up to 8
    auto f = random_series(rng, order);
    auto c = random_series(rng, order);
    std::vector<Rational> cc = c.coeffs();
    cc[0] = Rational(0);
    TruncatedSeries<Rational> inner(std::move(cc));

    auto lhs = series_derivative(compose_jet(jet_from_series(f), curve_from_series(inner), order));
    auto fprime_of_c = faa_di_bruno_oracle(series_derivative(f), truncated(inner, order - 1));
    auto rhs = cauchy_product(fprime_of_c, series_derivative(inner));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("majorant check: zero map") {
  JetOfMap<Rational> jet;
  jet.dim = 1;
  for (int k = 0; k <= 4; ++k) jet.forms.emplace_back(k, 1);
  CurveCoefficients<Rational> curve;
  curve.dim = 1;
  for (int n = 1; n <= 4; ++n) curve.coeffs.push_back({Rational(1, n + 1)});

  auto rep = majorant_estimate_check<Rational>({jet}, {curve},
                                               WeightSeq<Rational>::inverse_factorial(),
                                               Rational(1, 2), 4, Rational(1), 32, 7);
  CHECK(rep.derivative_bound_ok);
  CHECK(rep.curve_in_unit_box);
  CHECK(rep.estimate_holds);
  CHECK(rep.max_lhs == Rational(0));
}

TEST_CASE("majorant check: geometric jet composed with t") {
  // d^k f = k! at 0 for f(u) = 1/(1-u); with c(t) = t the composite is f
  // itself and the left side is r_l (eps/2)^l = (1/4)^l / l! <= 1/2.
  const int L = 6;
  auto jet = jet_from_series(SeriesGenerator<Rational>::geometric(Rational(1)).prefix(L));
  CurveCoefficients<Rational> curve;
  curve.dim = 1;
  curve.coeffs.push_back({Rational(1)});
  for (int n = 2; n <= L; ++n) curve.coeffs.push_back({Rational(0)});

  auto rep = majorant_estimate_check<Rational>({jet}, {curve},
                                               WeightSeq<Rational>::inverse_factorial(),
                                               Rational(1, 2), L, Rational(1), 64, 8);
  CHECK(rep.derivative_bound_ok);
  CHECK(rep.curve_in_unit_box);
  CHECK(rep.estimate_holds);
  CHECK(rep.max_lhs == Rational(1, 4));  // attained at l = 1
}

TEST_CASE("majorant check: random quadratic maps on polynomial curves") {
  std::mt19937_64 rng(35);
  const int L = 8;
  const Rational eps(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    JetOfMap<Rational> jet;
    jet.dim = 2;
    jet.forms.emplace_back(0, 2);
    SymForm<Rational> d1(1, 2), d2(2, 2);
    for (const auto& alpha : multi_indices(1, 2)) d1.set(alpha, random_rational(rng, 3, 2));
    for (const auto& alpha : multi_indices(2, 2)) d2.set(alpha, random_rational(rng, 3, 2));
    jet.forms.push_back(d1);
    jet.forms.push_back(d2);
    for (int k = 3; k <= L; ++k) jet.forms.emplace_back(k, 2);

    CurveCoefficients<Rational> curve;
    curve.dim = 2;
    for (int n = 1; n <= L; ++n) {
      std::uniform_int_distribution<int> num(-2, 2);
      curve.coeffs.push_back({Rational(num(rng), 2), Rational(num(rng), 2)});
    }

    // Valid diagonal bound on the eps-box by the triangle inequality.
    Rational c_bound(0);
    for (int k = 1; k <= 2; ++k) {
      Rational level(0);
      for (const auto& [alpha, c] : jet.forms[static_cast<std::size_t>(k)].coefficients())
        level += Rational(multinomial(k, alpha)) * abs(c);
      level = level * rational_pow(eps, k) / Rational(factorial(static_cast<unsigned>(k)));
      if (level > c_bound) c_bound = level;
    }
    if (c_bound == 0) c_bound = Rational(1);

    auto rep = majorant_estimate_check<Rational>({jet}, {curve},
                                                 WeightSeq<Rational>::inverse_factorial(), eps, L,
                                                 c_bound, 24, 9000 + trial);
    CHECK(rep.derivative_bound_ok);
    CHECK(rep.curve_in_unit_box);
    CHECK(rep.estimate_holds);
  }
}
