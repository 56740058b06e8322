#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "analytica/convergence.hpp"
#include "support.hpp"

using namespace analytica;

TEST_CASE("built-in weight families are subadditive and certified") {
  CHECK(WeightSeq<Rational>::inverse_factorial().subadditive_up_to(60));
  CHECK(WeightSeq<Rational>::scaled_inverse_factorial(Rational(3, 2)).subadditive_up_to(60));
  CHECK(WeightSeq<double>::gaussian().subadditive_up_to(40, 1e-12));
  CHECK(WeightSeq<Rational>::inverse_factorial().decay_certified());
  CHECK(WeightSeq<double>::gaussian().decay_certified());

  auto attested = WeightSeq<Rational>::explicit_table({Rational(1), Rational(1, 2)}, true);
  CHECK(attested.decay_certified());
  auto unattested = WeightSeq<Rational>::explicit_table({Rational(1), Rational(1, 2)}, false);
  CHECK_FALSE(unattested.decay_certified());
  CHECK_THROWS_AS(attested.at(2), insufficient_data_error);
}

TEST_CASE("a weight table violating subadditivity is reported") {
  auto table = WeightSeq<Rational>::explicit_table(
      {Rational(1), Rational(1, 10), Rational(1, 2)}, true);
  CHECK_FALSE(table.subadditive_up_to(2));
}

TEST_CASE("radius estimate: geometric models within factor 1.1") {
  for (const Rational& ratio : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)}) {
    auto prefix = SeriesGenerator<Rational>::geometric(ratio).prefix(64);
    double truth = 1.0 / to_double(ratio);
    double est = radius_lower_bound(prefix);
    CHECK(est <= 1.1 * truth);
    CHECK(est >= truth / 1.1);
  }
}

TEST_CASE("radius estimate: edge cases") {
  auto ones = SeriesGenerator<Rational>::geometric(Rational(1)).prefix(64);
  double est = radius_lower_bound(ones);
  CHECK(est >= 0.95);
  CHECK(est <= 1.05);

  auto poly = TruncatedSeries<Rational>::one(12);
  CHECK(std::isinf(radius_lower_bound(poly)));

  auto fact = SeriesGenerator<Rational>::factorial_growth().prefix(64);
  CHECK(radius_lower_bound(fact) < 0.05);

  CHECK_THROWS_AS(radius_lower_bound(TruncatedSeries<Rational>::one(7)),
                  insufficient_data_error);
}

TEST_CASE("weighted boundedness test on standard pairs") {
  auto inv_fact = WeightSeq<Rational>::inverse_factorial();

  auto ones = SeriesGenerator<Rational>::geometric(Rational(1)).prefix(40);
  auto rep = weight_boundedness_test(ones, inv_fact, Rational(1));
  CHECK(rep.bounded);
  CHECK(rep.sup == Rational(1));
  CHECK(rep.arg_max == 0);

  // k! * 1/k! = 1 for every k: a single weight cannot refute analyticity.
  auto fact = SeriesGenerator<Rational>::factorial_growth().prefix(40);
  auto rep2 = weight_boundedness_test(fact, inv_fact, Rational(1));
  CHECK(rep2.bounded);
  CHECK(rep2.sup == Rational(1));
  for (const auto& v : rep2.values) CHECK(v == Rational(1));

  auto rep3 = weight_boundedness_test(TruncatedSeries<Rational>::zero(10), inv_fact, Rational(1));
  CHECK(rep3.sup == Rational(0));

  // degenerate prefix: a single value cannot grow
  auto rep4 = weight_boundedness_test(TruncatedSeries<Rational>::one(0), inv_fact, Rational(1));
  CHECK(rep4.bounded);

  CHECK_THROWS_AS(weight_boundedness_test(ones, inv_fact, Rational(0)), error);
}

TEST_CASE("radius-zero witness for factorial coefficients") {
  auto fact = SeriesGenerator<Rational>::factorial_growth().prefix(200);
  auto w = nonanalytic_witness(fact, 4);
  REQUIRE(w.blocks.size() == 4);
  CHECK(w.subadditive);
  CHECK(w.block_inequalities);

  // Blocks tile an initial segment.
  CHECK(w.blocks.front().k_begin == 0);
  for (std::size_t i = 1; i < w.blocks.size(); ++i)
    CHECK(w.blocks[i].k_begin == w.blocks[i - 1].k_end);
  CHECK(w.table.size() == static_cast<std::size_t>(w.blocks.back().k_end));

  // Independent re-derivation of each block: the sum reaches 1 exactly at
  // the recorded end and not before.
  for (const auto& b : w.blocks) {
    Rational sum(0);
    Rational inv_sq(1, b.n * b.n);
    for (int k = b.k_begin; k < b.k_end; ++k) {
      CHECK(sum < 1);  // earliest-closing property
      sum += abs(fact[k]) * rational_pow(inv_sq, k);
    }
    CHECK(sum >= 1);
    CHECK(sum == b.block_sum);
  }

  // The table carries (1/n)^k on block n.
  for (const auto& b : w.blocks)
    for (int k = b.k_begin; k < b.k_end; ++k)
      CHECK(w.table[static_cast<std::size_t>(k)] == rational_pow(Rational(1, b.n), k));
}

TEST_CASE("radius-zero witness rejects a geometric series") {
  auto ones = SeriesGenerator<Rational>::geometric(Rational(1)).prefix(300);
  try {
    nonanalytic_witness(ones, 4);
    FAIL("expected insufficient_prefix_error");
  } catch (const insufficient_prefix_error& e) {
    CHECK(e.block() == 2);
  }
}

TEST_CASE("radius-zero witness for k^k coefficients") {
  auto series = SeriesGenerator<Rational>::self_power().prefix(120);
  auto w = nonanalytic_witness(series, 3);
  CHECK(w.subadditive);
  CHECK(w.block_inequalities);
  CHECK(w.blocks.size() == 3);
  for (const auto& b : w.blocks) CHECK(b.block_sum >= 1);
}

TEST_CASE("curve analyticity test on a polynomial curve") {
  // c(t) = (t, t^2) sampled at {0, 1/2, 1}: jets vanish for k >= 3.
  CurveJet jet;
  jet.grid = {0.0, 0.5, 1.0};
  jet.dim = 2;
  jet.degree = 5;
  for (double a : jet.grid) {
    std::vector<std::vector<double>> rows(6, std::vector<double>(2, 0.0));
    rows[0] = {a, a * a};
    rows[1] = {1.0, 2.0 * a};
    rows[2] = {0.0, 1.0};
    jet.jets.push_back(rows);
  }
  auto rep = curve_analyticity_test(jet, WeightSeq<double>::inverse_factorial());
  CHECK(rep.bounded);
  CHECK(rep.sup == 2.0);  // ||c'(1)||_inf = 2 dominates
  CHECK(rep.arg_max == 1);
}

TEST_CASE("curve analyticity test on the exponential curve") {
  CurveJet jet;
  jet.grid = {0.0, 1.0};
  jet.dim = 1;
  jet.degree = 20;
  for (double a : jet.grid) {
    std::vector<std::vector<double>> rows;
    for (int k = 0; k <= 20; ++k)
      rows.push_back({std::exp(a) * std::exp(-std::lgamma(k + 1.0))});
    jet.jets.push_back(rows);
  }
  auto rep = curve_analyticity_test(jet, WeightSeq<double>::inverse_factorial());
  CHECK(rep.bounded);
  CHECK(rep.arg_max == 0);
  CHECK(approx_equal(rep.sup, std::exp(1.0)));
}

TEST_CASE("curve analyticity test tracks the growth of the model curve") {
  // Coefficient functions of the model curve evaluated on the t-grid {1, 2}:
  // the k-th normalized derivative is t -> (-1)^{k/2} t^k for even k, so the
  // grid sup is 2^k for even k, 0 for odd.
  CurveJet jet;
  jet.grid = {0.0};
  jet.dim = 2;
  jet.degree = 30;
  std::vector<std::vector<double>> rows;
  for (int k = 0; k <= 30; ++k) {
    if (k % 2) {
      rows.push_back({0.0, 0.0});
    } else {
      double sign = (k / 2 % 2) ? -1.0 : 1.0;
      rows.push_back({sign, sign * std::pow(2.0, k)});
    }
  }
  jet.jets.push_back(rows);

  auto bounded_rep = curve_analyticity_test(jet, WeightSeq<double>::inverse_factorial());
  CHECK(bounded_rep.bounded);
  CHECK(approx_equal(bounded_rep.sup, 2.0));  // 2^k/k! peaks at k = 2

  // Scaled families track the growth per scale c: sup_k (2c)^k / k!.
  const double expected[] = {2.0, 32.0 / 3.0, 131072.0 / 315.0};
  int idx = 0;
  for (double c : {1.0, 2.0, 4.0}) {
    auto rep = curve_analyticity_test(jet, WeightSeq<double>::scaled_inverse_factorial(c));
    CHECK(approx_equal(rep.sup, expected[idx]));
    CHECK(rep.bounded);
    ++idx;
  }
}

namespace {

GermFamily monomial_tower_family(int members, int k_max) {
  // b_n(z) = n^n z^n: exactly one nonzero coefficient per germ.
  GermFamily fam;
  fam.k_max = k_max;
  for (int n = 1; n <= members; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(k_max) + 1, Rational(0));
    if (n <= k_max) row[static_cast<std::size_t>(n)] = Rational(int_pow(BigInt(n), n));
    fam.members.push_back(std::move(row));
  }
  return fam;
}

}  // namespace

TEST_CASE("divergence combination on the monomial tower family") {
  auto fam = monomial_tower_family(12, 64);

  // Per-coefficient boundedness certificate: singletons per column.
  auto sup = fam.per_coefficient_sup();
  CHECK(sup[2] == Rational(4));
  CHECK(sup[12] == Rational(int_pow(BigInt(12), 12)));

  auto w = divergence_combination(fam, 6);
  REQUIRE(w.terms.size() == 6);
  CHECK(w.bounds_verified);
  CHECK(w.finite_family_restriction);

  int prev_k = 0, prev_member = -1;
  for (const auto& term : w.terms) {
    CHECK(term.k > prev_k);
    CHECK(term.member > prev_member);
    prev_k = term.k;
    prev_member = term.member;
    CHECK(abs(term.t) == rational_pow(Rational(1, 4), term.m));
    CHECK(abs(term.coefficient) > rational_pow(Rational(term.m), term.k));
    CHECK(abs(w.combined[static_cast<std::size_t>(term.k)]) >= term.lower_bound);
  }
  // Selection threshold m^k forces k_m = m + 1 here: k^k > m^k iff k > m.
  for (const auto& term : w.terms) CHECK(term.k == term.m + 1);

  // Re-derive the inequality chain term by term: the combined coefficient
  // dominates |b_m| (|t_m| - 2 sum_{j>m} |t_j|), which dominates the
  // recorded lower bound m^{k_m} / (3 4^m).
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const auto& term = w.terms[i];
    Rational later_mass(0);
    for (std::size_t j = i + 1; j < w.terms.size(); ++j) later_mass += abs(w.terms[j].t);
    Rational mid = abs(term.coefficient) * (abs(term.t) - 2 * later_mass);
    CHECK(abs(w.combined[static_cast<std::size_t>(term.k)]) >= mid);
    CHECK(mid >= term.lower_bound);
  }
}

TEST_CASE("divergence combination with alternating signs still verifies") {
  auto fam = monomial_tower_family(12, 64);
  for (std::size_t n = 0; n < fam.members.size(); ++n)
    if (n % 2)
      for (auto& c : fam.members[n]) c = -c;
  auto w = divergence_combination(fam, 6);
  CHECK(w.bounds_verified);
}

TEST_CASE("a single bounded germ admits no divergence combination") {
  GermFamily fam;
  fam.k_max = 16;
  std::vector<Rational> row(17, Rational(0));
  row[0] = Rational(1);
  fam.members.push_back(std::move(row));
  try {
    divergence_combination(fam, 1);
    FAIL("expected insufficient_family_error");
  } catch (const insufficient_family_error& e) {
    CHECK(e.m() == 1);
  }
}

TEST_CASE("the damped tower n!/n^n never crosses the selection threshold") {
  // b_{n,n} = n!/n^n <= 1, so already |b| > 1^k fails for every k >= 1.
  GermFamily fam;
  fam.k_max = 32;
  for (int n = 1; n <= 12; ++n) {
    std::vector<Rational> row(33, Rational(0));
    if (n <= 32)
      row[static_cast<std::size_t>(n)] =
          Rational(factorial(static_cast<unsigned>(n)), int_pow(BigInt(n), n));
    fam.members.push_back(std::move(row));
  }
  // Independent oracle for the failing step: scan all (k, n) per m.
  int first_failing_m = 0;
  for (int m = 1; m <= 2 && !first_failing_m; ++m) {
    bool any = false;
    for (int k = 1; k <= fam.k_max; ++k)
      for (const auto& row : fam.members)
        if (abs(row[static_cast<std::size_t>(k)]) > rational_pow(Rational(m), k)) any = true;
    if (!any) first_failing_m = m;
  }
  CHECK(first_failing_m == 1);

  try {
    divergence_combination(fam, 2);
    FAIL("expected insufficient_family_error");
  } catch (const insufficient_family_error& e) {
    CHECK(e.m() == first_failing_m);
  }
}

TEST_CASE("argmax selection exhausts the family monotonically") {
  // b_{n,k} = n^k: every column's argmax is the last member, so the second
  // step has nobody left to pick.
  GermFamily fam;
  fam.k_max = 8;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Rational> row(9);
    for (int k = 0; k <= 8; ++k) row[static_cast<std::size_t>(k)] = rational_pow(Rational(n), k);
    fam.members.push_back(std::move(row));
  }
  try {
    divergence_combination(fam, 2);
    FAIL("expected insufficient_family_error");
  } catch (const insufficient_family_error& e) {
    CHECK(e.m() == 2);
  }
}
