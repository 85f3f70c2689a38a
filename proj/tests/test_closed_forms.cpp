#include "horacirc/closed_forms.hpp"

#include "dense_reference.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <variant>
#include <vector>

using horacirc::CirculantSpec;
using horacirc::ConditionReport;
using horacirc::FormulaId;
using horacirc::FormulaValue;
using horacirc::Int;
using horacirc::Matrix;
using horacirc::Method;
using horacirc::NormResult;
using horacirc::Rat;
using horacirc::RecurrenceParams;

namespace {

std::vector<Rat> rats(std::initializer_list<long long> values) {
  return std::vector<Rat>(values.begin(), values.end());
}

Rat exact_formula(FormulaId id, const RecurrenceParams& params, std::size_t n) {
  return std::get<Rat>(horacirc::evaluate_published_formula(id, params, n));
}

}  // namespace

TEST_CASE("autocorrelation report matches the worked examples") {
  const ConditionReport boundary = horacirc::check_autocorrelation(rats({2, 2, -1}));
  CHECK(boundary.correlations == rats({9, 0, 0}));
  CHECK(boundary.autocorrelation_ok);
  CHECK_FALSE(boundary.nonnegative);
  CHECK_FALSE(boundary.failing_shift.has_value());

  const ConditionReport failing = horacirc::check_autocorrelation(rats({1, -1}));
  CHECK(failing.correlations == rats({2, -2}));
  CHECK_FALSE(failing.autocorrelation_ok);
  REQUIRE(failing.failing_shift.has_value());
  CHECK(*failing.failing_shift == 2);

  const ConditionReport ones = horacirc::check_autocorrelation(rats({1, 1, 1}));
  CHECK(ones.correlations == rats({3, 3, 3}));
  CHECK(ones.nonnegative);
  CHECK(ones.autocorrelation_ok);
}

TEST_CASE("autocorrelation report rejects an empty vector") {
  CHECK_THROWS_MATCHES(horacirc::check_autocorrelation({}), std::invalid_argument,
                       Catch::Matchers::Message("empty vector"));
}

TEST_CASE("nonnegative vectors always pass the autocorrelation condition") {
  std::mt19937_64 rng(211);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  std::uniform_int_distribution<long long> entry(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> x;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(entry(rng));
    const ConditionReport report = horacirc::check_autocorrelation(x);
    REQUIRE(report.nonnegative);
    REQUIRE(report.autocorrelation_ok);
    REQUIRE_FALSE(report.failing_shift.has_value());
    for (const Rat& c : report.correlations) REQUIRE(c >= 0);
  }
}

TEST_CASE("autocorrelation sums are invariant under global negation") {
  std::mt19937_64 rng(223);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> x;
    std::vector<Rat> negated;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      x.emplace_back(entry(rng));
      negated.push_back(-x.back());
    }
    const ConditionReport a = horacirc::check_autocorrelation(x);
    const ConditionReport b = horacirc::check_autocorrelation(negated);
    REQUIRE(a.correlations == b.correlations);
    REQUIRE(a.autocorrelation_ok == b.autocorrelation_ok);
    REQUIRE(a.failing_shift == b.failing_shift);
  }
}

TEST_CASE("failing shift is the smallest negative correlation index") {
  std::mt19937_64 rng(227);
  std::uniform_int_distribution<std::size_t> len(1, 9);
  std::uniform_int_distribution<long long> entry(-9, 9);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rat> x;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(entry(rng));
    const ConditionReport report = horacirc::check_autocorrelation(x);
    std::size_t expected = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (report.correlations[j] < 0) {
        expected = j + 1;
        break;
      }
    }
    if (expected == 0) {
      REQUIRE(report.autocorrelation_ok);
      REQUIRE_FALSE(report.failing_shift.has_value());
    } else {
      REQUIRE_FALSE(report.autocorrelation_ok);
      REQUIRE(report.failing_shift == expected);
    }
  }
}

TEST_CASE("equal-sums norm matches the worked examples") {
  Matrix<Rat> symmetric(2, 2, Rat(0));
  symmetric(0, 0) = 1;
  symmetric(0, 1) = 2;
  symmetric(1, 0) = 2;
  symmetric(1, 1) = 1;
  const NormResult two = horacirc::norm_equal_sums(symmetric);
  CHECK(two.method == Method::ThmEqualSums);
  REQUIRE(two.value_exact.has_value());
  CHECK(*two.value_exact == 3);
  REQUIRE(two.certificate.equal_sums.has_value());
  CHECK(*two.certificate.equal_sums == 3);

  const NormResult identity = horacirc::norm_equal_sums(Matrix<Rat>::identity(3));
  CHECK(*identity.value_exact == 1);

  Matrix<Rat> shift(3, 3, Rat(0));
  shift(0, 1) = 1;
  shift(1, 2) = 1;
  shift(2, 0) = 1;
  CHECK(*horacirc::norm_equal_sums(shift).value_exact == 1);
}

TEST_CASE("equal-sums norm survives its own oracle cross-check") {
  Matrix<Rat> symmetric(2, 2, Rat(0));
  symmetric(0, 0) = 1;
  symmetric(0, 1) = 2;
  symmetric(1, 0) = 2;
  symmetric(1, 1) = 1;
  const NormResult checked = horacirc::norm_equal_sums(symmetric, /*debug_oracle=*/true);
  CHECK(*checked.value_exact == 3);
}

TEST_CASE("equal-sums norm rejects bad matrices") {
  Matrix<Rat> negative(2, 2, Rat(1));
  negative(0, 1) = -1;
  CHECK_THROWS_MATCHES(horacirc::norm_equal_sums(negative), std::domain_error,
                       Catch::Matchers::Message("not entrywise nonnegative (entry 0,1)"));
  Matrix<Rat> ragged(2, 2, Rat(1));
  ragged(1, 1) = 2;
  CHECK_THROWS_MATCHES(horacirc::norm_equal_sums(ragged), std::domain_error,
                       Catch::Matchers::Message("row/column sums differ (row 1)"));
  // Row sums can match while a column differs.
  Matrix<Rat> columns(2, 2, Rat(0));
  columns(0, 0) = 1;
  columns(0, 1) = 1;
  columns(1, 0) = 2;
  columns(1, 1) = 0;
  CHECK_THROWS_MATCHES(horacirc::norm_equal_sums(columns), std::domain_error,
                       Catch::Matchers::Message("row/column sums differ (column 0)"));
  CHECK_THROWS_AS(horacirc::norm_equal_sums(Matrix<Rat>(2, 3, Rat(0))), std::invalid_argument);
  CHECK_THROWS_AS(horacirc::norm_equal_sums(Matrix<Rat>()), std::invalid_argument);
}

TEST_CASE("exact norm routes match the worked examples") {
  const NormResult fib = horacirc::norm_exact(rats({0, 1, 1, 2}));
  CHECK(fib.method == Method::ThmNonneg);
  REQUIRE(fib.value_exact.has_value());
  CHECK(*fib.value_exact == 4);
  CHECK_FALSE(fib.value_approx.has_value());

  const NormResult boundary = horacirc::norm_exact(rats({2, 2, -1}));
  CHECK(boundary.method == Method::ThmAutocorr);
  CHECK(*boundary.value_exact == 3);

  const NormResult negated = horacirc::norm_exact(rats({-2, -2, 1}));
  CHECK(negated.method == Method::ThmAutocorr);
  CHECK(*negated.value_exact == 3);

  const NormResult numeric = horacirc::norm_exact(rats({1, -1}));
  CHECK(numeric.method == Method::DftNumeric);
  CHECK_FALSE(numeric.value_exact.has_value());
  REQUIRE(numeric.value_approx.has_value());
  CHECK_THAT(numeric.value_approx->value, Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK(numeric.certificate.failing_shift == 2);
}

TEST_CASE("exact norm rejects an empty vector") {
  CHECK_THROWS_AS(horacirc::norm_exact({}), std::invalid_argument);
}

TEST_CASE("exactly one of the value fields is populated") {
  std::mt19937_64 rng(229);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<long long> entry(-5, 5);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rat> x;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(entry(rng));
    const NormResult result = horacirc::norm_exact(x);
    REQUIRE(result.value_exact.has_value() != result.value_approx.has_value());
    REQUIRE((result.method != Method::DftNumeric) == result.value_exact.has_value());
    if (result.certificate.nonnegative) REQUIRE(result.method == Method::ThmNonneg);
  }
}

TEST_CASE("every exact norm route agrees with a dense SVD") {
  std::mt19937_64 rng(233);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<long long> entry(-5, 5);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rat> x;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(entry(rng));
    const NormResult result = horacirc::norm_exact(x);
    const double reference = testref::dense_max_singular(horacirc::materialize(CirculantSpec{x}));
    const double mine = result.value_exact ? result.value_exact->convert_to<double>()
                                           : result.value_approx->value;
    REQUIRE(std::abs(mine - reference) <= 1e-9 * std::max(1.0, reference));
  }
}

TEST_CASE("recurrence norms match the worked examples") {
  const NormResult fib = horacirc::norm_horadam({0, 1, 1, 1}, 6);
  CHECK(fib.method == Method::ThmNonneg);
  CHECK(*fib.value_exact == 12);

  const NormResult lucas = horacirc::norm_horadam({2, 1, 1, 1}, 4);
  CHECK(lucas.method == Method::ThmNonneg);
  CHECK(*lucas.value_exact == 10);

  const NormResult numeric = horacirc::norm_horadam({1, -1, 1, 1}, 2);
  CHECK(numeric.method == Method::DftNumeric);
  CHECK_THAT(numeric.value_approx->value, Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("published formulas match their worked examples") {
  CHECK(exact_formula(FormulaId::KocerEq1, {0, 1, 1, 1}, 4) == 4);
  CHECK(exact_formula(FormulaId::LiuPq1, {2, 3, 0, 1}, 4) == 10);
  CHECK(exact_formula(FormulaId::BahsiLucas, {2, 1, 1, 1}, 4) == 10);
  // The general-parameter display evaluates to 0 here even though the true
  // norm is 2: evaluating a published expression is not certifying it.
  CHECK(exact_formula(FormulaId::LiuGeneral, {1, -1, 1, 1}, 2) == 0);
  const NormResult truth = horacirc::norm_horadam({1, -1, 1, 1}, 2);
  CHECK_THAT(truth.value_approx->value, Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("fixed-sequence formulas reproduce the small cases") {
  CHECK(exact_formula(FormulaId::IpekFib, {0, 1, 1, 1}, 1) == 0);
  CHECK(exact_formula(FormulaId::IpekFib, {0, 1, 1, 1}, 6) == 12);
  CHECK(exact_formula(FormulaId::IpekLucas, {2, 1, 1, 1}, 1) == 2);
  CHECK(exact_formula(FormulaId::IpekLucas, {2, 1, 1, 1}, 4) == 10);
}

TEST_CASE("published formulas reject violated hypotheses by name") {
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::KocerEq1, {0, 2, 1, 1}, 3),
      std::domain_error, Catch::Matchers::Message("KOCER_EQ1 requires b = 1"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::KocerEq1, {-1, 1, 1, 1}, 3),
      std::domain_error, Catch::Matchers::Message("KOCER_EQ1 requires a >= 0"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::KocerEq1, {0, 1, 0, 1}, 3),
      std::domain_error, Catch::Matchers::Message("KOCER_EQ1 requires p >= 1 and q >= 1"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::LiuGeneral, {0, 1, 2, -1}, 3),
      std::domain_error, Catch::Matchers::Message("LIU_GENERAL requires p + q != 1"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::LiuPq1, {0, 1, 1, 1}, 3),
      std::domain_error, Catch::Matchers::Message("LIU_PQ1 requires p + q = 1"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::LiuPq1, {0, 1, 2, -1}, 3),
      std::domain_error, Catch::Matchers::Message("LIU_PQ1 requires q != -1"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::BahsiFib, {1, 1, 1, 1}, 3),
      std::domain_error, Catch::Matchers::Message("BAHSI_FIB requires (a, b) = (0, 1)"));
  CHECK_THROWS_MATCHES(
      horacirc::evaluate_published_formula(FormulaId::BahsiLucas, {2, 3, 1, 1}, 3),
      std::domain_error, Catch::Matchers::Message("BAHSI_LUCAS requires (a, b) = (2, p)"));
  CHECK_THROWS_AS(horacirc::evaluate_published_formula(FormulaId::IpekFib, {0, 1, 1, 1}, 0),
                  std::invalid_argument);
}

TEST_CASE("overlapping formulas agree wherever their domains intersect") {
  // Same quantity through different published routes must coincide exactly.
  for (long long p = 1; p <= 3; ++p) {
    for (long long q = 1; q <= 3; ++q) {
      for (std::size_t n = 1; n <= 8; ++n) {
        for (long long a = 0; a <= 3; ++a) {
          const RecurrenceParams kocer{a, 1, p, q};
          REQUIRE(exact_formula(FormulaId::KocerEq1, kocer, n) ==
                  exact_formula(FormulaId::LiuGeneral, kocer, n));
        }
        const RecurrenceParams fib_like{0, 1, p, q};
        REQUIRE(exact_formula(FormulaId::BahsiFib, fib_like, n) ==
                exact_formula(FormulaId::LiuGeneral, fib_like, n));
      }
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    REQUIRE(exact_formula(FormulaId::IpekFib, {0, 1, 1, 1}, n) ==
            exact_formula(FormulaId::BahsiFib, {0, 1, 1, 1}, n));
    REQUIRE(exact_formula(FormulaId::IpekLucas, {2, 1, 1, 1}, n) ==
            exact_formula(FormulaId::BahsiLucas, {2, 1, 1, 1}, n));
  }
}

TEST_CASE("the restricted-domain formula matches the certified norm on its grid") {
  // Empirical domain check: with p,q >= 1, b = 1, a >= 0 the window is
  // nonnegative, so the certified value is the exact sum; the published
  // expression must reproduce it everywhere on the grid.
  for (long long a = 0; a <= 4; ++a) {
    for (long long p = 1; p <= 4; ++p) {
      for (long long q = 1; q <= 4; ++q) {
        const RecurrenceParams params{a, 1, p, q};
        for (std::size_t n = 1; n <= 12; ++n) {
          const NormResult certified = horacirc::norm_horadam(params, n);
          REQUIRE(certified.method == Method::ThmNonneg);
          REQUIRE(exact_formula(FormulaId::KocerEq1, params, n) == *certified.value_exact);
        }
      }
    }
  }
}

TEST_CASE("the eigenvalue-maximum formula matches the transform norm") {
  std::mt19937_64 rng(239);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  int compared = 0;
  for (int trial = 0; trial < 300 && compared < 100; ++trial) {
    const RecurrenceParams params{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    const std::size_t n = len(rng);
    // Skip inputs where some per-eigenvalue denominator is near-singular;
    // there the formula's division is ill-posed and it falls back internally.
    const double p = params.p.convert_to<double>();
    const double q = params.q.convert_to<double>();
    bool singular = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = -2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                           static_cast<double>(n);
      const std::complex<double> w1 = std::polar(1.0, angle);
      const std::complex<double> w2 = std::polar(1.0, 2.0 * angle);
      if (std::abs(q * w2 + p * w1 - 1.0) <= 1e-6) {
        singular = true;
        break;
      }
    }
    if (singular) continue;
    ++compared;
    const double formula =
        std::get<double>(horacirc::evaluate_published_formula(FormulaId::KocerMax, params, n));
    const CirculantSpec spec{horacirc::to_rationals(horacirc::generate(params, n).terms)};
    const double reference = horacirc::spectral_norm_dft(spec).max_singular;
    REQUIRE(std::abs(formula - reference) <= 1e-9 * std::max(1.0, reference));
  }
  REQUIRE(compared >= 50);
}

TEST_CASE("the eigenvalue-maximum formula survives singular denominators") {
  // p = 2, q = -1 makes the i = 0 denominator exactly zero; the fallback path
  // must still reproduce the true norm (window (1,3,5,7), all nonnegative).
  const double arithmetic =
      std::get<double>(horacirc::evaluate_published_formula(FormulaId::KocerMax, {1, 3, 2, -1}, 4));
  CHECK_THAT(arithmetic, Catch::Matchers::WithinAbs(16.0, 1e-9));
  // p + q = 1 also zeroes the i = 0 denominator.
  const double unit_sum =
      std::get<double>(horacirc::evaluate_published_formula(FormulaId::KocerMax, {2, 3, 0, 1}, 4));
  CHECK_THAT(unit_sum, Catch::Matchers::WithinAbs(10.0, 1e-9));
}

TEST_CASE("formula applicability predicates gate the fixed sequences") {
  CHECK(horacirc::formula_describes_input(FormulaId::IpekFib, {0, 1, 1, 1}));
  CHECK_FALSE(horacirc::formula_describes_input(FormulaId::IpekFib, {0, 1, 2, 1}));
  CHECK(horacirc::formula_describes_input(FormulaId::IpekLucas, {2, 1, 1, 1}));
  CHECK_FALSE(horacirc::formula_describes_input(FormulaId::IpekLucas, {2, 1, 2, 1}));
  CHECK(horacirc::formula_preconditions_hold(FormulaId::IpekFib, {9, 9, 9, 9}));
  CHECK(horacirc::formula_preconditions_hold(FormulaId::KocerMax, {1, -1, 1, 1}));
  CHECK_FALSE(horacirc::formula_preconditions_hold(FormulaId::LiuGeneral, {0, 1, 2, -1}));
  CHECK(horacirc::formula_preconditions_hold(FormulaId::LiuPq1, {0, 1, 2, -1}) == false);
  CHECK(horacirc::formula_preconditions_hold(FormulaId::LiuPq1, {0, 1, 0, 1}));
}

TEST_CASE("norm certificates are stable under negation") {
  std::mt19937_64 rng(241);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<long long> entry(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rat> x;
    std::vector<Rat> negated;
    const std::size_t n = len(rng);
    bool any_positive = false;
    for (std::size_t i = 0; i < n; ++i) {
      x.emplace_back(entry(rng));
      if (x.back() > 0) any_positive = true;
      negated.push_back(-x.back());
    }
    if (!any_positive) continue;  // all-nonpositive inputs negate into the nonnegative route
    const NormResult a = horacirc::norm_exact(x);
    const NormResult b = horacirc::norm_exact(negated);
    REQUIRE(a.certificate.correlations == b.certificate.correlations);
    if (a.value_exact && b.value_exact) {
      REQUIRE(*a.value_exact == *b.value_exact);
    } else if (!a.value_exact && !b.value_exact) {
      REQUIRE_THAT(a.value_approx->value,
                   Catch::Matchers::WithinAbs(b.value_approx->value, 1e-9));
    }
  }
}
