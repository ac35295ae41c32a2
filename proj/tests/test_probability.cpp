#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"

#include "bclab/probability.hpp"

using namespace bclab;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

cpp_int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

cpp_rational pow2(long e) {
  const cpp_int p = cpp_int(1) << static_cast<unsigned>(std::abs(e));
  return e >= 0 ? cpp_rational(p) : cpp_rational(1, p);
}

long c2(long x) { return x * (x - 1) / 2; }

double exact_log2(const cpp_rational& q) {
  const Big num(numerator(q)), den(denominator(q));
  return static_cast<double>(boost::multiprecision::log2(num) - boost::multiprecision::log2(den));
}

cpp_rational exact_f(int n, int k) { return binom(n, k) * pow2(-c2(k)); }
cpp_rational exact_g(int n, int k) { return binom(n, k + 2) * ((cpp_int(1) << (k + 1)) - 1) * pow2(-c2(k + 2)); }

cpp_rational exact_fi(int n, int k, int i) {
  return binom(n, k) * binom(k, i) * binom(n - k, k - i) * pow2(-2 * c2(k) + c2(i));
}
cpp_rational exact_gi(int n, int k, int i) {
  return exact_g(n, k) * binom(k + 2, i) * binom(n - k - 2, k + 2 - i) * pow2(k + 2 - i) * pow2(-c2(k + 2) + c2(i));
}
cpp_rational exact_hi(int n, int k, int i) {
  return binom(n, k) * binom(k, i) * binom(n - k, k + 2 - i) * ((cpp_int(1) << (k + 2 - i)) - 1) *
         pow2(-c2(k) - c2(k + 2) + c2(i));
}

}  // namespace

TEST_CASE("log2 binomial") {
  CHECK(log2_binomial(10, 0) == 0.0);
  CHECK(log2_binomial(10, 3) == doctest::Approx(std::log2(120.0)).epsilon(1e-14));
  CHECK(log2_binomial(100000, 50000) == doctest::Approx(exact_log2(binom(100000, 50000))).epsilon(1e-12));
  CHECK_THROWS_AS(log2_binomial(5, 6), std::out_of_range);
  CHECK_THROWS_AS(log2_binomial(5, -1), std::out_of_range);
}

TEST_CASE("log2 f trivial values and recurrence") {
  for (std::int64_t n : {10, 1000, 1000000}) {
    CHECK(log2_f(n, 1) == doctest::Approx(std::log2(double(n))).epsilon(1e-14));
    CHECK(log2_f(n, 2) == doctest::Approx(std::log2(n * (n - 1) / 4.0)).epsilon(1e-14));
  }
  const std::int64_t n = 1000000;
  for (int k = 0; k <= 60; ++k) {
    const double lhs = log2_f(n, k + 1) - log2_f(n, k);
    const double rhs = std::log2(double(n - k) / (k + 1)) - k;
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
  CHECK_THROWS_AS(log2_f(5, 6), std::out_of_range);
  CHECK(std::isfinite(log2_f(1000000000, 60)));
}

TEST_CASE("g relates to f by the closed-form ratio") {
  for (std::int64_t n : {1000, 10000, 1000000}) {
    const int k = k0_of_n(n);
    for (int kk : {k - 1, k, k + 1}) {
      const double rhs = log2_f(n, kk) + std::log2(double(n - kk) * (n - kk - 1) / ((kk + 2.0) * (kk + 1))) +
                         log2_pow2_minus_one(kk + 1) - (2 * kk + 1);
      CHECK(std::abs(log2_g(n, kk) - rhs) <= 1e-9);
    }
  }
  CHECK(log2_g(6, 1) == doctest::Approx(std::log2(7.5)).epsilon(1e-14));
  CHECK_THROWS_AS(log2_g(5, 4), std::out_of_range);
}

TEST_CASE("k0 values") {
  CHECK(k0_of_n(2) == 1);
  CHECK(k0_of_n(10) == 4);
  CHECK(k0_of_n(1000) == 15);
  CHECK(k0_of_n(1000000) == 33);
  CHECK_THROWS_AS(k0_of_n(1), std::out_of_range);
  int prev = k0_of_n(100);
  for (int n = 101; n <= 2000; ++n) {
    const int k = k0_of_n(n);
    CHECK(k >= prev);
    prev = k;
  }
}

TEST_CASE("k0 brackets the threshold and f(k0) stays in [1, n]") {
  for (double e = 1.0; e <= 6.0 + 1e-9; e += 0.05) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    const int k = k0_of_n(n);
    CHECK(log2_f(n, k) >= 0.0);
    CHECK(log2_f(n, k + 1) < 0.0);
    CHECK(log2_f(n, k) <= std::log2(double(n)));
  }
  for (std::int64_t n = 2; n <= 50; ++n) {
    const int k = k0_of_n(n);
    CHECK(exact_f(int(n), k) >= 1);
    CHECK(exact_f(int(n), k + 1) < 1);
  }
}

TEST_CASE("successive ratio near k0") {
  for (std::int64_t n : {10000, 100000, 1000000, 10000000, 100000000}) {
    const int k = k0_of_n(n);
    CHECK(log2_f(n, k + 1) - log2_f(n, k) <= -0.5 * std::log2(double(n)));
  }
}

TEST_CASE("log-space values agree with exact rationals up to n = 50") {
  for (int n = 2; n <= 50; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(std::abs(log2_f(n, k) - exact_log2(exact_f(n, k))) <= 1e-9);
      if (k + 2 <= n) CHECK(std::abs(log2_g(n, k) - exact_log2(exact_g(n, k))) <= 1e-9);
    }
  for (int n : {20, 35, 50})
    for (int k = 3; 2 * k + 2 <= n && k <= 12; ++k) {
      for (int i = 2; i <= k - 1; ++i)
        CHECK(std::abs(log2_moment_f(n, k, i) - exact_log2(exact_fi(n, k, i))) <= 1e-9);
      for (int i = 2; i <= k + 1; ++i)
        CHECK(std::abs(log2_moment_g(n, k, i) - exact_log2(exact_gi(n, k, i))) <= 1e-9);
      for (int i = 2; i <= k; ++i)
        CHECK(std::abs(log2_moment_h(n, k, i) - exact_log2(exact_hi(n, k, i))) <= 1e-9);
    }
  // Pairs that cannot fit in n vertices contribute nothing.
  CHECK(log2_moment_f(12, 8, 2) == -std::numeric_limits<double>::infinity());
  CHECK(log2_moment_g(12, 8, 2) == -std::numeric_limits<double>::infinity());
  CHECK(log2_moment_h(12, 8, 2) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("moment terms at n = 40, k = 8") {
  const int n = 40, k = 8;
  const cpp_rational fi = binom(n, k) * k * (n - k) * pow2(-2 * c2(k) + c2(k - 1));
  CHECK(std::abs(log2_moment_f(n, k, k - 1) - exact_log2(fi)) <= 1e-9);
  CHECK(std::abs(log2_moment_g(n, k, k + 1) - exact_log2(exact_gi(n, k, k + 1))) <= 1e-9);
  const cpp_rational h3 = binom(n, k) * binom(k, 3) * binom(n - k, k - 1) * ((cpp_int(1) << (k - 1)) - 1) *
                          pow2(-c2(k) - c2(k + 2) + c2(3));
  CHECK(std::abs(log2_moment_h(n, k, 3) - exact_log2(h3)) <= 1e-9);
  CHECK_THROWS_AS(log2_moment_f(n, k, 1), std::out_of_range);
  CHECK_THROWS_AS(log2_moment_f(n, k, k), std::out_of_range);
  CHECK_THROWS_AS(log2_moment_g(n, k, k + 2), std::out_of_range);
  CHECK_THROWS_AS(log2_moment_h(n, k, k + 1), std::out_of_range);
}

TEST_CASE("regime classifier rule") {
  CHECK(classify_regime(std::log2(50.0), std::log2(1e-3), 10) == Regime::kI);
  CHECK(classify_regime(std::log2(2.5), std::log2(1e-3), 10) == Regime::kII);
  CHECK(classify_regime(std::log2(500.0), std::log2(0.5), 10) == Regime::kIII);
  CHECK_THROWS_AS(classify_regime(0, -1, 1.0), std::invalid_argument);
}

TEST_CASE("regime reports") {
  const auto r = regime_classify(1000000);
  CHECK(r.k0 == 33);
  CHECK(r.regime == Regime::kI);
  CHECK(r.lambda == doctest::Approx(std::exp2(log2_f(1000000, 33))));
  CHECK(r.mu == doctest::Approx(std::exp2(log2_g(1000000, 33))));
  for (std::int64_t n = 10; n <= 5000; n += 7) {
    const auto rep = regime_classify(n);
    CHECK(rep.log2_f_k0 >= 0.0);
    CHECK(rep.log2_f_k0_plus_1 < 0.0);
    CHECK(rep.k_event == (rep.regime == Regime::kIII ? rep.k0 + 1 : rep.k0));
    const auto& e = rep.events;
    CHECK(std::abs(e.p00 + e.p01 + e.p10 + e.p11 - 1.0) <= 1e-12);
  }
}

TEST_CASE("event probabilities") {
  const auto zero = event_probabilities(0, 0);
  CHECK(zero.p00 == 1.0);
  CHECK(zero.p01 == 0.0);
  CHECK(zero.p10 == 0.0);
  CHECK(zero.p11 == 0.0);
  const double ln2 = std::log(2.0);
  const auto half = event_probabilities(ln2, ln2);
  for (double p : {half.p00, half.p01, half.p10, half.p11}) CHECK(std::abs(p - 0.25) <= 1e-12);
  CHECK(std::abs(event_probabilities(50, 50).p11 - 1.0) <= 1e-20);
  CHECK_THROWS_AS(event_probabilities(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(event_probabilities(0, std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  for (double l : {0.0, 1e-9, 0.3, 2.0, 40.0, 800.0})
    for (double m : {0.0, 1e-12, 0.7, 5.0, 900.0}) {
      const auto e = event_probabilities(l, m);
      for (double p : {e.p00, e.p01, e.p10, e.p11}) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
      CHECK(std::abs(e.p00 + e.p01 + e.p10 + e.p11 - 1.0) <= 1e-12);
    }
}

TEST_CASE("moment tables") {
  const auto f = lemma21_check(1000000);
  CHECK(f.k == 33);
  CHECK(f.kind == MomentKind::kF);
  int case1 = 0, case2 = 0;
  for (const auto& row : f.rows) {
    CHECK(row.margin == doctest::Approx(row.log2_term - row.log2_bound));
    (row.range_case == 1 ? case1 : case2)++;
  }
  CHECK(case1 == 21);  // i = 2..22
  CHECK(case2 == 11);  // j = 1..11
  CHECK(cross_term_check(1000000).rows.front().i == 2);
  CHECK(f.terms().front().first == 2);
  CHECK_THROWS_AS(lemma21_check(70), std::domain_error);
  CHECK(lemma21_check(71).k == 9);

  // Case 2 of f at this n holds with room to spare.
  for (const auto& row : f.rows)
    if (row.range_case == 2) CHECK(row.margin <= 0.0);
  for (const auto& row : lemma22_check(1000000).rows)
    if (row.range_case == 2) CHECK(row.margin <= 0.0);
  for (const auto& row : cross_term_check(1000000).rows)
    if (row.range_case == 2) CHECK(row.margin <= 0.0);
}

TEST_CASE("margins at i = 2 decrease with n") {
  double prev = std::numeric_limits<double>::infinity();
  for (std::int64_t n : {10000, 100000, 1000000, 10000000, 100000000}) {
    const auto t = lemma21_check(n);
    REQUIRE(t.rows.front().i == 2);
    CHECK(t.rows.front().margin < prev);
    prev = t.rows.front().margin;
  }
}

TEST_CASE("entropy") {
  CHECK(entropy(0.5) == 1.0);
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(0.25) == doctest::Approx(0.5 + 0.75 * std::log2(4.0 / 3.0)).epsilon(1e-15));
  CHECK(entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK_THROWS_AS(entropy(1.5), std::out_of_range);
}

TEST_CASE("lemma 3.1 divisor sums") {
  const auto four = lemma31_sum(100, 0.5, 4);
  const cpp_rational direct = binom(100, 2) * binom(98, 2) * pow2(-4);
  CHECK(std::abs(four.log2_sum - exact_log2(direct)) <= 1e-9);
  REQUIRE(four.terms.size() == 1);
  CHECK(four.terms[0].first == 2);

  const auto prime = lemma31_sum(1000, 0.1, 13);
  CHECK(prime.terms.empty());
  CHECK(std::isinf(prime.log2_sum));
  CHECK(prime.log2_sum < 0);

  const auto surrogate = lemma31_sum(1000, 0.1, 13, OddCase::kSurrogate);
  CHECK(surrogate.used_surrogate);
  CHECK(surrogate.log2_sum == doctest::Approx(log2_binomial(1000, 7) + 14 * std::log2(0.1)));

  const auto twelve = lemma31_sum(100000, 0.001, 12);
  double d2 = 0, d3 = 0;
  for (auto [d, v] : twelve.terms) {
    if (d == 2) d2 = v;
    if (d == 3) d3 = v;
  }
  CHECK(d2 - d3 > 0.5 * std::log2(100000.0));
  CHECK(twelve.in_range);
  CHECK_THROWS_AS(lemma31_sum(10, 0.5, 11), std::out_of_range);
}

TEST_CASE("lemma 3.1 scan") {
  const auto c = lemma31_check(100000, 0.01);
  CHECK(c.rows.size() == (250 - 64) / 2 + 1);
  for (const auto& row : c.rows) {
    CHECK(row.m % 2 == 0);
    CHECK(row.b >= c.b_empirical);
  }
  CHECK(c.dominance_ok);
  CHECK_THROWS_AS(lemma31_check(100000, 0.2), std::domain_error);
  CHECK_THROWS_AS(lemma31_check(1000, 0.01), std::domain_error);

  // b_empirical grows as p falls over the range where n p >= 10 log2 n.
  const double b05 = lemma31_check(100000, 0.05).b_empirical;
  const double b01 = lemma31_check(100000, 0.01).b_empirical;
  const double b005 = lemma31_check(100000, 0.005).b_empirical;
  CHECK(b05 < b01);
  CHECK(b01 < b005);
}
