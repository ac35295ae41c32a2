#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bclab {

// Everything here works in base-2 logarithms: C(n,k) 2^{-C(k,2)} leaves double range long
// before n reaches the sizes of interest.

/// log2 C(n, k); exact-term summation for min(k, n-k) <= 4096, log-gamma beyond.
double log2_binomial(std::int64_t n, std::int64_t k);

/// log2(2^e - 1) for e >= 1.
double log2_pow2_minus_one(std::int64_t e);

/// Expected number of independent k-sets in G(n, 1/2): f(k) = C(n,k) 2^{-C(k,2)}.
double log2_f(std::int64_t n, std::int64_t k);

/// Expected number of induced complete bipartite (k+2)-sets in G(n, 1/2):
/// g(k) = C(n,k+2) (2^{k+1}-1) 2^{-C(k+2,2)}.
double log2_g(std::int64_t n, std::int64_t k);

/// Largest k with f(k) >= 1. Requires n >= 2.
int k0_of_n(std::int64_t n);

struct EventProbs {
  double p11 = 0;  // X > 0, Y > 0
  double p10 = 0;  // X > 0, Y = 0
  double p01 = 0;  // X = 0, Y > 0
  double p00 = 1;  // X = 0, Y = 0
};

/// Independent-Poisson prediction: P(X=0)=e^-lambda, P(Y=0)=e^-mu, P(X=Y=0)=e^-(lambda+mu).
EventProbs event_probabilities(double lambda, double mu);

enum class Regime { kI, kII, kIII };
std::string to_string(Regime r);

/// II if f(k0) <= T; else III if f(k0+1) >= 1/T; else I.
Regime classify_regime(double log2_f_k0, double log2_f_k0_plus_1, double threshold);

struct RegimeReport {
  std::int64_t n = 0;
  int k0 = 0;
  double log2_f_k0 = 0;
  double log2_f_k0_plus_1 = 0;
  double threshold = 10;
  Regime regime = Regime::kI;
  /// k at which lambda and mu are taken: k0, or k0+1 in regime III.
  int k_event = 0;
  double lambda = 0;
  double mu = 0;
  EventProbs events;
};

RegimeReport regime_classify(std::int64_t n, double threshold = 10.0);

/// log2 f_i: ordered pairs of k-sets meeting in i vertices, 2 <= i <= k-1.
double log2_moment_f(std::int64_t n, std::int64_t k, std::int64_t i);
/// log2 g_i: ordered pairs of (k+2)-sets meeting in i vertices, 2 <= i <= k+1.
double log2_moment_g(std::int64_t n, std::int64_t k, std::int64_t i);
/// log2 h_i: pairs (K, B) with |K cap B| = i, 2 <= i <= k.
double log2_moment_h(std::int64_t n, std::int64_t k, std::int64_t i);

enum class MomentKind { kF, kG, kH };
std::string to_string(MomentKind kind);

struct MomentRow {
  int i = 0;
  /// 1: bound of the form E^2 n^{-0.3 i}; 2: bound E n^{-0.3 j} (E n^{-0.3 (j+2)} for h).
  int range_case = 1;
  int j = 0;
  double log2_term = 0;
  double log2_bound = 0;
  double margin = 0;  // log2_term - log2_bound; <= 0 means the inequality holds
};

struct MomentTable {
  MomentKind kind = MomentKind::kF;
  std::int64_t n = 0;
  int k = 0;
  std::vector<MomentRow> rows;

  std::vector<std::pair<int, double>> terms() const;
  double max_margin() const;
};

/// Margins of the second-moment bounds at k = k0(n). Require k0(n) >= 9.
MomentTable lemma21_check(std::int64_t n);
MomentTable lemma22_check(std::int64_t n);
MomentTable cross_term_check(std::int64_t n);
/// Same tables at an explicit k (3 <= k, k + 2 <= n).
MomentTable moment_table(MomentKind kind, std::int64_t n, int k);

/// Binary entropy in bits; H(0) = H(1) = 0.
double entropy(double x);

enum class OddCase { kExact, kSurrogate };

struct Lemma31Sum {
  std::int64_t m = 0;
  /// -infinity for an empty divisor sum.
  double log2_sum = 0;
  /// (d, log2 of the d-th summand) for divisors 2 <= d <= sqrt(m).
  std::vector<std::pair<int, double>> terms;
  bool in_range = true;  // pn/16 <= m <= pn/4
  bool used_surrogate = false;

  /// log2 of the d=2 summand over the largest other summand; +infinity if d=2 is alone,
  /// nullopt if d=2 is not a divisor in range.
  std::optional<double> log2_d2_dominance() const;
};

/// log2 sum_{d | m, 2 <= d <= sqrt(m)} C(n,d) C(n-d, m/d) p^m. With OddCase::kSurrogate an odd
/// m is replaced by log2 C(n, (m+1)/2) p^{m+1}.
Lemma31Sum lemma31_sum(std::int64_t n, double p, std::int64_t m, OddCase odd = OddCase::kExact);

struct Lemma31Row {
  std::int64_t m = 0;
  double log2_sum = 0;
  double b = 0;
  std::optional<double> log2_dominance;
};

struct Lemma31Check {
  std::int64_t n = 0;
  double p = 0;
  double b_empirical = 0;  // min over rows of b(m)
  /// Every row with m <= sqrt(n) has d=2 dominance >= 0.4 log2 n.
  bool dominance_ok = true;
  std::vector<Lemma31Row> rows;
};

/// Scans even m in [pn/16, pn/4]: b(m) = -log2(sum)/(m log2(1/p)). Throws std::domain_error
/// unless 0 < p <= 0.1 and n p >= c log2 n.
Lemma31Check lemma31_check(std::int64_t n, double p, double c = 10.0);

}  // namespace bclab
