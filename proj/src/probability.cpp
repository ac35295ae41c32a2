#include "bclab/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bclab {
namespace {

constexpr double kLn2 = 0.69314718055994530942;

// log2 C(n, k), or -infinity when C(n, k) = 0 because k > n.
double log2_binomial_or_zero(std::int64_t n, std::int64_t k) {
  return k > n ? -std::numeric_limits<double>::infinity() : log2_binomial(n, k);
}

double choose2(std::int64_t x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); }

void require(bool ok, const char* message) {
  if (!ok) throw std::out_of_range(message);
}

}  // namespace

double log2_binomial(std::int64_t n, std::int64_t k) {
  require(n >= 0 && k >= 0 && k <= n, "log2_binomial: need 0 <= k <= n");
  const std::int64_t r = std::min(k, n - k);
  if (r <= 4096) {
    double sum = 0.0;
    for (std::int64_t i = 1; i <= r; ++i)
      sum += std::log2(static_cast<double>(n - r + i)) - std::log2(static_cast<double>(i));
    return sum;
  }
  const auto nd = static_cast<double>(n);
  const auto rd = static_cast<double>(r);
  return (std::lgamma(nd + 1) - std::lgamma(rd + 1) - std::lgamma(nd - rd + 1)) / kLn2;
}

double log2_pow2_minus_one(std::int64_t e) {
  require(e >= 1, "log2_pow2_minus_one: need e >= 1");
  return static_cast<double>(e) + std::log1p(-std::exp2(-static_cast<double>(e))) / kLn2;
}

double log2_f(std::int64_t n, std::int64_t k) {
  require(k >= 0 && k <= n, "log2_f: need 0 <= k <= n");
  return log2_binomial(n, k) - choose2(k);
}

double log2_g(std::int64_t n, std::int64_t k) {
  require(k >= 0 && k + 2 <= n, "log2_g: need 0 <= k and k + 2 <= n");
  return log2_binomial(n, k + 2) + log2_pow2_minus_one(k + 1) - choose2(k + 2);
}

int k0_of_n(std::int64_t n) {
  if (n < 2) throw std::out_of_range("k0_of_n: need n >= 2");
  // f(1) = n >= 1 and f is log-concave in k, so {k : f(k) >= 1} is an interval from 0.
  std::int64_t k = 1;
  while (k + 1 <= n && log2_f(n, k + 1) >= 0.0) ++k;
  return static_cast<int>(k);
}

EventProbs event_probabilities(double lambda, double mu) {
  if (!(lambda >= 0.0) || !(mu >= 0.0) || std::isinf(lambda) || std::isinf(mu))
    throw std::invalid_argument("event_probabilities: lambda and mu must be finite and non-negative");
  const double miss_x = -std::expm1(-lambda);  // P(X > 0)
  const double miss_y = -std::expm1(-mu);      // P(Y > 0)
  EventProbs e;
  e.p00 = std::exp(-lambda - mu);
  e.p10 = std::exp(-mu) * miss_x;
  e.p01 = std::exp(-lambda) * miss_y;
  e.p11 = miss_x * miss_y;
  return e;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::kI: return "I";
    case Regime::kII: return "II";
    case Regime::kIII: return "III";
  }
  return "?";
}

Regime classify_regime(double log2_f_k0, double log2_f_k0_plus_1, double threshold) {
  if (!(threshold > 1.0)) throw std::invalid_argument("classify_regime: threshold must exceed 1");
  const double log2_t = std::log2(threshold);
  if (log2_f_k0 <= log2_t) return Regime::kII;
  if (log2_f_k0_plus_1 >= -log2_t) return Regime::kIII;
  return Regime::kI;
}

RegimeReport regime_classify(std::int64_t n, double threshold) {
  RegimeReport rep;
  rep.n = n;
  rep.threshold = threshold;
  rep.k0 = k0_of_n(n);
  rep.log2_f_k0 = log2_f(n, rep.k0);
  rep.log2_f_k0_plus_1 = rep.k0 + 1 <= n ? log2_f(n, rep.k0 + 1) : -std::numeric_limits<double>::infinity();
  rep.regime = classify_regime(rep.log2_f_k0, rep.log2_f_k0_plus_1, threshold);
  rep.k_event = rep.regime == Regime::kIII ? rep.k0 + 1 : rep.k0;
  rep.lambda = rep.k_event <= n ? std::exp2(log2_f(n, rep.k_event)) : 0.0;
  rep.mu = rep.k_event + 2 <= n ? std::exp2(log2_g(n, rep.k_event)) : 0.0;
  rep.events = event_probabilities(rep.lambda, rep.mu);
  return rep;
}

double log2_moment_f(std::int64_t n, std::int64_t k, std::int64_t i) {
  require(i >= 2 && i <= k - 1 && k <= n, "log2_moment_f: need 2 <= i <= k-1, k <= n");
  return log2_binomial(n, k) + log2_binomial(k, i) + log2_binomial_or_zero(n - k, k - i) - 2 * choose2(k) + choose2(i);
}

double log2_moment_g(std::int64_t n, std::int64_t k, std::int64_t i) {
  require(i >= 2 && i <= k + 1 && k + 2 <= n, "log2_moment_g: need 2 <= i <= k+1, k+2 <= n");
  return log2_g(n, k) + log2_binomial(k + 2, i) + log2_binomial_or_zero(n - k - 2, k + 2 - i) +
         static_cast<double>(k + 2 - i) - choose2(k + 2) + choose2(i);
}

double log2_moment_h(std::int64_t n, std::int64_t k, std::int64_t i) {
  require(i >= 2 && i <= k && k + 2 <= n, "log2_moment_h: need 2 <= i <= k, k+2 <= n");
  return log2_binomial(n, k) + log2_binomial(k, i) + log2_binomial_or_zero(n - k, k + 2 - i) +
         log2_pow2_minus_one(k + 2 - i) - choose2(k) - choose2(k + 2) + choose2(i);
}

std::string to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::kF: return "f";
    case MomentKind::kG: return "g";
    case MomentKind::kH: return "h";
  }
  return "?";
}

std::vector<std::pair<int, double>> MomentTable::terms() const {
  std::vector<std::pair<int, double>> out;
  for (const auto& r : rows)
    if (std::none_of(out.begin(), out.end(), [&](const auto& t) { return t.first == r.i; }))
      out.emplace_back(r.i, r.log2_term);
  std::sort(out.begin(), out.end());
  return out;
}

double MomentTable::max_margin() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows) m = std::max(m, r.margin);
  return m;
}

MomentTable moment_table(MomentKind kind, std::int64_t n, int k) {
  require(k >= 3 && k + 2 <= n, "moment_table: need 3 <= k and k + 2 <= n");
  MomentTable t{kind, n, k, {}};
  const double log2_n = std::log2(static_cast<double>(n));
  // Case 1 covers i <= 2k/3 (2k/3 + 2 for g); case 2 is i = k - j (k + 2 - j for g).
  const double base = kind == MomentKind::kG ? log2_g(n, k) : log2_f(n, k);
  auto term = [&](int i) {
    switch (kind) {
      case MomentKind::kF: return log2_moment_f(n, k, i);
      case MomentKind::kG: return log2_moment_g(n, k, i);
      case MomentKind::kH: return log2_moment_h(n, k, i);
    }
    return 0.0;
  };
  auto add = [&](int i, int range_case, int j, double bound) {
    const double value = term(i);
    t.rows.push_back({i, range_case, j, value, bound, value - bound});
  };

  const int top = kind == MomentKind::kF ? k - 1 : (kind == MomentKind::kG ? k + 1 : k);
  const int case1_max = kind == MomentKind::kG ? (2 * k) / 3 + 2 : (2 * k) / 3;
  for (int i = 2; i <= std::min(case1_max, top); ++i) add(i, 1, 0, 2 * base - 0.3 * i * log2_n);

  const int j_min = kind == MomentKind::kH ? 0 : 1;
  const int shift = kind == MomentKind::kG ? k + 2 : k;
  for (int j = j_min; j <= k / 3; ++j) {
    const int i = shift - j;
    if (i < 2 || i > top) continue;
    const double exponent = kind == MomentKind::kH ? j + 2 : j;
    add(i, 2, j, base - 0.3 * exponent * log2_n);
  }
  return t;
}

namespace {
MomentTable checked_table(MomentKind kind, std::int64_t n) {
  const int k = k0_of_n(n);
  if (k < 9) throw std::domain_error("moment bound checks need k0(n) >= 9 (n >= 71)");
  return moment_table(kind, n, k);
}
}  // namespace

MomentTable lemma21_check(std::int64_t n) { return checked_table(MomentKind::kF, n); }
MomentTable lemma22_check(std::int64_t n) { return checked_table(MomentKind::kG, n); }
MomentTable cross_term_check(std::int64_t n) { return checked_table(MomentKind::kH, n); }

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::out_of_range("entropy: need 0 <= x <= 1");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

std::optional<double> Lemma31Sum::log2_d2_dominance() const {
  std::optional<double> d2;
  double other = -std::numeric_limits<double>::infinity();
  for (const auto& [d, value] : terms) {
    if (d == 2)
      d2 = value;
    else
      other = std::max(other, value);
  }
  if (!d2) return std::nullopt;
  return *d2 - other;
}

Lemma31Sum lemma31_sum(std::int64_t n, double p, std::int64_t m, OddCase odd) {
  if (!(p > 0.0 && p <= 1.0)) throw std::out_of_range("lemma31_sum: need 0 < p <= 1");
  if (m < 1 || m > n) throw std::out_of_range("lemma31_sum: need 1 <= m <= n");
  Lemma31Sum s;
  s.m = m;
  const double pn = p * static_cast<double>(n);
  s.in_range = static_cast<double>(m) >= pn / 16 && static_cast<double>(m) <= pn / 4;
  const double log2_p = std::log2(p);

  if (odd == OddCase::kSurrogate && m % 2 == 1) {
    s.used_surrogate = true;
    s.log2_sum = log2_binomial(n, (m + 1) / 2) + static_cast<double>(m + 1) * log2_p;
    return s;
  }
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0 || m / d > n - d) continue;
    s.terms.emplace_back(static_cast<int>(d),
                         log2_binomial(n, d) + log2_binomial(n - d, m / d) + static_cast<double>(m) * log2_p);
  }
  if (s.terms.empty()) {
    s.log2_sum = -std::numeric_limits<double>::infinity();
    return s;
  }
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& t : s.terms) peak = std::max(peak, t.second);
  double acc = 0.0;
  for (const auto& t : s.terms) acc += std::exp2(t.second - peak);
  s.log2_sum = peak + std::log2(acc);
  return s;
}

Lemma31Check lemma31_check(std::int64_t n, double p, double c) {
  if (!(p > 0.0 && p <= 0.1)) throw std::domain_error("lemma31_check: need 0 < p <= 0.1");
  const double log2_n = std::log2(static_cast<double>(n));
  if (static_cast<double>(n) * p < c * log2_n) throw std::domain_error("lemma31_check: need n p >= C log2 n");
  Lemma31Check out;
  out.n = n;
  out.p = p;
  out.b_empirical = std::numeric_limits<double>::infinity();
  const double pn = p * static_cast<double>(n);
  const auto lo = static_cast<std::int64_t>(std::ceil(pn / 16));
  const auto hi = static_cast<std::int64_t>(std::floor(pn / 4));
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  for (std::int64_t m = lo + (lo % 2); m <= hi; m += 2) {
    const auto sum = lemma31_sum(n, p, m);
    Lemma31Row row{m, sum.log2_sum, -sum.log2_sum / (static_cast<double>(m) * -std::log2(p)),
                   sum.log2_d2_dominance()};
    out.b_empirical = std::min(out.b_empirical, row.b);
    if (static_cast<double>(m) <= sqrt_n && row.log2_dominance && *row.log2_dominance < 0.4 * log2_n)
      out.dominance_ok = false;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace bclab
