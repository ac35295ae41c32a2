#include "bclab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bclab/builders.hpp"
#include "bclab/independence.hpp"
#include "bclab/partition.hpp"
#include "bclab/random.hpp"
#include "bclab/sparse_cover.hpp"

namespace bclab {
namespace {

struct TrialFailure {
  int trial = -1;
  std::string reason;
};

// Runs fn(t) for t = 0..trials-1 on `workers` threads. Trials are claimed in increasing order,
// so after a budget failure every trial below the first failing one has completed; the
// returned prefix is the same for any worker count.
template <typename Row, typename Fn>
std::vector<Row> run_trials(int trials, int workers, Fn fn, std::optional<TrialFailure>& failure) {
  std::vector<std::optional<Row>> slots(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::mutex failure_mutex;

  auto work = [&] {
    while (!stop.load()) {
      const int t = next.fetch_add(1);
      if (t >= trials) return;
      try {
        slots[t] = fn(t);
      } catch (const BudgetExceeded& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure || t < failure->trial) failure = TrialFailure{t, e.what()};
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::min(workers, trials); ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  const int end = failure ? failure->trial : trials;
  std::vector<Row> rows;
  for (int t = 0; t < end; ++t) rows.push_back(std::move(*slots[t]));
  return rows;
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

std::string to_string(Event e) {
  switch (e) {
    case Event::kE11: return "E11";
    case Event::kE10: return "E10";
    case Event::kE01: return "E01";
    case Event::kE00: return "E00";
  }
  return "?";
}

Event classify_event(int alpha, int beta, int k0) {
  const bool x = alpha >= k0;
  const bool y = beta >= k0 + 2;
  if (x) return y ? Event::kE11 : Event::kE10;
  return y ? Event::kE01 : Event::kE00;
}

Proportion wilson_interval(int successes, int trials) {
  Proportion p{successes, trials, 0, 0, 1};
  if (trials <= 0) return p;
  constexpr double z = 1.959963984540054;
  const double nt = trials;
  const double phat = successes / nt;
  const double denom = 1 + z * z / nt;
  const double centre = (phat + z * z / (2 * nt)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nt + z * z / (4 * nt * nt)) / denom;
  p.estimate = phat;
  p.lower = std::max(0.0, centre - half);
  p.upper = std::min(1.0, centre + half);
  return p;
}

AlphaBetaResult mc_alpha_beta(const ExperimentConfig& config) {
  validate_config(config);
  if (config.n < 2 || config.n > kMaxDenseOrder)
    throw std::invalid_argument("mc-alpha-beta: n must lie in [2, " + std::to_string(kMaxDenseOrder) + "]");
  AlphaBetaResult res;
  res.config = config;
  res.config.p = 0.5;
  res.k0 = k0_of_n(config.n);
  res.lambda = std::exp2(log2_f(config.n, res.k0));
  res.mu = res.k0 + 2 <= config.n ? std::exp2(log2_g(config.n, res.k0)) : 0.0;
  res.predicted = event_probabilities(res.lambda, res.mu);

  std::optional<TrialFailure> failure;
  res.rows = run_trials<AlphaBetaRow>(
      config.trials, config.workers,
      [&](int t) {
        const std::uint64_t seed = derive_trial_seed(config.seed, static_cast<std::uint64_t>(t));
        const Graph g = gnp_sample({config.n, 0.5, seed});
        AlphaBetaRow row{t, seed, alpha(g, config.budget).size, beta(g, config.budget).size, Event::kE00};
        row.event = classify_event(row.alpha, row.beta, res.k0);
        return row;
      },
      failure);
  if (failure) {
    res.partial = true;
    res.partial_reason = "trial " + std::to_string(failure->trial) + ": " + failure->reason;
  }

  const int done = static_cast<int>(res.rows.size());
  std::array<int, 4> counts{};
  int a2 = 0, b2 = 0, joint = 0;
  for (const auto& row : res.rows) {
    ++counts[static_cast<int>(row.event)];
    const bool a_ok = row.alpha == res.k0 - 1 || row.alpha == res.k0;
    const bool b_ok = row.beta == res.k0 + 1 || row.beta == res.k0 + 2;
    a2 += a_ok;
    b2 += b_ok;
    joint += a_ok && b_ok;
  }
  const std::array<double, 4> predicted{res.predicted.p11, res.predicted.p10, res.predicted.p01, res.predicted.p00};
  for (int e = 0; e < 4; ++e) {
    res.events[e] = wilson_interval(counts[e], done);
    res.tv_distance += 0.5 * std::abs(res.events[e].estimate - predicted[e]);
  }
  res.alpha_two_point = wilson_interval(a2, done);
  res.beta_two_point = wilson_interval(b2, done);
  res.joint_two_point = wilson_interval(joint, done);
  return res;
}

SparseResult mc_sparse(const ExperimentConfig& config) {
  validate_config(config);
  if (config.n < 1 || config.n > kMaxPartitionOrder)
    throw std::invalid_argument("mc-sparse: n must lie in [1, " + std::to_string(kMaxPartitionOrder) + "]");
  if (config.p > std::pow(static_cast<double>(config.n), -7.0 / 8.0))
    throw std::domain_error("mc-sparse: requires p <= n^(-7/8)");
  SparseResult res;
  res.config = config;

  std::optional<TrialFailure> failure;
  res.rows = run_trials<SparseRow>(
      config.trials, config.workers,
      [&](int t) {
        const std::uint64_t seed = derive_trial_seed(config.seed, static_cast<std::uint64_t>(t));
        const Graph g = gnp_sample({config.n, config.p, seed});
        SparseRow row{t, seed, static_cast<int>(g.edge_count()), nontrivial_bicliques_are_disjoint_c4s(g)};
        const GammaResult gm = gamma_max(g, config.budget);
        const Decomposition d = sparse_cover_decomposition(g, gm.cover);
        row.gamma = gm.gamma;
        row.blocks = d.size();
        row.valid = validate_decomposition(g, d).ok && row.blocks == config.n - gm.gamma;
        if (config.n <= kSparseExactOrder) row.tau = exact_tau(g, config.budget).tau;
        return row;
      },
      failure);
  if (failure) {
    res.partial = true;
    res.partial_reason = "trial " + std::to_string(failure->trial) + ": " + failure->reason;
  }

  int structural = 0;
  double gamma_sum = 0;
  for (const auto& row : res.rows) {
    structural += row.structural;
    gamma_sum += row.gamma;
    res.all_valid = res.all_valid && row.valid;
    if (row.structural && row.tau >= 0) {
      ++res.exact_checked;
      res.exact_agreements += config.n - row.gamma == row.tau;
    }
  }
  const int done = static_cast<int>(res.rows.size());
  res.structural = wilson_interval(structural, done);
  res.mean_gamma = done > 0 ? gamma_sum / done : 0.0;
  if (config.p > 0) {
    res.log_np_over_p = std::log(config.n * config.p) / config.p;
    res.gamma_ratio = res.log_np_over_p != 0 ? res.mean_gamma / res.log_np_over_p : 0.0;
  }
  return res;
}

}  // namespace bclab
