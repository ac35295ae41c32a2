#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bclab/probability.hpp"
#include "bclab/search.hpp"

namespace bclab {

struct ExperimentConfig {
  int n = 50;
  double p = 0.5;
  int trials = 100;
  std::uint64_t seed = 1;
  int workers = 1;
  SearchBudget budget;
  double threshold = 10.0;
};

/// Throws std::invalid_argument unless trials >= 1, workers >= 1 and 0 <= p <= 1.
void validate_config(const ExperimentConfig& config);

/// Joint outcome of X > 0 (alpha >= k0) and Y > 0 (beta >= k0 + 2).
enum class Event { kE11, kE10, kE01, kE00 };
std::string to_string(Event e);
Event classify_event(int alpha, int beta, int k0);

struct Proportion {
  int successes = 0;
  int trials = 0;
  double estimate = 0;
  double lower = 0;  // Wilson score interval, 95%
  double upper = 0;
};

Proportion wilson_interval(int successes, int trials);

struct AlphaBetaRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int alpha = 0;
  int beta = 0;
  Event event = Event::kE00;
};

struct AlphaBetaResult {
  ExperimentConfig config;
  int k0 = 0;
  double lambda = 0;  // f(k0)
  double mu = 0;      // g(k0)
  EventProbs predicted;
  std::vector<AlphaBetaRow> rows;
  /// Indexed by Event: E11, E10, E01, E00.
  std::array<Proportion, 4> events;
  double tv_distance = 0;
  Proportion alpha_two_point;  // alpha in {k0-1, k0}
  Proportion beta_two_point;   // beta in {k0+1, k0+2}
  Proportion joint_two_point;
  /// Set when a trial exhausted its budget; rows then hold the trials before it.
  bool partial = false;
  std::string partial_reason;
};

inline constexpr int kMaxDenseOrder = 120;

/// Exact alpha and beta on `trials` samples of G(n, 1/2) (config.p is ignored); trial t uses
/// derive_trial_seed(seed, t). Requires 2 <= n <= kMaxDenseOrder.
AlphaBetaResult mc_alpha_beta(const ExperimentConfig& config);

struct SparseRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int edges = 0;
  bool structural = false;
  int gamma = 0;
  int blocks = 0;         // size of the constructed decomposition
  bool valid = false;     // decomposition passed validate_decomposition
  int tau = -1;           // exact tau when n <= kSparseExactOrder, else -1
};

inline constexpr int kSparseExactOrder = 10;

struct SparseResult {
  ExperimentConfig config;
  std::vector<SparseRow> rows;
  Proportion structural;
  double mean_gamma = 0;
  /// log(np)/p with the natural logarithm, and mean_gamma divided by it.
  double log_np_over_p = 0;
  double gamma_ratio = 0;
  int exact_checked = 0;     // structural samples with an exact tau
  int exact_agreements = 0;  // ... where n - gamma == tau
  bool all_valid = true;
  bool partial = false;
  std::string partial_reason;
};

/// Samples G(n, p) with p <= n^{-7/8} (std::domain_error otherwise), computes gamma_max and the
/// matching decomposition, and on n <= kSparseExactOrder compares against exact_tau.
SparseResult mc_sparse(const ExperimentConfig& config);

}  // namespace bclab
