#pragma once

#include <string>

#include "json.hpp"

#include "bclab/decomposition.hpp"
#include "bclab/experiment.hpp"
#include "bclab/probability.hpp"

namespace bclab {

// JSON documents for the CLI. Non-finite numbers (e.g. an empty log-sum) become null.
nlohmann::ordered_json report_json(const EventProbs& e);
nlohmann::ordered_json report_json(const RegimeReport& r);
nlohmann::ordered_json report_json(const MomentTable& t);
nlohmann::ordered_json report_json(const Lemma31Check& c);
nlohmann::ordered_json report_json(const Proportion& p);
nlohmann::ordered_json report_json(const AlphaBetaResult& r);
nlohmann::ordered_json report_json(const SparseResult& r);
nlohmann::ordered_json report_json(const BipartiteBlock& b);
nlohmann::ordered_json report_json(const Decomposition& d);
nlohmann::ordered_json report_json(const SparseCover& c);

/// Shortest round-trip decimal form; "inf", "-inf" or "nan" for non-finite values.
std::string format_real(double x);

// CSV tables with a header row and '\n' line ends; output depends only on the values.
std::string moment_table_csv(const MomentTable& t);        // i,log2_term,log2_bound,margin
std::string lemma31_csv(const Lemma31Check& c);            // m,log2_sum,b,log2_dominance
std::string alpha_beta_csv(const AlphaBetaResult& r);      // trial,seed,alpha,beta,event
std::string sparse_csv(const SparseResult& r);             // trial,seed,edges,structural,gamma,blocks,valid,tau

}  // namespace bclab
