#include "bclab/report.hpp"

#include <charconv>
#include <cmath>

namespace bclab {

using json = nlohmann::ordered_json;

namespace {

json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json ids(const VertexSet& s) { return json(s.members()); }

}  // namespace

json report_json(const EventProbs& e) {
  return {{"p11", e.p11}, {"p10", e.p10}, {"p01", e.p01}, {"p00", e.p00}};
}

json report_json(const RegimeReport& r) {
  return {{"n", r.n},
          {"k0", r.k0},
          {"log2_f_k0", real(r.log2_f_k0)},
          {"log2_f_k0_plus_1", real(r.log2_f_k0_plus_1)},
          {"threshold", r.threshold},
          {"regime", to_string(r.regime)},
          {"k_event", r.k_event},
          {"lambda", real(r.lambda)},
          {"mu", real(r.mu)},
          {"event_probs", report_json(r.events)}};
}

json report_json(const MomentTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"i", row.i},
                    {"case", row.range_case},
                    {"j", row.j},
                    {"log2_term", real(row.log2_term)},
                    {"log2_bound", real(row.log2_bound)},
                    {"margin", real(row.margin)}});
  return {{"term", to_string(t.kind)},
          {"n", t.n},
          {"k", t.k},
          {"max_margin", real(t.max_margin())},
          {"rows", rows}};
}

json report_json(const Lemma31Check& c) {
  json rows = json::array();
  for (const auto& row : c.rows)
    rows.push_back({{"m", row.m},
                    {"log2_sum", real(row.log2_sum)},
                    {"b", real(row.b)},
                    {"log2_dominance", row.log2_dominance ? real(*row.log2_dominance) : json(nullptr)}});
  return {{"n", c.n},
          {"p", c.p},
          {"b_empirical", real(c.b_empirical)},
          {"dominance_ok", c.dominance_ok},
          {"rows", rows}};
}

json report_json(const Proportion& p) {
  return {{"count", p.successes}, {"trials", p.trials}, {"estimate", p.estimate},
          {"wilson_lower", p.lower}, {"wilson_upper", p.upper}};
}

json report_json(const AlphaBetaResult& r) {
  json empirical = json::object();
  for (int e = 0; e < 4; ++e) empirical[to_string(static_cast<Event>(e))] = report_json(r.events[e]);
  return {{"n", r.config.n},
          {"trials", r.config.trials},
          {"completed", r.rows.size()},
          {"seed", r.config.seed},
          {"k0", r.k0},
          {"lambda", r.lambda},
          {"mu", r.mu},
          {"predicted", {{"E11", r.predicted.p11}, {"E10", r.predicted.p10}, {"E01", r.predicted.p01}, {"E00", r.predicted.p00}}},
          {"empirical", empirical},
          {"tv_distance", r.tv_distance},
          {"alpha_in_k0_minus_1_or_k0", report_json(r.alpha_two_point)},
          {"beta_in_k0_plus_1_or_k0_plus_2", report_json(r.beta_two_point)},
          {"both", report_json(r.joint_two_point)},
          {"partial", r.partial},
          {"partial_reason", r.partial_reason}};
}

json report_json(const SparseResult& r) {
  return {{"n", r.config.n},
          {"p", r.config.p},
          {"trials", r.config.trials},
          {"completed", r.rows.size()},
          {"seed", r.config.seed},
          {"structural", report_json(r.structural)},
          {"mean_gamma", r.mean_gamma},
          {"log_np_over_p", real(r.log_np_over_p)},
          {"gamma_ratio", real(r.gamma_ratio)},
          {"exact_checked", r.exact_checked},
          {"exact_agreements", r.exact_agreements},
          {"all_decompositions_valid", r.all_valid},
          {"partial", r.partial},
          {"partial_reason", r.partial_reason}};
}

json report_json(const BipartiteBlock& b) { return {{"a", ids(b.a)}, {"b", ids(b.b)}}; }

json report_json(const Decomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(report_json(b));
  return blocks;
}

json report_json(const SparseCover& c) {
  return {{"isolated", ids(c.isolated)}, {"c4", c.cycles}, {"gamma", c.gamma}};
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string moment_table_csv(const MomentTable& t) {
  std::string out = "i,log2_term,log2_bound,margin\n";
  for (const auto& row : t.rows)
    out += std::to_string(row.i) + ',' + format_real(row.log2_term) + ',' + format_real(row.log2_bound) + ',' +
           format_real(row.margin) + '\n';
  return out;
}

std::string lemma31_csv(const Lemma31Check& c) {
  std::string out = "m,log2_sum,b,log2_dominance\n";
  for (const auto& row : c.rows)
    out += std::to_string(row.m) + ',' + format_real(row.log2_sum) + ',' + format_real(row.b) + ',' +
           (row.log2_dominance ? format_real(*row.log2_dominance) : "") + '\n';
  return out;
}

std::string alpha_beta_csv(const AlphaBetaResult& r) {
  std::string out = "trial,seed,alpha,beta,event\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.trial) + ',' + std::to_string(row.seed) + ',' + std::to_string(row.alpha) + ',' +
           std::to_string(row.beta) + ',' + to_string(row.event) + '\n';
  return out;
}

std::string sparse_csv(const SparseResult& r) {
  std::string out = "trial,seed,edges,structural,gamma,blocks,valid,tau\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.trial) + ',' + std::to_string(row.seed) + ',' + std::to_string(row.edges) + ',' +
           (row.structural ? "1" : "0") + ',' + std::to_string(row.gamma) + ',' + std::to_string(row.blocks) + ',' +
           (row.valid ? "1" : "0") + ',' + (row.tau >= 0 ? std::to_string(row.tau) : "") + '\n';
  return out;
}

}  // namespace bclab
