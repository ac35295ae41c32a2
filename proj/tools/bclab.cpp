// bclab: command-line front end for the biclique-partition library.
// JSON goes to stdout (sample prints an edge list). Exit codes: 0 ok, 1 bad input or domain
// error, 2 search budget exhausted.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bclab/builders.hpp"
#include "bclab/experiment.hpp"
#include "bclab/graph_io.hpp"
#include "bclab/independence.hpp"
#include "bclab/partition.hpp"
#include "bclab/probability.hpp"
#include "bclab/random.hpp"
#include "bclab/report.hpp"
#include "bclab/sparse_cover.hpp"

using json = nlohmann::ordered_json;
using namespace bclab;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitBudget = 2;

struct Options {
  std::string graph_path;
  std::string json_path;
  std::string csv_path;
  std::string cert_path;
  std::uint64_t budget = 0;  // 0 = unlimited
  ExperimentConfig config;
  double lambda = 0;
  double mu = 0;
  double lemma_c = 10;
  std::string term = "all";
};

class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Monte Carlo run stopped early; its partial results have already been written.
class PartialRun : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw DomainError("cannot write " + path);
}

Graph load_graph(const Options& o) {
  try {
    return parse_graph(read_text(o.graph_path));
  } catch (const GraphFormatError& e) {
    throw DomainError(o.graph_path + ": " + e.what());
  }
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  if (o.budget > 0) b.max_nodes = o.budget;
  return b;
}

void emit(const Options& o, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!o.json_path.empty()) write_text(o.json_path, text);
}

void emit_csv(const Options& o, const std::string& csv) {
  if (!o.csv_path.empty()) write_text(o.csv_path, csv);
}

// Attaches a decomposition, its validation and (optionally) a certificate file.
void attach_certificate(const Options& o, const Graph& g, const Decomposition& d, json& doc) {
  const ValidationReport v = validate_decomposition(g, d);
  if (!v.ok) throw std::logic_error("internal: emitted certificate failed validation: " + v.message);
  doc["blocks"] = d.size();
  doc["valid"] = true;
  doc["certificate"] = report_json(d);
  if (!o.cert_path.empty()) {
    write_text(o.cert_path, format_decomposition(d));
    doc["certificate_path"] = o.cert_path;
  }
}

void cmd_sample(const Options& o) {
  const Graph g = gnp_sample({o.config.n, o.config.p, o.config.seed});
  const std::string text = serialize_graph(g);
  std::cout << text;
  if (!o.json_path.empty()) write_text(o.json_path, text);
}

void cmd_alpha(const Options& o) {
  const Graph g = load_graph(o);
  const auto r = alpha(g, budget_of(o));
  emit(o, {{"n", g.order()}, {"edges", g.edge_count()}, {"alpha", r.size}, {"witness", r.witness.members()}});
}

void cmd_beta(const Options& o) {
  const Graph g = load_graph(o);
  const auto r = beta(g, budget_of(o));
  json doc{{"n", g.order()}, {"edges", g.edge_count()}, {"beta", r.size}};
  doc["witness"] = r.witness ? report_json(*r.witness) : json(nullptr);
  emit(o, doc);
}

void cmd_tau(const Options& o) {
  const Graph g = load_graph(o);
  const auto r = exact_tau(g, budget_of(o));
  json doc{{"n", g.order()}, {"edges", g.edge_count()}, {"tau", r.tau}};
  attach_certificate(o, g, r.certificate, doc);
  emit(o, doc);
}

void cmd_tau_prime(const Options& o) {
  const Graph g = load_graph(o);
  const auto r = exact_tau_prime(g, budget_of(o));
  json doc{{"n", g.order()}, {"edges", g.edge_count()}, {"tau_prime", r.tau_prime.to_string()}};
  if (r.certificate) {
    doc["tau_prime"] = r.tau_prime.value();
    attach_certificate(o, g, *r.certificate, doc);
  }
  emit(o, doc);
}

void cmd_decompose_star(const Options& o) {
  const Graph g = load_graph(o);
  const auto a = alpha(g, budget_of(o));
  json doc{{"n", g.order()}, {"alpha", a.size}, {"independent_set", a.witness.members()}};
  attach_certificate(o, g, star_decomposition(g, a.witness), doc);
  emit(o, doc);
}

void cmd_decompose_beta(const Options& o) {
  const Graph g = load_graph(o);
  const auto b = beta(g, budget_of(o));
  if (!b.witness) throw DomainError("graph has no edges, so no induced complete bipartite subgraph");
  json doc{{"n", g.order()}, {"beta", b.size}, {"biclique", report_json(*b.witness)}};
  attach_certificate(o, g, beta_decomposition(g, *b.witness), doc);
  emit(o, doc);
}

void cmd_gamma(const Options& o) {
  const Graph g = load_graph(o);
  const auto r = gamma_max(g, budget_of(o));
  json doc{{"n", g.order()},
           {"edges", g.edge_count()},
           {"gamma", r.gamma},
           {"cover", report_json(r.cover)},
           {"cover_line", format_cover(r.cover)},
           {"structural", nontrivial_bicliques_are_disjoint_c4s(g)}};
  attach_certificate(o, g, sparse_cover_decomposition(g, r.cover), doc);
  emit(o, doc);
}

void cmd_regime(const Options& o) {
  if (o.config.n < 2) throw DomainError("regime: n must be >= 2");
  emit(o, report_json(regime_classify(o.config.n, o.config.threshold)));
}

void cmd_events(const Options& o) { emit(o, report_json(event_probabilities(o.lambda, o.mu))); }

void cmd_moments(const Options& o) {
  if (o.term == "all" && !o.csv_path.empty()) throw DomainError("moments: --out-csv needs a single --term");
  json doc{{"n", o.config.n}, {"k0", k0_of_n(o.config.n)}};
  std::string csv;
  for (auto [name, fn] : {std::pair{"f", &lemma21_check}, std::pair{"g", &lemma22_check}, std::pair{"h", &cross_term_check}}) {
    if (o.term != "all" && o.term != name) continue;
    const MomentTable t = fn(o.config.n);
    doc[name] = report_json(t);
    if (csv.empty()) csv = moment_table_csv(t);
  }
  emit_csv(o, csv);
  emit(o, doc);
}

void cmd_lemma31(const Options& o) {
  const auto c = lemma31_check(o.config.n, o.config.p, o.lemma_c);
  emit_csv(o, lemma31_csv(c));
  emit(o, report_json(c));
}

void cmd_mc_alpha_beta(const Options& o) {
  ExperimentConfig cfg = o.config;
  cfg.budget = budget_of(o);
  const auto r = mc_alpha_beta(cfg);
  emit_csv(o, alpha_beta_csv(r));
  emit(o, report_json(r));
  if (r.partial) throw PartialRun(r.partial_reason);
}

void cmd_mc_sparse(const Options& o) {
  ExperimentConfig cfg = o.config;
  cfg.budget = budget_of(o);
  const auto r = mc_sparse(cfg);
  emit_csv(o, sparse_csv(r));
  emit(o, report_json(r));
  if (r.partial) throw PartialRun(r.partial_reason);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biclique partitions, extremal search and random-graph probability tools"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "Edge-list file (\"-\" for stdin)")->required();
    sub->add_option("--budget", o.budget, "Search node limit (0 = unlimited)");
    sub->add_option("--json", o.json_path, "Also write the JSON result to this path");
  };
  auto add_cert = [&](CLI::App* sub) {
    sub->add_option("--cert", o.cert_path, "Write the certificate (BLOCK lines) to this path");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", o.json_path, "Also write the JSON result to this path"); };
  auto add_experiment = [&](CLI::App* sub) {
    sub->add_option("--trials", o.config.trials, "Number of samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.config.seed, "Experiment seed");
    sub->add_option("--workers", o.config.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Per-solve node limit (0 = unlimited)");
    sub->add_option("--out-csv", o.csv_path, "Write per-trial rows as CSV");
    add_json(sub);
  };

  std::vector<std::pair<CLI::App*, void (*)(const Options&)>> commands;
  auto command = [&](const char* name, const char* help, void (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* sample = command("sample", "Sample G(n, p) and print its edge list", cmd_sample);
  sample->add_option("--n", o.config.n, "Vertices")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--p", o.config.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  sample->add_option("--seed", o.config.seed, "Seed");
  add_json(sample);

  add_graph(command("alpha", "Independence number", cmd_alpha));
  add_graph(command("beta", "Largest induced complete bipartite subgraph", cmd_beta));
  for (auto [name, help, fn] : {std::tuple{"tau", "Exact biclique partition number", cmd_tau},
                                std::tuple{"tau-prime", "Exact partition into nontrivial bicliques", cmd_tau_prime},
                                std::tuple{"decompose-star", "Star decomposition from a maximum independent set", cmd_decompose_star},
                                std::tuple{"decompose-beta", "Stars plus a maximum induced biclique", cmd_decompose_beta},
                                std::tuple{"gamma", "Maximum sparse cover and its decomposition", cmd_gamma}}) {
    auto* sub = command(name, help, fn);
    add_graph(sub);
    add_cert(sub);
  }

  auto* regime = command("regime", "Classify n into regime I, II or III", cmd_regime);
  regime->add_option("--n", o.config.n, "Vertices")->required();
  regime->add_option("--T", o.config.threshold, "Regime threshold")->check(CLI::PositiveNumber);
  add_json(regime);

  auto* events = command("events", "Predicted joint event probabilities", cmd_events);
  events->add_option("--lambda", o.lambda, "E[X]")->required()->check(CLI::NonNegativeNumber);
  events->add_option("--mu", o.mu, "E[Y]")->required()->check(CLI::NonNegativeNumber);
  add_json(events);

  auto* moments = command("moments", "Second-moment bound margins at k0(n)", cmd_moments);
  moments->add_option("--n", o.config.n, "Vertices")->required();
  moments->add_option("--term", o.term, "f, g, h or all")->check(CLI::IsMember({"f", "g", "h", "all"}));
  moments->add_option("--out-csv", o.csv_path, "Write the table as CSV (single term)");
  add_json(moments);

  auto* lemma31 = command("lemma31", "Empirical constant of the divisor-sum bound", cmd_lemma31);
  lemma31->add_option("--n", o.config.n, "Vertices")->required();
  lemma31->add_option("--p", o.config.p, "Edge probability")->required();
  lemma31->add_option("--C", o.lemma_c, "Precondition constant: n p >= C log2 n");
  lemma31->add_option("--out-csv", o.csv_path, "Write the table as CSV");
  add_json(lemma31);

  auto* mc_ab = command("mc-alpha-beta", "Monte Carlo alpha/beta on G(n, 1/2)", cmd_mc_alpha_beta);
  mc_ab->add_option("--n", o.config.n, "Vertices")->required();
  mc_ab->add_option("--T", o.config.threshold, "Regime threshold")->check(CLI::PositiveNumber);
  add_experiment(mc_ab);

  auto* mc_sp = command("mc-sparse", "Monte Carlo sparse-regime decompositions", cmd_mc_sparse);
  mc_sp->add_option("--n", o.config.n, "Vertices")->required();
  mc_sp->add_option("--p", o.config.p, "Edge probability")->required();
  add_experiment(mc_sp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) fn(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << " (lower bound " << e.lower_bound().to_string()
              << ", upper bound " << e.upper_bound().to_string() << ")\n";
    std::cout << json{{"error", "budget_exhausted"},
                      {"lower_bound", e.lower_bound().to_string()},
                      {"upper_bound", e.upper_bound().to_string()}}.dump(2)
              << "\n";
    return kExitBudget;
  } catch (const PartialRun& e) {
    std::cerr << "budget exhausted, partial results: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
