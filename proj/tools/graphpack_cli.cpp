// Command-line surface for the packing engine: instance generation, swap
// descent, exact small-instance search, bound audits, threshold constants and
// batched campaigns. Outputs are JSON-lines records.
//
// Exit codes: 0 = all properties held, 1 = a property violation was found
// (a discovery, not a crash), 2 = usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphpack/analyzer.hpp"
#include "graphpack/campaign.hpp"
#include "graphpack/generator.hpp"
#include "graphpack/graph_io.hpp"
#include "graphpack/oracle.hpp"
#include "graphpack/packing.hpp"
#include "graphpack/rng.hpp"
#include "graphpack/solver.hpp"

using nlohmann::ordered_json;
using namespace graphpack;

namespace {

// Resolves an output path against GRAPHPACK_OUT_DIR; empty selects stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    std::string full = path;
    if (const char* dir = std::getenv("GRAPHPACK_OUT_DIR");
        dir && *dir && path.find('/') == std::string::npos)
      full = std::string(dir) + "/" + path;
    file_ = std::make_unique<std::ofstream>(full);
    if (!*file_) throw std::runtime_error("cannot open output path: " + full);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw std::runtime_error("unknown format: " + name);
}

int run_gen(int n, int delta_cap, bool forbid, std::uint64_t seed, int budget,
            const std::string& out, const std::string& format) {
  GenSpec spec;
  spec.n = n;
  spec.delta_cap = delta_cap;
  spec.forbid_even_short_cycles = forbid;
  spec.seed = seed;
  if (budget >= 0) spec.edge_budget = budget;
  const GenResult result = generate(spec);

  OutputSink sink(out);
  sink.stream() << emit_graph(result.graph, parse_format(format));
  if (result.budget_shortfall)
    std::cerr << "note: edge budget unreachable; emitted "
              << result.graph.edge_count() << " edges\n";
  return 0;
}

Labelling initial_labelling(const InstanceFile& file, const PackingInstance& inst) {
  if (!file.perm) return Labelling::identity(inst.n());
  return Labelling(*file.perm);
}

int run_pack(const std::string& path, int restarts, std::uint64_t seed,
             std::int64_t max_swaps, bool emit_trace, bool certify,
             const std::string& out) {
  const InstanceFile file = parse_instance_file(path);
  PackingInstance inst(file.blue, file.red);

  DescentPolicy policy;
  policy.max_swaps = max_swaps;
  SolveOutcome outcome = restarts > 1
                             ? solve_multistart(inst, restarts, seed, policy)
                             : solve(inst, initial_labelling(file, inst), policy);

  OutputSink sink(out);
  if (emit_trace) {
    // Replay the trace from the relevant initial labelling.
    Labelling lab = outcome.final_labelling;
    for (auto it = outcome.swap_trace.rbegin(); it != outcome.swap_trace.rend(); ++it)
      apply_swap_inverse(lab, *it);
    for (const SwapCycle& cycle : outcome.swap_trace) {
      apply_swap_inplace(lab, cycle);
      ordered_json step;
      step["kind"] = "swap";
      step["labels"] = cycle.labels();
      step["purple"] = purple_report(inst, lab).count;
      sink.stream() << step.dump() << '\n';
    }
  }

  ordered_json record;
  record["kind"] = "pack";
  record["digest"] = instance_digest(inst.blue(), inst.red());
  record["status"] = to_string(outcome.status);
  record["purple"] = outcome.purple_final.count;
  record["max_purple_degree"] = outcome.purple_final.max_purple_degree;
  record["swaps"] = outcome.swap_trace.size();
  record["note"] =
      outcome.status == SolveStatus::stuck
          ? "stuck is a local condition, not a proof of unpackability"
          : "";
  if (certify && outcome.stuck_certificate) {
    const auto& cert = *outcome.stuck_certificate;
    record["certificate"] = {{"u", cert.u},           {"v", cert.v},
                             {"claim31_ok", cert.claim31_ok},
                             {"claim32_ok", cert.claim32_ok},
                             {"a_star", cert.a_star_size},
                             {"b_star", cert.b_star_size},
                             {"a", cert.a_size},      {"b", cert.b_size}};
  }
  record["perm"] = outcome.final_labelling.perm();
  sink.stream() << record.dump() << '\n';
  return 0;
}

int run_pack_exact(const std::string& path, int limit, bool enumerate_optima,
                   const std::string& out) {
  const InstanceFile file = parse_instance_file(path);
  PackingInstance inst(file.blue, file.red);
  OracleOptions options;
  options.limit = limit;
  const OracleResult result = exact_pack(inst, options);

  OutputSink sink(out);
  ordered_json record;
  record["kind"] = "pack-exact";
  record["digest"] = instance_digest(inst.blue(), inst.red());
  record["packable"] = result.packable;
  record["min_purple"] = result.min_purple;
  record["complete"] = result.complete;
  record["nodes"] = result.nodes_explored;
  if (result.witness) record["witness"] = result.witness->perm();
  if (enumerate_optima) {
    std::vector<std::vector<int>> optima;
    for (const Labelling& lab : min_purple_labellings(inst))
      optima.push_back(lab.perm());
    record["optima"] = optima;
  }
  sink.stream() << record.dump() << '\n';
  return 0;
}

int run_audit(const std::string& path, bool from_solver, std::vector<int> t_values,
              int pairs, std::uint64_t seed, const std::string& out) {
  const InstanceFile file = parse_instance_file(path);
  PackingInstance inst(file.blue, file.red);
  Labelling lab = initial_labelling(file, inst);
  if (from_solver) lab = solve_multistart(inst, 8, seed).final_labelling;

  const bool girth_ok = !has_c4(inst.red()) && !find_even_short_cycle(inst.blue());
  OutputSink sink(out);
  Rng rng(seed);
  bool violation = false;
  for (int p = 0; p < pairs; ++p) {
    const int a = rng.below_int(inst.n());
    int b = rng.below_int(inst.n() - 1);
    if (b >= a) ++b;
    for (int t : t_values) {
      const Claim41Audit audit = audit_claim41(inst, lab, a, b, t, girth_ok);
      ordered_json record;
      record["kind"] = "audit41";
      record["digest"] = instance_digest(inst.blue(), inst.red());
      record["a"] = a;
      record["b"] = b;
      record["t"] = t;
      record["girth_supported"] = girth_ok;
      record["rb"] = {{"lhs", audit.red_blue.lhs},   {"rhs", audit.red_blue.rhs},
                      {"holds", audit.red_blue.holds}, {"q_t", audit.red_blue.q_t_size},
                      {"r_t", audit.red_blue.r_t_size}, {"d_t", audit.red_blue.d_t_size}};
      record["br"] = {{"lhs", audit.blue_red.lhs},   {"rhs", audit.blue_red.rhs},
                      {"holds", audit.blue_red.holds}, {"q_t", audit.blue_red.q_t_size},
                      {"r_t", audit.blue_red.r_t_size}, {"d_t", audit.blue_red.d_t_size}};
      sink.stream() << record.dump() << '\n';
      if (girth_ok && !(audit.red_blue.holds && audit.blue_red.holds)) violation = true;
    }
  }
  return violation ? 1 : 0;
}

int run_constants(std::vector<int> t_values, const std::string& out) {
  OutputSink sink(out);
  for (int t : t_values) {
    const ThresholdReport report = thresholds(t);
    ordered_json record;
    record["kind"] = "constants";
    record["t"] = report.t;
    record["c_t"] = report.c_t;
    record["delta2_root"] = report.delta2_root;
    record["delta1_root"] = report.delta1_root;
    sink.stream() << record.dump() << '\n';
  }
  return 0;
}

int run_campaign_cmd(const std::string& config_path, const std::string& out) {
  ExperimentConfig cfg = parse_config_file(config_path);
  if (!out.empty()) cfg.output_path = out;
  OutputSink sink(cfg.output_path);
  const CampaignSummary summary = run_campaign(cfg, sink.stream());
  return summary.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph packing engine: swap descent, audits, exact oracles"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random bounded-degree graph");
  int gen_n = 20, gen_cap = 3, gen_budget = -1;
  bool gen_forbid = false;
  std::uint64_t gen_seed = 1;
  std::string gen_out, gen_format = "graph6";
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--delta-cap", gen_cap, "max degree bound")->required();
  gen->add_flag("--forbid-girth", gen_forbid, "forbid 4-, 6- and 8-cycles");
  gen->add_option("--seed", gen_seed, "reproducibility seed");
  gen->add_option("--budget", gen_budget, "target edge count");
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->add_option("--format", gen_format, "graph6 | edgelist");

  // pack
  auto* pack = app.add_subcommand("pack", "purple-minimizing swap descent");
  std::string pack_path, pack_out;
  int pack_restarts = 1;
  std::uint64_t pack_seed = 1;
  std::int64_t pack_max_swaps = -1;
  bool pack_trace = false, pack_certify = false;
  pack->add_option("instance", pack_path, "instance file")->required();
  pack->add_option("--restarts", pack_restarts, "random restarts (1 = given labelling)");
  pack->add_option("--seed", pack_seed, "seed for restart labellings");
  pack->add_option("--max-swaps", pack_max_swaps, "safety valve, -1 = unlimited");
  pack->add_flag("--emit-trace", pack_trace, "JSON line per applied swap");
  pack->add_flag("--certify", pack_certify, "write stuck certificate record");
  pack->add_option("--out", pack_out, "output path (default stdout)");

  // pack-exact
  auto* exact = app.add_subcommand("pack-exact", "exact small-instance search");
  std::string exact_path, exact_out;
  int exact_limit = 12;
  bool exact_enumerate = false;
  exact->add_option("instance", exact_path, "instance file")->required();
  exact->add_option("--limit", exact_limit, "hard size limit");
  exact->add_flag("--enumerate-optima", exact_enumerate, "list all optimal labellings (n <= 8)");
  exact->add_option("--out", exact_out, "output path (default stdout)");

  // audit
  auto* audit = app.add_subcommand("audit", "mixed second-neighborhood bound audits");
  std::string audit_path, audit_out;
  bool audit_from_solver = false;
  std::vector<int> audit_t = {2, 5, 15};
  int audit_pairs = 100;
  std::uint64_t audit_seed = 1;
  audit->add_option("instance", audit_path, "instance file")->required();
  audit->add_flag("--from-solver", audit_from_solver, "audit at the solver's final labelling");
  audit->add_option("--t", audit_t, "t values")->delimiter(',');
  audit->add_option("--pairs", audit_pairs, "random (a,b) pairs to audit");
  audit->add_option("--seed", audit_seed, "pair sampling seed");
  audit->add_option("--out", audit_out, "output path (default stdout)");

  // constants
  auto* constants = app.add_subcommand("constants", "threshold arithmetic report");
  std::vector<int> const_t = {15};
  std::string const_out;
  constants->add_option("--t", const_t, "t values (each >= 5)")->delimiter(',');
  constants->add_option("--out", const_out, "output path (default stdout)");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "batched generate/solve/audit pipeline");
  std::string campaign_config, campaign_out;
  campaign->add_option("--config", campaign_config, "flat key=value config file")->required();
  campaign->add_option("--out", campaign_out, "output path override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return run_gen(gen_n, gen_cap, gen_forbid, gen_seed, gen_budget, gen_out, gen_format);
    if (pack->parsed())
      return run_pack(pack_path, pack_restarts, pack_seed, pack_max_swaps,
                      pack_trace, pack_certify, pack_out);
    if (exact->parsed())
      return run_pack_exact(exact_path, exact_limit, exact_enumerate, exact_out);
    if (audit->parsed())
      return run_audit(audit_path, audit_from_solver, audit_t, audit_pairs,
                       audit_seed, audit_out);
    if (constants->parsed()) return run_constants(const_t, const_out);
    if (campaign->parsed()) return run_campaign_cmd(campaign_config, campaign_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
