// Command-line surface: generate instances, solve and certify bisections,
// run monotone-adversary pipelines, and reproduce the desk-scale sweeps.
//
// Exit codes: 0 = success / certified, 2 = certification failed or
// verification mismatch, 1 = usage, parse, or I/O errors.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisect/experiments.hpp"
#include "bisect/oracle.hpp"
#include "bisect/sdp.hpp"
#include "bisect/serialize.hpp"

using namespace bisect;

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw Error("expected a comma-separated list of numbers, got: " + text);
  return out;
}

struct SolverFlags {
  int max_iters = 150;
  int restarts = 2;
  int k_cap = 16;
  std::uint64_t seed = 0;
  bool light = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-iters", max_iters, "ascent iteration budget");
    cmd->add_option("--restarts", restarts, "perturbed restarts when uncertified");
    cmd->add_option("--k-cap", k_cap, "eigenspace enumeration cap");
    cmd->add_option("--solver-seed", seed, "optimizer seed for restart perturbations");
    cmd->add_flag("--light", light, "use the lighter sweep preset");
  }

  SolveOptions options() const {
    SolveOptions opts = light ? sweep_solver_options() : SolveOptions{};
    opts.max_iters = max_iters;
    opts.restarts = restarts;
    opts.k_cap = k_cap;
    opts.seed = seed;
    return opts;
  }
};

Graph load_graph_arg(const std::string& graph_path, const std::string& instance_path,
                     PlantedInstance* instance_out) {
  if (!graph_path.empty()) return graph_from_edge_list(read_file(graph_path));
  if (!instance_path.empty()) {
    PlantedInstance inst = instance_from_json(read_file(instance_path));
    Graph g = inst.graph;
    if (instance_out) *instance_out = std::move(inst);
    return g;
  }
  throw Error("provide --in GRAPH.edges or --instance INSTANCE.json");
}

int cmd_gen(const std::string& family, int n, double p, double q, int r, int b, int k,
            const std::string& name, std::uint64_t seed, int moves, const std::string& out) {
  PlantedInstance inst;
  if (family == "planted") {
    inst = gen_planted_bisection(n, p, q, seed);
  } else if (family == "planted_regular") {
    inst = gen_planted_regular(n, r, b, seed);
  } else if (family == "hypercube") {
    Graph g = gen_hypercube(k);
    std::vector<int> side(g.n());
    for (int v = 0; v < g.n(); ++v) side[v] = (v & 1) ? -1 : 1;  // lowest-bit dimension cut
    inst = PlantedInstance{std::move(g), BisectionVector(side), {}, seed};
    inst.params.family = "hypercube";
    inst.params.k = k;
  } else if (family == "fixture") {
    Fixture f = make_fixture(name);
    inst = PlantedInstance{std::move(f.graph), std::move(f.reference), {}, seed};
    inst.params.family = "fixture";
    inst.params.name = name;
  } else if (family == "adversarial") {
    inst = gen_planted_bisection(n, p, q, seed);
    const SampledMoves sampled = sample_monotone_moves(inst.graph, inst.planted, moves, seed + 1);
    inst.graph = apply_monotone_moves(inst.graph, inst.planted, sampled.moves);
    inst.params.family = "adversarial";
    inst.params.p = p;
    inst.params.q = q;
    inst.params.moves = static_cast<int>(sampled.moves.size());
    write_file(out + ".moves.json", moves_to_json(sampled.moves));
  } else {
    throw Error("unknown family: " + family);
  }

  write_file(out + ".edges", graph_to_edge_list(inst.graph));
  write_file(out + ".json", instance_to_json(inst));
  std::printf("gen %s: n=%d m=%d planted_cut=%d -> %s.{edges,json}\n",
              inst.params.family.c_str(), inst.graph.n(), inst.graph.m(),
              cut_width(inst.graph, inst.planted), out.c_str());
  return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& instance_path,
              const std::string& out, bool hint_planted, const std::string& format,
              const SolverFlags& flags) {
  PlantedInstance inst;
  const Graph g = load_graph_arg(graph_path, instance_path, &inst);
  SolveOptions opts = flags.options();
  if (hint_planted) {
    if (instance_path.empty()) throw Error("--hint-planted requires --instance");
    opts.hint = inst.planted;
  }
  const SolveReport report = solve(g, opts);
  std::string text;
  if (format == "json") {
    text = solve_report_to_json(report);
  } else if (format == "csv") {
    char buf[160];
    std::snprintf(buf, sizeof buf, "h_hat,best_cut,status,multiplicity,iterations\n%.9f,%d,%s,%d,%d\n",
                  report.h_hat, report.best_cut, to_string(report.status), report.multiplicity,
                  report.iterations);
    text = buf;
  } else {
    throw Error("unknown format: " + format + " (expected json or csv)");
  }
  if (!out.empty())
    write_file(out, text);
  else
    std::cout << text;
  std::printf("solve: status=%s h_hat=%.9f best_cut=%d multiplicity=%d bisections=%zu\n",
              to_string(report.status), report.h_hat, report.best_cut, report.multiplicity,
              report.bisections.size());
  return report.status == SolveStatus::CertifiedOptimum ? 0 : 2;
}

int cmd_certify(const std::string& graph_path, const std::string& report_path,
                const std::string& out) {
  const Graph g = graph_from_edge_list(read_file(graph_path));
  const SolveReport report = solve_report_from_json(read_file(report_path));

  std::vector<std::string> problems;
  if (static_cast<int>(report.d_best.size()) != g.n())
    problems.push_back("d_best length does not match the graph");

  double h_check = 0.0;
  if (problems.empty()) {
    h_check = eval_g_value(g, report.d_best);
    if (std::fabs(h_check - report.h_hat) > 1e-5)
      problems.push_back("h_hat does not match eval_g at d_best");
    for (const auto& bvec : report.bisections) {
      if (bvec.size() != g.n()) {
        problems.push_back("bisection length mismatch");
        break;
      }
      if (cut_width(g, bvec) != report.best_cut)
        problems.push_back("listed bisection does not attain best_cut");
    }
    if (report.status == SolveStatus::CertifiedOptimum) {
      if (report.bisections.empty()) problems.push_back("certified report without bisections");
      if (!(report.best_cut < report.h_hat + kCertEps))
        problems.push_back("certification inequality violated");
    }
  }

  nlohmann::json j;
  j["consistent"] = problems.empty();
  j["problems"] = problems;
  j["h_recomputed"] = h_check;
  if (problems.empty()) {
    const PrimalCert primal = build_primal_cert(g, report.d_best);
    const FkDualCert dual = build_fk_dual_cert(g, report.d_best);
    j["primal_h"] = primal.h_equiv;
    j["primal_min_eig"] = primal.min_eig_constraint;
    j["fk_dual_objective"] = dual.objective;
    j["fk_dual_min_eig"] = dual.min_eig_M;
    if (!report.bisections.empty()) {
      const RankOnePoint point = build_rank_one_point(report.bisections.front(), g);
      j["hY"] = point.hY;
      j["gap"] = duality_gap(primal.h_equiv, point);
    }
  }
  const std::string text = j.dump(2) + "\n";
  if (!out.empty())
    write_file(out, text);
  else
    std::cout << text;
  std::printf("certify: %s\n", problems.empty() ? "consistent" : "inconsistent");
  return problems.empty() ? 0 : 2;
}

int cmd_adversary(const std::string& instance_path, int moves, std::uint64_t seed,
                  const std::string& out, const SolverFlags& flags) {
  const PlantedInstance inst = instance_from_json(read_file(instance_path));
  const AdversaryRun run = run_adversary_pipeline(inst, moves, seed, flags.options());
  const std::string text = adversary_run_to_json(run);
  if (!out.empty())
    write_file(out, text);
  else
    std::cout << text;
  std::printf(
      "adversary: before=%s after=%s removed=%d added=%d expected_bw=%d d_update=%s\n",
      to_string(run.before.status), to_string(run.after.status), run.removed, run.added,
      run.expected_bw_after, run.d_update_consistent ? "ok" : "mismatch");
  return run.after.status == SolveStatus::CertifiedOptimum ? 0 : 2;
}

int cmd_oracle(const std::string& graph_path, const std::string& out,
               const std::string& format) {
  const Graph g = graph_from_edge_list(read_file(graph_path));
  const OracleResult res = brute_force_bw(g);
  std::string text;
  if (format == "json") {
    text = oracle_to_json(res);
  } else if (format == "csv") {
    text = "bw,count\n" + std::to_string(res.bw) + "," + std::to_string(res.count) + "\n";
  } else {
    throw Error("unknown format: " + format + " (expected json or csv)");
  }
  if (!out.empty())
    write_file(out, text);
  else
    std::cout << text;
  std::printf("oracle: bw=%d count=%d\n", res.bw, res.count);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified minimum graph bisection via the spectral lower bound"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a graph family instance");
  std::string family, fixture_name = "path", out_prefix;
  int n = 16, r = 3, b = 2, k = 3, moves = 0;
  double p = 0.5, q = 0.1;
  std::uint64_t seed = 1;
  gen->add_option("--family", family,
                  "planted | planted_regular | hypercube | fixture | adversarial")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--p", p, "same-side edge probability");
  gen->add_option("--q", q, "cross-side edge probability");
  gen->add_option("--r", r, "degree (planted_regular)");
  gen->add_option("--b", b, "planted cut width (planted_regular)");
  gen->add_option("--k", k, "hypercube dimension");
  gen->add_option("--name", fixture_name, "fixture name: path | isolated | lattice");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--moves", moves, "adversary moves (adversarial family)");
  gen->add_option("--out", out_prefix, "output prefix")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve and certify a graph");
  std::string solve_graph, solve_instance, solve_out;
  bool hint_planted = false;
  SolverFlags solve_flags;
  solve_cmd->add_option("--in", solve_graph, "edge-list graph file");
  solve_cmd->add_option("--instance", solve_instance, "instance JSON file");
  solve_cmd->add_option("--out", solve_out, "report output path");
  solve_cmd->add_flag("--hint-planted", hint_planted, "warm start from the planted bisection");
  std::string solve_format = "json";
  solve_cmd->add_option("--format", solve_format, "json | csv");
  solve_flags.attach(solve_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "re-verify a solve report");
  std::string cert_graph, cert_report, cert_out;
  certify_cmd->add_option("--in", cert_graph, "edge-list graph file")->required();
  certify_cmd->add_option("--report", cert_report, "solve report JSON")->required();
  certify_cmd->add_option("--out", cert_out, "verification JSON output path");

  auto* adv = app.add_subcommand("adversary", "monotone adversary pipeline");
  std::string adv_instance, adv_out;
  int adv_moves = 0;
  std::uint64_t adv_seed = 1;
  SolverFlags adv_flags;
  adv->add_option("--instance", adv_instance, "instance JSON with a planted bisection")
      ->required();
  adv->add_option("--moves", adv_moves, "number of sampled moves");
  adv->add_option("--seed", adv_seed, "move sampling seed");
  adv->add_option("--out", adv_out, "report JSON output path");
  adv_flags.attach(adv);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force bisection width (n <= 28)");
  std::string oracle_graph, oracle_out;
  oracle_cmd->add_option("--in", oracle_graph, "edge-list graph file")->required();
  oracle_cmd->add_option("--out", oracle_out, "oracle output path");
  std::string oracle_format = "json";
  oracle_cmd->add_option("--format", oracle_format, "json | csv");

  auto* sweep_t = app.add_subcommand("sweep-threshold", "exact-recovery threshold sweep");
  std::string t_alphas = "16,2", t_betas = "1", t_out;
  int t_n = 300, t_trials = 20;
  std::uint64_t t_seed = 1;
  SolverFlags t_flags;
  t_flags.light = true;
  sweep_t->add_option("--alphas", t_alphas, "comma-separated alpha values");
  sweep_t->add_option("--betas", t_betas, "comma-separated beta values");
  sweep_t->add_option("--n", t_n, "vertex count");
  sweep_t->add_option("--trials", t_trials, "trials per cell");
  sweep_t->add_option("--seed", t_seed, "base seed (per-trial seed = base + index)");
  sweep_t->add_option("--out", t_out, "CSV output path")->required();
  t_flags.attach(sweep_t);

  auto* sweep_s = app.add_subcommand("sweep-subcritical", "subcritical failure sweep");
  std::string s_degrees = "10", s_gammas = "0.5", s_out;
  int s_n = 500, s_trials = 20;
  std::uint64_t s_seed = 1;
  SolverFlags s_flags;
  s_flags.light = true;
  sweep_s->add_option("--degrees", s_degrees, "comma-separated mean degrees");
  sweep_s->add_option("--gammas", s_gammas, "comma-separated gamma values");
  sweep_s->add_option("--n", s_n, "vertex count");
  sweep_s->add_option("--trials", s_trials, "trials per cell");
  sweep_s->add_option("--seed", s_seed, "base seed");
  sweep_s->add_option("--out", s_out, "CSV output path")->required();
  s_flags.attach(sweep_s);

  auto* plot = app.add_subcommand("plot", "emit a plotting script for a sweep CSV");
  std::string plot_csv, plot_out;
  plot->add_option("--csv", plot_csv, "sweep CSV path")->required();
  plot->add_option("--out", plot_out, "script output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen)
      return cmd_gen(family, n, p, q, r, b, k, fixture_name, seed, moves, out_prefix);
    if (*solve_cmd)
      return cmd_solve(solve_graph, solve_instance, solve_out, hint_planted, solve_format,
                       solve_flags);
    if (*certify_cmd) return cmd_certify(cert_graph, cert_report, cert_out);
    if (*adv) return cmd_adversary(adv_instance, adv_moves, adv_seed, adv_out, adv_flags);
    if (*oracle_cmd) return cmd_oracle(oracle_graph, oracle_out, oracle_format);
    if (*sweep_t) {
      ThresholdConfig cfg;
      cfg.alphas = parse_list(t_alphas);
      cfg.betas = parse_list(t_betas);
      cfg.n = t_n;
      cfg.trials = t_trials;
      cfg.base_seed = t_seed;
      cfg.solver = t_flags.options();
      write_file(t_out, run_threshold_sweep(cfg));
      std::printf("sweep-threshold: %zu cells -> %s\n", cfg.alphas.size() * cfg.betas.size(),
                  t_out.c_str());
      return 0;
    }
    if (*sweep_s) {
      SubcriticalConfig cfg;
      cfg.mean_degrees = parse_list(s_degrees);
      cfg.gammas = parse_list(s_gammas);
      cfg.n = s_n;
      cfg.trials = s_trials;
      cfg.base_seed = s_seed;
      cfg.solver = s_flags.options();
      write_file(s_out, run_subcritical_sweep(cfg));
      std::printf("sweep-subcritical: %zu cells -> %s\n",
                  cfg.mean_degrees.size() * cfg.gammas.size(), s_out.c_str());
      return 0;
    }
    if (*plot) {
      write_file(plot_out, emit_plot_script(read_file(plot_csv)));
      std::printf("plot: %s\n", plot_out.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
