#include "bisect/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bisect/serialize.hpp"
#include "bisect/structure.hpp"

namespace bisect {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

bool recovered(const SolveReport& report, const BisectionVector& planted) {
  for (const auto& b : report.bisections)
    if (b.same_cut(planted)) return true;
  return false;
}

}  // namespace

SolveOptions sweep_solver_options() {
  SolveOptions opts;
  opts.max_iters = 45;
  opts.restarts = 0;
  opts.polish_candidates = 3;
  opts.alpha_iters = 48;
  return opts;
}

TrialRecord run_planted_trial(int n, double p, double q, std::uint64_t seed,
                              const SolveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const PlantedInstance inst = gen_planted_bisection(n, p, q, seed);
  const SolveReport report = solve(inst.graph, opts);
  const auto t1 = std::chrono::steady_clock::now();

  TrialRecord rec;
  rec.seed = seed;
  rec.n = n;
  rec.h_hat = report.h_hat;
  rec.best_cut = report.best_cut;
  rec.status = report.status;
  rec.planted_cut = cut_width(inst.graph, inst.planted);
  rec.recovered_planted = recovered(report, inst.planted);
  rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rec;
}

std::string run_threshold_sweep(const ThresholdConfig& cfg) {
  if (cfg.trials < 1) throw Error("trials must be >= 1");
  std::ostringstream out;
  out << "# minbisect sweep schema=threshold-v1\n";
  out << "alpha,beta,n,trials,certified_rate,recovered_rate,mean_h_hat,mean_cut,skipped\n";
  const double logn = std::log(static_cast<double>(cfg.n));
  for (double alpha : cfg.alphas) {
    for (double beta : cfg.betas) {
      const double p = alpha * logn / cfg.n;
      const double q = beta * logn / cfg.n;
      const bool skip = !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0);
      int certified = 0, rec_count = 0;
      double sum_h = 0.0, sum_cut = 0.0;
      if (!skip) {
        for (int t = 0; t < cfg.trials; ++t) {
          const TrialRecord rec =
              run_planted_trial(cfg.n, p, q, cfg.base_seed + static_cast<std::uint64_t>(t),
                                cfg.solver);
          if (rec.status == SolveStatus::CertifiedOptimum) ++certified;
          if (rec.recovered_planted) ++rec_count;
          sum_h += rec.h_hat;
          sum_cut += rec.best_cut;
        }
      }
      const double tr = cfg.trials;
      out << fmt("%.6f", alpha) << ',' << fmt("%.6f", beta) << ',' << cfg.n << ','
          << cfg.trials << ',' << fmt("%.6f", skip ? 0.0 : certified / tr) << ','
          << fmt("%.6f", skip ? 0.0 : rec_count / tr) << ','
          << fmt("%.6f", skip ? 0.0 : sum_h / tr) << ','
          << fmt("%.6f", skip ? 0.0 : sum_cut / tr) << ',' << (skip ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::string run_subcritical_sweep(const SubcriticalConfig& cfg) {
  if (cfg.trials < 1) throw Error("trials must be >= 1");
  std::ostringstream out;
  out << "# minbisect sweep schema=subcritical-v1\n";
  out << "mean_degree,gamma,n,trials,p,q,fail_rate,certified_rate,recovered_rate,skipped\n";
  const double logn = std::log(static_cast<double>(cfg.n));
  for (double mean_degree : cfg.mean_degrees) {
    for (double gamma : cfg.gammas) {
      const double p = mean_degree / cfg.n;
      const double q = p - std::sqrt(p * gamma * logn / cfg.n);
      const bool skip = !(p > 0.0 && p < 1.0 && q > 0.0 && q <= p);
      int certified = 0, rec_count = 0;
      if (!skip) {
        for (int t = 0; t < cfg.trials; ++t) {
          const TrialRecord rec =
              run_planted_trial(cfg.n, p, q, cfg.base_seed + static_cast<std::uint64_t>(t),
                                cfg.solver);
          if (rec.status == SolveStatus::CertifiedOptimum) ++certified;
          if (rec.recovered_planted) ++rec_count;
        }
      }
      const double tr = cfg.trials;
      out << fmt("%.6f", mean_degree) << ',' << fmt("%.6f", gamma) << ',' << cfg.n << ','
          << cfg.trials << ',' << fmt("%.8f", p) << ',' << fmt("%.8f", skip ? 0.0 : q) << ','
          << fmt("%.6f", skip ? 0.0 : 1.0 - certified / tr) << ','
          << fmt("%.6f", skip ? 0.0 : certified / tr) << ','
          << fmt("%.6f", skip ? 0.0 : rec_count / tr) << ',' << (skip ? 1 : 0) << '\n';
    }
  }
  return out.str();
}

std::string emit_plot_script(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  std::string schema;
  std::vector<std::string> rows;
  std::string header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto pos = line.find("schema=");
      if (pos != std::string::npos) schema = line.substr(pos + 7);
      continue;
    }
    if (header.empty()) {
      header = line;
      continue;
    }
    rows.push_back(line);
  }
  if (rows.empty()) throw Error("cannot plot an empty CSV");
  if (schema != "threshold-v1" && schema != "subcritical-v1")
    throw Error("unknown sweep schema: " + schema);

  std::ostringstream py;
  py << "#!/usr/bin/env python3\n";
  py << "# generated from sweep CSV (schema " << schema << "); data embedded below\n";
  py << "import matplotlib\n";
  py << "matplotlib.use(\"Agg\")\n";
  py << "import matplotlib.pyplot as plt\n";
  py << "import math\n\n";
  py << "header = \"" << header << "\".split(\",\")\n";
  py << "rows = [\n";
  for (const auto& r : rows) py << "    \"" << r << "\",\n";
  py << "]\n";
  py << "data = [dict(zip(header, r.split(\",\"))) for r in rows]\n";
  py << "data = [d for d in data if d[\"skipped\"] == \"0\"]\n\n";
  if (schema == "threshold-v1") {
    py << "xs = [(math.sqrt(float(d[\"alpha\"])) - math.sqrt(float(d[\"beta\"])))**2 for d in data]\n";
    py << "ys = [float(d[\"certified_rate\"]) for d in data]\n";
    py << "order = sorted(range(len(xs)), key=lambda i: xs[i])\n";
    py << "plt.plot([xs[i] for i in order], [ys[i] for i in order], \"o-\")\n";
    py << "plt.axvline(2.0, color=\"red\", linestyle=\"--\", label=\"recovery threshold\")\n";
    py << "plt.xlabel(r\"$(\\sqrt{\\alpha}-\\sqrt{\\beta})^2$\")\n";
    py << "plt.ylabel(\"certified rate\")\n";
    py << "plt.legend()\n";
    py << "plt.savefig(\"threshold_sweep.png\", dpi=150)\n";
  } else {
    py << "xs = [float(d[\"gamma\"]) for d in data]\n";
    py << "ys = [float(d[\"fail_rate\"]) for d in data]\n";
    py << "order = sorted(range(len(xs)), key=lambda i: xs[i])\n";
    py << "plt.plot([xs[i] for i in order], [ys[i] for i in order], \"o-\")\n";
    py << "plt.xlabel(r\"$\\gamma$\")\n";
    py << "plt.ylabel(\"fail rate\")\n";
    py << "plt.savefig(\"subcritical_sweep.png\", dpi=150)\n";
  }
  return py.str();
}

AdversaryRun run_adversary_pipeline(const PlantedInstance& inst, int move_count,
                                    std::uint64_t seed, const SolveOptions& opts) {
  AdversaryRun run;

  SolveOptions base = opts;
  base.hint = inst.planted;
  run.before = solve(inst.graph, base);
  if (run.before.status != SolveStatus::CertifiedOptimum) {
    run.after = run.before;
    return run;  // nothing to track without a certified optimum
  }

  // Reference bisection for the moves: the planted one when it is optimal,
  // otherwise any certified optimum.
  run.reference = cut_width(inst.graph, inst.planted) == run.before.best_cut
                      ? inst.planted
                      : run.before.bisections.front();

  SampledMoves sampled = sample_monotone_moves(inst.graph, run.reference, move_count, seed);
  run.moves = sampled.moves;
  run.exhausted = sampled.exhausted;
  for (const auto& mv : run.moves)
    (mv.kind == MoveKind::RemoveCutEdge ? run.removed : run.added) += 1;

  const Graph edited = apply_monotone_moves(inst.graph, run.reference, run.moves);
  run.expected_bw_after = run.before.best_cut - run.removed;

  std::vector<std::pair<int, int>> pairs;
  for (const auto& mv : run.moves) pairs.emplace_back(mv.u, mv.v);
  const CorrectionVector d_updated =
      monotone_d_update(inst.graph, run.reference, run.before.d_best, pairs);
  run.d_update_g = eval_g_value(edited, d_updated);
  run.d_update_consistent = std::fabs(run.d_update_g - run.expected_bw_after) <= 1e-8;

  SolveOptions warm = opts;
  warm.hint = run.reference;
  run.after = solve(edited, warm);
  return run;
}

std::string adversary_run_to_json(const AdversaryRun& run) {
  nlohmann::json j;
  j["before"] = nlohmann::json::parse(solve_report_to_json(run.before));
  j["after"] = nlohmann::json::parse(solve_report_to_json(run.after));
  j["moves"] = nlohmann::json::parse(moves_to_json(run.moves));
  j["removed"] = run.removed;
  j["added"] = run.added;
  j["exhausted"] = run.exhausted;
  j["expected_bw_after"] = run.expected_bw_after;
  j["d_update_g"] = run.d_update_g;
  j["d_update_consistent"] = run.d_update_consistent;
  return j.dump(2) + "\n";
}

}  // namespace bisect
