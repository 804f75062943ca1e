#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisect/adversary.hpp"
#include "bisect/generators.hpp"
#include "bisect/solver.hpp"

namespace bisect {

// Lighter solver budget for sweep cells; the full default is overkill when a
// cell is expected to fail anyway.
SolveOptions sweep_solver_options();

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double h_hat = 0.0;
  int best_cut = 0;
  SolveStatus status = SolveStatus::Fail;
  int planted_cut = -1;
  bool recovered_planted = false;
  long long wall_ms = 0;
};

// One planted-model trial; per-trial seed = base_seed + trial index.
TrialRecord run_planted_trial(int n, double p, double q, std::uint64_t seed,
                              const SolveOptions& opts);

struct ThresholdConfig {
  std::vector<double> alphas;
  std::vector<double> betas;
  int n = 300;
  int trials = 20;
  std::uint64_t base_seed = 1;
  SolveOptions solver = sweep_solver_options();
};

// p = alpha*ln(n)/n, q = beta*ln(n)/n per cell (natural log throughout).
// CSV schema threshold-v1:
//   alpha,beta,n,trials,certified_rate,recovered_rate,mean_h_hat,mean_cut,skipped
std::string run_threshold_sweep(const ThresholdConfig& cfg);

struct SubcriticalConfig {
  std::vector<double> mean_degrees;
  std::vector<double> gammas;
  int n = 500;
  int trials = 20;
  std::uint64_t base_seed = 1;
  SolveOptions solver = sweep_solver_options();
};

// p = mean_degree/n and q = p - sqrt(p*gamma*ln(n)/n); cells with q <= 0 are
// flagged and skipped. CSV schema subcritical-v1:
//   mean_degree,gamma,n,trials,p,q,fail_rate,certified_rate,recovered_rate,skipped
std::string run_subcritical_sweep(const SubcriticalConfig& cfg);

// Self-contained python/matplotlib script for a sweep CSV (data embedded).
// Rejects a CSV without data rows.
std::string emit_plot_script(const std::string& csv_text);

struct AdversaryRun {
  SolveReport before;
  SolveReport after;
  std::vector<MonotoneMove> moves;
  int removed = 0;
  int added = 0;
  bool exhausted = false;
  BisectionVector reference;
  double d_update_g = 0.0;      // eval_g on the edited graph at the explicit d-update
  int expected_bw_after = 0;    // pre-move bw minus removed cut edges
  bool d_update_consistent = false;
};

// Solve, sample+apply `move_count` monotone moves against a certified optimal
// bisection, re-solve warm-started, and re-certify through the explicit
// correction-vector update.
AdversaryRun run_adversary_pipeline(const PlantedInstance& inst, int move_count,
                                    std::uint64_t seed, const SolveOptions& opts);

std::string adversary_run_to_json(const AdversaryRun& run);

}  // namespace bisect
