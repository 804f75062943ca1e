#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bisect/graph.hpp"
#include "bisect/spectral.hpp"
#include "bisect/structure.hpp"

namespace bisect {

// Certification slack on the "cut width equals the lower bound" test.
inline constexpr double kCertEps = 1e-6;

struct SolveOptions {
  int max_iters = 150;   // supergradient ascent budget per start
  double s0 = 0.0;       // step scale; 0 = auto (2 * max(1, average degree))
  double g_tol = 1e-9;
  double mult_tol = 1e-7;
  int k_cap = 16;        // cap for the 2^k eigenspace enumeration (<= 24)
  std::uint64_t seed = 0;
  int restarts = 2;            // extra perturbed ascent starts if uncertified
  int polish_candidates = 10;  // total candidate line searches per maximize_g
  int alpha_iters = 75;        // golden-section refinements per line search
  std::optional<BisectionVector> hint;  // warm-start bisection, e.g. adversary pipelines
};

struct TracePoint {
  double g_value;
  double lambda;
  double step;
};

enum class SolveStatus { CertifiedOptimum, Fail };
const char* to_string(SolveStatus s);

struct MaximizeResult {
  CorrectionVector d_best;  // renormalized to sum = 2m
  double h_hat = 0.0;       // best g value ever evaluated; a sound lower bound on bw
  std::vector<TracePoint> trace;
  int iterations = 0;
};

struct SolveReport {
  double h_hat = 0.0;
  CorrectionVector d_best;
  double lambda_at_best = 0.0;
  int multiplicity = 0;
  std::vector<BisectionVector> bisections;  // certified optima (empty on Fail)
  int best_cut = 0;
  SolveStatus status = SolveStatus::Fail;
  int iterations = 0;
  std::vector<TracePoint> trace;
  std::string diagnostic;
};

// f(G,d,x) = sum_edges (1 - x_i x_j)/2 + sum_i d_i (x_i^2 - 1).
// On a bisection vector the penalty vanishes and f equals the cut width.
double eval_f(const Graph& g, const CorrectionVector& d, const std::vector<double>& x);

struct GValue {
  double value;
  SpectralResult spectral;
};

// g(G,d) = (2m + sum(d) - n*lambda(B_S)) / 4 with B = A + diag(d).
GValue eval_g(const Graph& g, const CorrectionVector& d, double mult_tol = 1e-7);

// Same value through the eigenvalues-only path (no eigenvectors).
double eval_g_value(const Graph& g, const CorrectionVector& d);

// Supergradient of the concave g at d: entries (1 - n v_i^2)/4 for the first
// unit top eigenvector v. Exact gradient when the top eigenvalue is simple.
CorrectionVector supergradient_g(const Graph& g, const CorrectionVector& d);

// d + c*ones with c chosen so that sum(d) = target_sum; g is unchanged.
CorrectionVector normalize_d(const CorrectionVector& d, double target_sum);

// Median split: +1 for the n/2 largest entries, ties keep the lowest indices
// on the +1 side. Always balanced.
BisectionVector extract_bisection(const std::vector<double>& eigvec);

// CertifiedOptimum iff cut_width(g,x) < h_hat + cert_eps; h_hat <= bw <= cut
// forces cut = bw in that case.
SolveStatus certify(const Graph& g, double h_hat, const BisectionVector& x);

// Step 1: projected supergradient ascent over the zero-mean hyperplane with
// best-iterate tracking, plus exact line searches over g(d^(y) + a*y) for
// candidate bisections harvested from top eigenvectors.
MaximizeResult maximize_g(const Graph& g, const SolveOptions& opts = {});

// 2^k enumeration over the reduced-column-echelon eigenbasis of the top
// eigenspace at d_best; keeps the sign combinations that round to bisection
// vectors and certify against g(G, d_best).
std::vector<BisectionVector> enumerate_bisections_multiplicity(const Graph& g,
                                                               const CorrectionVector& d_best,
                                                               int k_cap,
                                                               double mult_tol = 1e-7);

SolveReport solve(const Graph& g, const SolveOptions& opts = {});

}  // namespace bisect
