#pragma once

#include <vector>

#include "bisect/graph.hpp"
#include "bisect/structure.hpp"

namespace bisect {

inline constexpr double kPsdTol = 1e-8;
inline constexpr double kPsdSlack = 1e-9;

// Feasible point (z, d) of the spectral lower bound's primal SDP. h_equiv is
// the certified lower bound m/2 - objective/4.
struct PrimalCert {
  double z = 0.0;
  CorrectionVector d;
  double min_eig_constraint = 0.0;
  double objective = 0.0;  // n*z - sum(d)
  double h_equiv = 0.0;
};

PrimalCert build_primal_cert(const Graph& g, const CorrectionVector& d_star);

// The full constraint matrix zI - P(A + diag(d))P of the primal SDP,
// assembled entrywise from its expanded form.
std::vector<double> primal_constraint_matrix(const Graph& g, const CorrectionVector& d,
                                             double z);

// Rank-one feasible point Y = y y^T of the cut SDP. Stored implicitly as y;
// diag(Y) = 1 and sum(Y) = 0 hold exactly for a bisection vector.
struct RankOnePoint {
  BisectionVector y;
  int hY = 0;  // objective value; equals the cut width of y
};

RankOnePoint build_rank_one_point(const BisectionVector& y, const Graph& g);

// Feasible point of the cut SDP's dual: M = -A - x0*J - diag(x) PSD.
struct FkDualCert {
  std::vector<double> x;
  double x0 = 0.0;
  double min_eig_M = 0.0;
  double objective = 0.0;  // m/2 + sum(x)/4
};

FkDualCert build_fk_dual_cert(const Graph& g, const CorrectionVector& d_star);

double duality_gap(double primal_h, const RankOnePoint& rank_one);

struct RowSumCheck {
  bool ok = false;
  bool vacuous = false;  // total entry sum differs from zero; claim not applicable
  double total_sum = 0.0;
  double max_row_sum = 0.0;
};

// For a PSD matrix: total entry sum ~ 0 forces every row sum ~ 0
// (Gram-representation argument). Rejects non-PSD input.
RowSumCheck psd_row_sum_check(const std::vector<double>& mat, int n, double tol = 1e-9);
RowSumCheck psd_row_sum_check(const RankOnePoint& point);

}  // namespace bisect
