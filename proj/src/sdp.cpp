#include "bisect/sdp.hpp"

#include <algorithm>
#include <cmath>

#include "bisect/eig.hpp"
#include "bisect/spectral.hpp"

namespace bisect {

namespace {

double vec_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

std::vector<double> primal_constraint_matrix(const Graph& g, const CorrectionVector& d,
                                             double z) {
  const int n = g.n();
  if (static_cast<int>(d.size()) != n) throw Error("correction length mismatch");
  std::vector<double> A = g.adjacency_dense();
  std::vector<double> arow(n, 0.0);  // (A*ones)_i = deg(i)
  for (int i = 0; i < n; ++i) arow[i] = g.degree(i);
  const double asum = 2.0 * g.m();
  const double dsum = vec_sum(d);

  // zI - A + (JA + AJ)/n - sum(A) J/n^2 - D + (1 d^T + d 1^T)/n - sum(D) J/n^2
  std::vector<double> C(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = -A[static_cast<std::size_t>(i) * n + j];
      v += (arow[j] + arow[i]) / n;
      v -= asum / (static_cast<double>(n) * n);
      v += (d[j] + d[i]) / n;
      v -= dsum / (static_cast<double>(n) * n);
      if (i == j) v += z - d[i];
      C[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  return C;
}

PrimalCert build_primal_cert(const Graph& g, const CorrectionVector& d_star) {
  const int n = g.n();
  PrimalCert cert;
  cert.d = d_star;
  const double lam = lambda_S(g, d_star);
  cert.z = std::max(0.0, lam) + kPsdSlack;

  const std::vector<double> C = primal_constraint_matrix(g, d_star, cert.z);
  cert.min_eig_constraint = min_eigenvalue(C, n);
  if (cert.min_eig_constraint < -kPsdTol)
    throw Error("primal certificate constraint matrix not PSD: min eig " +
                std::to_string(cert.min_eig_constraint));

  cert.objective = n * cert.z - vec_sum(d_star);
  cert.h_equiv = g.m() / 2.0 - cert.objective / 4.0;
  return cert;
}

RankOnePoint build_rank_one_point(const BisectionVector& y, const Graph& g) {
  if (y.size() != g.n()) throw Error("bisection length does not match graph");
  // BisectionVector enforces the ±1 / zero-sum feasibility facts exactly.
  return {y, cut_width(g, y)};
}

FkDualCert build_fk_dual_cert(const Graph& g, const CorrectionVector& d_star) {
  const int n = g.n();
  if (static_cast<int>(d_star.size()) != n) throw Error("correction length mismatch");
  const double lam = lambda_S(g, d_star);

  FkDualCert cert;
  cert.x.resize(n);
  for (int i = 0; i < n; ++i) cert.x[i] = d_star[i] - lam;
  cert.objective = g.m() / 2.0 + vec_sum(cert.x) / 4.0;

  const std::vector<double> A = g.adjacency_dense();
  auto min_eig_for = [&](double x0) {
    std::vector<double> M(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = -A[static_cast<std::size_t>(i) * n + j] - x0;
        if (i == j) v -= cert.x[i];
        M[static_cast<std::size_t>(i) * n + j] = v;
      }
    return min_eigenvalue(M, n);
  };

  double x0 = 0.0;
  double me = min_eig_for(x0);
  if (me < -kPsdTol) {
    // Double downward until feasible, then bisect for the largest feasible x0.
    double hi = 0.0;        // infeasible
    double lo = -1.0;
    bool found = false;
    for (int it = 0; it < 60; ++it) {
      me = min_eig_for(lo);
      if (me >= -kPsdTol) {
        found = true;
        break;
      }
      hi = lo;
      lo *= 2.0;
    }
    if (!found)
      throw Error("FK dual search budget exhausted; best min eig " + std::to_string(me));
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (min_eig_for(mid) >= -kPsdTol)
        lo = mid;
      else
        hi = mid;
    }
    x0 = lo;
    me = min_eig_for(x0);
  }
  cert.x0 = x0;
  cert.min_eig_M = me;
  return cert;
}

double duality_gap(double primal_h, const RankOnePoint& rank_one) {
  return rank_one.hY - primal_h;
}

RowSumCheck psd_row_sum_check(const std::vector<double>& mat, int n, double tol) {
  if (static_cast<int>(mat.size()) != n * n) throw Error("matrix size mismatch");
  const double min_eig = min_eigenvalue(mat, n);
  if (min_eig < -kPsdTol)
    throw Error("psd_row_sum_check: input not PSD (min eig " + std::to_string(min_eig) + ")");

  RowSumCheck res;
  double total = 0.0;
  for (double v : mat) total += v;
  res.total_sum = total;

  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, mat[static_cast<std::size_t>(i) * n + i]);

  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += mat[static_cast<std::size_t>(i) * n + j];
    res.max_row_sum = std::max(res.max_row_sum, std::fabs(row));
  }

  if (std::fabs(total) > tol * std::max(1.0, max_diag) * n) {
    res.vacuous = true;  // claim applies only when the total sum vanishes
    res.ok = true;
    return res;
  }
  // |row_i| = |<u_i, sum u>| <= sqrt(Y_ii * total); allow the same slack again.
  const double bound = std::sqrt(std::max(0.0, total) * std::max(max_diag, 1.0)) +
                       tol * std::max(1.0, max_diag) * n;
  res.ok = res.max_row_sum <= bound;
  return res;
}

RowSumCheck psd_row_sum_check(const RankOnePoint& point) {
  RowSumCheck res;
  long long sum_y = 0;
  for (int v : point.y.values) sum_y += v;
  res.total_sum = static_cast<double>(sum_y * sum_y);
  res.max_row_sum = static_cast<double>(std::abs(sum_y));  // row i sums to y_i * sum(y)
  res.vacuous = sum_y != 0;
  res.ok = sum_y == 0 ? res.max_row_sum == 0.0 : true;
  return res;
}

}  // namespace bisect
