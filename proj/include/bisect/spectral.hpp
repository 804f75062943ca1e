#pragma once

#include <vector>

#include "bisect/eig.hpp"
#include "bisect/graph.hpp"

namespace bisect {

// Explicit orthonormal basis of S = { x : sum(x) = 0 }, Helmert construction:
// basis vector j (1-based) has 1/sqrt(j(j+1)) in the first j entries,
// -j/sqrt(j(j+1)) at entry j, zeros after. Deterministic, no storage beyond n.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(int n);

  int n() const { return n_; }
  int dim() const { return n_ - 1; }

  std::vector<double> vector(int j) const;  // j in [0, n-2], materialized length-n

  // y = Q^T x  (x length n, y length n-1)
  void project(const double* x, double* y) const;
  // x = Q y
  void lift(const double* y, double* x) const;

  std::vector<double> lift(const std::vector<double>& y) const;

 private:
  int n_;
  std::vector<double> inv_s_;  // inv_s_[j] = 1/sqrt(j(j+1)), j = 1..n-1
};

SubspaceBasis s_basis(int n);

// Q^T (A + diag(d)) Q, the action of B_S on S in the basis coordinates,
// (n-1)x(n-1) row-major. O(n^2) through the prefix structure of the basis.
std::vector<double> reduced_matrix(const Graph& g, const std::vector<double>& d,
                                   const SubspaceBasis& basis);

struct SpectralResult {
  double lambda_max = 0.0;
  int multiplicity = 0;
  double gap = 0.0;       // to the next distinct eigenvalue, +inf if whole spectrum clusters
  double residual = 0.0;  // reduced-coordinate eigen residual
  std::vector<std::vector<double>> eigvecs;  // lifted to length n, zero-sum, orthonormal
};

// Largest eigenvalue of B_S on S with its full eigenspace.
SpectralResult top_eigpair_S(const Graph& g, const std::vector<double>& d,
                             double mult_tol = 1e-7);

// lambda(B_S) only; the cheap path for line searches.
double lambda_S(const Graph& g, const std::vector<double>& d);

}  // namespace bisect
