#pragma once

#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

// Full spectrum of a symmetric matrix. Eigenvalues ascending; eigenvector j
// occupies vectors[j*n .. j*n+n) and matches eigenvalues[j].
struct SymEig {
  int n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> vectors;

  const double* vec(int j) const { return vectors.data() + static_cast<std::size_t>(j) * n; }
};

// Householder reduction of a symmetric matrix to tridiagonal form.
// Reflectors stay in the workspace so selected eigenvectors can be lifted
// back without accumulating the full transformation.
class Tridiagonal {
 public:
  // mat is row-major n×n and is copied internally.
  Tridiagonal(const std::vector<double>& mat, int n);

  int n() const { return n_; }
  const std::vector<double>& diag() const { return d_; }
  const std::vector<double>& off() const { return e_; }  // e_[i] couples i-1 and i; e_[0] = 0

  // All eigenvalues, ascending. Implicit-shift QL, values only.
  std::vector<double> eigenvalues(int max_sweeps = 50) const;

  // Eigenvector of the tridiagonal matrix for an isolated or clustered
  // eigenvalue, via inverse iteration; then transformed to the original
  // coordinates. `ortho_against` holds previously computed vectors of the
  // same cluster (original coordinates) to orthogonalize against.
  std::vector<double> eigenvector(double lambda,
                                  const std::vector<std::vector<double>>& ortho_against,
                                  int perturb_index) const;

  void apply_q(std::vector<double>& w) const;  // w := Q w (tridiag coords -> original)

 private:
  int n_;
  std::vector<double> a_;  // reflector storage
  std::vector<double> d_, e_, h_;
};

// Symmetry check + Householder + QL with eigenvector accumulation.
// tol scales the reconstruction guarantee; non-convergence raises Error.
SymEig eig_sym(const std::vector<double>& mat, int n, double tol = 1e-11, int max_sweeps = 50);

// Eigenvalues only (ascending).
std::vector<double> eig_sym_values(const std::vector<double>& mat, int n, int max_sweeps = 50);

double min_eigenvalue(const std::vector<double>& mat, int n);
double max_eigenvalue(const std::vector<double>& mat, int n);

// Top eigenvalue with its eigenspace. Eigenvalues within
// mult_tol*max(1,|lambda_max|) of lambda_max count as one cluster.
struct TopEigs {
  double lambda_max = 0.0;
  int multiplicity = 0;
  double gap = 0.0;           // lambda_max - next distinct eigenvalue; +inf if none
  double residual = 0.0;      // max_j ||M v_j - lambda_max v_j||_2
  std::vector<std::vector<double>> vectors;
};

TopEigs top_eigenpairs(const std::vector<double>& mat, int n, double mult_tol);

}  // namespace bisect
