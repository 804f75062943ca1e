#include "bisect/spectral.hpp"

#include <cmath>

namespace bisect {

SubspaceBasis::SubspaceBasis(int n) : n_(n) {
  if (n < 2) throw Error("subspace basis requires n >= 2");
  inv_s_.resize(n);
  for (int j = 1; j < n; ++j) inv_s_[j] = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
}

SubspaceBasis s_basis(int n) { return SubspaceBasis(n); }

std::vector<double> SubspaceBasis::vector(int j) const {
  std::vector<double> v(n_, 0.0);
  const int jj = j + 1;
  for (int i = 0; i < jj; ++i) v[i] = inv_s_[jj];
  v[jj] = -jj * inv_s_[jj];
  return v;
}

void SubspaceBasis::project(const double* x, double* y) const {
  double prefix = 0.0;
  for (int j = 1; j < n_; ++j) {
    prefix += x[j - 1];
    y[j - 1] = (prefix - j * x[j]) * inv_s_[j];
  }
}

void SubspaceBasis::lift(const double* y, double* x) const {
  // Basis vector j adds inv_s_[j]*y_{j-1} to entries 0..j-1 and
  // -j*inv_s_[j]*y_{j-1} to entry j; one suffix sweep covers all columns.
  double suffix = 0.0;
  for (int i = n_ - 1; i >= 0; --i) {
    double v = suffix;
    if (i >= 1) v -= static_cast<double>(i) * inv_s_[i] * y[i - 1];
    x[i] = v;
    if (i >= 1) suffix += inv_s_[i] * y[i - 1];
  }
}

std::vector<double> SubspaceBasis::lift(const std::vector<double>& y) const {
  std::vector<double> x(n_, 0.0);
  lift(y.data(), x.data());
  return x;
}

std::vector<double> reduced_matrix(const Graph& g, const std::vector<double>& d,
                                   const SubspaceBasis& basis) {
  const int n = g.n();
  if (static_cast<int>(d.size()) != n) throw Error("correction vector length mismatch");
  if (basis.n() != n) throw Error("basis dimension mismatch");
  for (double v : d)
    if (!std::isfinite(v)) throw Error("correction vector entries must be finite");

  std::vector<double> B = g.adjacency_dense();
  for (int i = 0; i < n; ++i) B[static_cast<std::size_t>(i) * n + i] += d[i];

  const int r = n - 1;
  std::vector<double> invs(n);
  for (int j = 1; j < n; ++j) invs[j] = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));

  // W = B Q, exploiting the prefix structure of each basis column.
  std::vector<double> W(static_cast<std::size_t>(n) * r);
  for (int i = 0; i < n; ++i) {
    const double* row = B.data() + static_cast<std::size_t>(i) * n;
    double prefix = 0.0;
    double* wrow = W.data() + static_cast<std::size_t>(i) * r;
    for (int j = 1; j < n; ++j) {
      prefix += row[j - 1];
      wrow[j - 1] = (prefix - j * row[j]) * invs[j];
    }
  }

  // R = Q^T W, same trick down the columns of W.
  std::vector<double> R(static_cast<std::size_t>(r) * r);
  for (int c = 0; c < r; ++c) {
    double prefix = 0.0;
    for (int j = 1; j < n; ++j) {
      prefix += W[static_cast<std::size_t>(j - 1) * r + c];
      R[static_cast<std::size_t>(j - 1) * r + c] =
          (prefix - j * W[static_cast<std::size_t>(j) * r + c]) * invs[j];
    }
  }

  // Kill roundoff asymmetry.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const double s = 0.5 * (R[static_cast<std::size_t>(i) * r + j] +
                              R[static_cast<std::size_t>(j) * r + i]);
      R[static_cast<std::size_t>(i) * r + j] = s;
      R[static_cast<std::size_t>(j) * r + i] = s;
    }
  return R;
}

SpectralResult top_eigpair_S(const Graph& g, const std::vector<double>& d, double mult_tol) {
  const SubspaceBasis basis(g.n());
  const std::vector<double> R = reduced_matrix(g, d, basis);
  const TopEigs te = top_eigenpairs(R, g.n() - 1, mult_tol);

  SpectralResult out;
  out.lambda_max = te.lambda_max;
  out.multiplicity = te.multiplicity;
  out.gap = te.gap;
  out.residual = te.residual;
  out.eigvecs.reserve(te.vectors.size());
  for (const auto& v : te.vectors) out.eigvecs.push_back(basis.lift(v));
  return out;
}

double lambda_S(const Graph& g, const std::vector<double>& d) {
  const SubspaceBasis basis(g.n());
  const std::vector<double> R = reduced_matrix(g, d, basis);
  if (g.n() == 2) return R[0];
  Tridiagonal t(R, g.n() - 1);
  return t.eigenvalues().back();
}

}  // namespace bisect
