#include "bisect/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bisect {

namespace {

double sym_check_scale(const std::vector<double>& mat) {
  double mx = 0.0;
  for (double v : mat) mx = std::max(mx, std::fabs(v));
  return std::max(1.0, mx);
}

void require_symmetric(const std::vector<double>& mat, int n) {
  if (static_cast<int>(mat.size()) != n * n) throw Error("matrix size does not match n");
  const double scale = sym_check_scale(mat);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(mat[i * n + j] - mat[j * n + i]) > 1e-12 * scale)
        throw Error("matrix is not symmetric within tolerance");
}

// Implicit-shift QL on a tridiagonal matrix. d: diagonal, e: subdiagonal with
// e[i] coupling i-1,i on entry (shifted internally). If z is non-null it is a
// row-major n×n matrix whose COLUMNS are rotated along, so that on exit
// column j is the eigenvector for d[j].
void tql(std::vector<double>& d, std::vector<double>& e, int n, double* z, int max_sweeps) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == max_sweeps)
          throw Error("QL iteration did not converge (residual " + std::to_string(std::fabs(e[l])) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (int k = 0; k < n; ++k) {
              f = z[k * n + i + 1];
              z[k * n + i + 1] = s * z[k * n + i] + c * f;
              z[k * n + i] = c * z[k * n + i] - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Tridiagonal::Tridiagonal(const std::vector<double>& mat, int n)
    : n_(n), a_(mat), d_(n, 0.0), e_(n, 0.0), h_(n, 0.0) {
  if (n < 1) throw Error("matrix must be at least 1x1");
  auto a = a_.data();
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
      if (scale == 0.0) {
        e_[i] = a[i * n + l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i * n + k] /= scale;
          h += a[i * n + k] * a[i * n + k];
        }
        double f = a[i * n + l];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e_[i] = scale * g;
        h -= f * g;
        a[i * n + l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += a[j * n + k] * a[i * n + k];
          for (int k = j + 1; k <= l; ++k) gg += a[k * n + j] * a[i * n + k];
          e_[j] = gg / h;
          f += e_[j] * a[i * n + j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i * n + j];
          const double gg = e_[j] - hh * f;
          e_[j] = gg;
          for (int k = 0; k <= j; ++k) a[j * n + k] -= f * e_[k] + gg * a[i * n + k];
        }
      }
    } else {
      e_[i] = a[i * n + l];
    }
    h_[i] = h;
  }
  e_[0] = 0.0;
  h_[0] = 0.0;
  for (int i = 0; i < n; ++i) d_[i] = a[i * n + i];
}

void Tridiagonal::apply_q(std::vector<double>& w) const {
  const auto a = a_.data();
  for (int i = 1; i < n_; ++i) {
    if (h_[i] == 0.0) continue;
    const int l = i - 1;
    double s = 0.0;
    for (int k = 0; k <= l; ++k) s += a[i * n_ + k] * w[k];
    s /= h_[i];
    for (int k = 0; k <= l; ++k) w[k] -= s * a[i * n_ + k];
  }
}

std::vector<double> Tridiagonal::eigenvalues(int max_sweeps) const {
  std::vector<double> d = d_, e = e_;
  tql(d, e, n_, nullptr, max_sweeps);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> Tridiagonal::eigenvector(double lambda,
                                             const std::vector<std::vector<double>>& ortho_against,
                                             int perturb_index) const {
  const int n = n_;
  double tnorm = 0.0;
  for (int i = 0; i < n; ++i) tnorm = std::max(tnorm, std::fabs(d_[i]) + std::fabs(e_[i]));
  tnorm = std::max(tnorm, 1.0);
  // Separate repeated shifts by a few ulps so inverse iteration picks
  // distinct directions inside a numerically tight cluster.
  const double shift = lambda + perturb_index * 64.0 * std::numeric_limits<double>::epsilon() * tnorm;

  // LU factorization of (T - shift I) with partial pivoting; tridiagonal
  // input, one extra superdiagonal of fill-in.
  std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), lmul(n, 0.0);
  std::vector<int> piv(n, 0);
  for (int i = 0; i < n; ++i) u0[i] = d_[i] - shift;
  for (int i = 0; i + 1 < n; ++i) u1[i] = e_[i + 1];

  std::vector<double> sub(n, 0.0);  // subdiagonal of T - shift I
  for (int i = 0; i + 1 < n; ++i) sub[i + 1] = e_[i + 1];

  const double tiny = std::numeric_limits<double>::epsilon() * tnorm;
  for (int i = 0; i + 1 < n; ++i) {
    if (std::fabs(sub[i + 1]) > std::fabs(u0[i])) {
      piv[i] = 1;  // swap rows i, i+1
      std::swap(u0[i], sub[i + 1]);
      std::swap(u1[i], u0[i + 1]);
      u2[i] = u1[i + 1];
      u1[i + 1] = 0.0;
    }
    if (u0[i] == 0.0) u0[i] = tiny;
    const double m = sub[i + 1] / u0[i];
    lmul[i] = m;
    u0[i + 1] -= m * u1[i];
    u1[i + 1] -= m * u2[i];
  }
  if (u0[n - 1] == 0.0) u0[n - 1] = tiny;

  auto solve = [&](std::vector<double>& b) {
    for (int i = 0; i + 1 < n; ++i) {
      if (piv[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= lmul[i] * b[i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = b[i];
      if (i + 1 < n) s -= u1[i] * b[i + 1];
      if (i + 2 < n) s -= u2[i] * b[i + 2];
      b[i] = s / u0[i];
    }
  };

  // Deterministic start vector.
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 1.0 + 0.5 * std::sin(0.7 * (i + 1) + 1.3 * (perturb_index + 1));

  for (int pass = 0; pass < 4; ++pass) {
    solve(w);
    double norm = 0.0;
    for (double v : w) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0)
      throw Error("inverse iteration collapsed to zero");
    for (double& v : w) v /= norm;
    if (pass >= 1 && !ortho_against.empty()) {
      // ortho_against lives in original coordinates; compare there.
      std::vector<double> lifted = w;
      apply_q(lifted);
      for (const auto& prev : ortho_against) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += lifted[i] * prev[i];
        // remove the component in tridiagonal coords via Q^T prev:
        // instead project in original coords and pull back is costly; since Q is
        // orthogonal, subtracting in original coords then mapping back is exact.
        for (int i = 0; i < n; ++i) lifted[i] -= dot * prev[i];
      }
      double nn = 0.0;
      for (double v : lifted) nn += v * v;
      nn = std::sqrt(nn);
      if (nn > 1e-8) {
        for (double& v : lifted) v /= nn;
        return lifted;
      }
      // Fully absorbed by previous vectors: restart from a different seed.
      for (int i = 0; i < n; ++i)
        w[i] = std::cos(1.1 * (i + 1) * (pass + 2) + perturb_index);
    }
  }
  apply_q(w);
  for (const auto& prev : ortho_against) {
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += w[i] * prev[i];
    for (int i = 0; i < n; ++i) w[i] -= dot * prev[i];
  }
  double nn = 0.0;
  for (double v : w) nn += v * v;
  nn = std::sqrt(nn);
  if (nn < 1e-10) throw Error("inverse iteration failed to find an independent eigenvector");
  for (double& v : w) v /= nn;
  return w;
}

SymEig eig_sym(const std::vector<double>& mat, int n, double tol, int max_sweeps) {
  require_symmetric(mat, n);
  if (n == 1) return SymEig{1, {mat[0]}, {1.0}};

  // tred2 with accumulation of the transformation, then QL with vectors.
  std::vector<double> a = mat;
  std::vector<double> d(n, 0.0), e(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
      if (scale == 0.0) {
        e[i] = a[i * n + l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i * n + k] /= scale;
          h += a[i * n + k] * a[i * n + k];
        }
        double f = a[i * n + l];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i * n + l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          a[j * n + i] = a[i * n + j] / h;
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += a[j * n + k] * a[i * n + k];
          for (int k = j + 1; k <= l; ++k) gg += a[k * n + j] * a[i * n + k];
          e[j] = gg / h;
          f += e[j] * a[i * n + j];
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i * n + j];
          const double gg = e[j] - hh * f;
          e[j] = gg;
          for (int k = 0; k <= j; ++k) a[j * n + k] -= f * e[k] + gg * a[i * n + k];
        }
      }
    } else {
      e[i] = a[i * n + l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += a[i * n + k] * a[k * n + j];
        for (int k = 0; k <= l; ++k) a[k * n + j] -= g * a[k * n + i];
      }
    }
    d[i] = a[i * n + i];
    a[i * n + i] = 1.0;
    for (int j = 0; j <= l; ++j) a[j * n + i] = a[i * n + j] = 0.0;
  }

  tql(d, e, n, a.data(), max_sweeps);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

  SymEig out;
  out.n = n;
  out.eigenvalues.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    for (int k = 0; k < n; ++k)
      out.vectors[static_cast<std::size_t>(j) * n + k] = a[static_cast<std::size_t>(k) * n + order[j]];
  }
  (void)tol;
  return out;
}

std::vector<double> eig_sym_values(const std::vector<double>& mat, int n, int max_sweeps) {
  require_symmetric(mat, n);
  if (n == 1) return {mat[0]};
  Tridiagonal t(mat, n);
  return t.eigenvalues(max_sweeps);
}

double min_eigenvalue(const std::vector<double>& mat, int n) {
  return eig_sym_values(mat, n).front();
}

double max_eigenvalue(const std::vector<double>& mat, int n) {
  return eig_sym_values(mat, n).back();
}

TopEigs top_eigenpairs(const std::vector<double>& mat, int n, double mult_tol) {
  require_symmetric(mat, n);
  TopEigs out;
  if (n == 1) {
    out.lambda_max = mat[0];
    out.multiplicity = 1;
    out.gap = std::numeric_limits<double>::infinity();
    out.vectors = {{1.0}};
    out.residual = 0.0;
    return out;
  }

  Tridiagonal t(mat, n);
  const std::vector<double> vals = t.eigenvalues();
  const double lam = vals.back();
  const double tol = mult_tol * std::max(1.0, std::fabs(lam));
  int k = 1;
  while (k < n && lam - vals[n - 1 - k] <= tol) ++k;
  out.lambda_max = lam;
  out.multiplicity = k;
  out.gap = (k < n) ? lam - vals[n - 1 - k] : std::numeric_limits<double>::infinity();

  auto residual_of = [&](const std::vector<double>& v) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = -lam * v[i];
      const double* row = mat.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) s += row[j] * v[j];
      r2 += s * s;
    }
    return std::sqrt(r2);
  };

  bool ok = true;
  const double res_tol = 1e-9 * std::max(1.0, std::fabs(lam));
  for (int j = 0; j < k; ++j) {
    std::vector<double> v;
    try {
      v = t.eigenvector(vals[n - 1 - j], out.vectors, j);
    } catch (const Error&) {
      ok = false;
      break;
    }
    const double res = residual_of(v);
    if (res > res_tol) {
      ok = false;
      break;
    }
    out.residual = std::max(out.residual, res);
    out.vectors.push_back(std::move(v));
  }

  if (!ok) {
    // Robust fallback: full decomposition.
    out.vectors.clear();
    out.residual = 0.0;
    const SymEig full = eig_sym(mat, n);
    for (int j = 0; j < k; ++j) {
      std::vector<double> v(full.vec(n - 1 - j), full.vec(n - 1 - j) + n);
      out.residual = std::max(out.residual, residual_of(v));
      out.vectors.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace bisect
