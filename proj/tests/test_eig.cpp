#include <doctest.h>

#include <cmath>

#include "bisect/eig.hpp"
#include "bisect/rng.hpp"
#include "test_util.hpp"

using namespace bisect;

namespace {

std::vector<double> random_symmetric(int n, Rng& rng, bool integer = false) {
  std::vector<double> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = integer ? std::floor(rng.uniform(-5.0, 6.0)) : rng.uniform(-2.0, 2.0);
      a[i * n + j] = a[j * n + i] = v;
    }
  return a;
}

double reconstruction_error(const std::vector<double>& a, const SymEig& eig) {
  const int n = eig.n;
  double err = 0.0, norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += eig.eigenvalues[k] * eig.vec(k)[i] * eig.vec(k)[j];
      const double d = a[i * n + j] - s;
      err += d * d;
      norm += a[i * n + j] * a[i * n + j];
    }
  return std::sqrt(err) / std::max(1.0, std::sqrt(norm));
}

// characteristic polynomial of an integer symmetric 4x4, evaluated exactly
double charpoly_at(const std::vector<double>& a, int n, double x) {
  // det(A - xI) via LU on a small dense copy
  std::vector<double> m = a;
  for (int i = 0; i < n; ++i) m[i * n + i] -= x;
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(m[r * n + c]) > std::fabs(m[piv * n + c])) piv = r;
    if (m[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m[c * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[r * n + c] / m[c * n + c];
      for (int j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("eig_sym closed forms") {
  SUBCASE("identity") {
    const std::vector<double> a{1, 0, 0, 0, 1, 0, 0, 0, 1};
    const SymEig e = eig_sym(a, 3);
    for (double v : e.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("2x2 swap") {
    const std::vector<double> a{0, 1, 1, 0};
    const SymEig e = eig_sym(a, 2);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("C4 adjacency spectrum") {
    const std::vector<double> a{0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0};
    const SymEig e = eig_sym(a, 4);
    CHECK(e.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(e.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(e.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(e.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("eig_sym rejects non-symmetric input") {
  CHECK_THROWS_AS(eig_sym({0, 1, 0, 0}, 2), Error);
}

TEST_CASE("eig_sym reconstruction and orthonormality on random matrices") {
  Rng rng(42);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + static_cast<int>(rng.uniform_int(30));
    const auto a = random_symmetric(n, rng);
    const SymEig e = eig_sym(a, n);
    CHECK(reconstruction_error(a, e) < 1e-11);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += e.vec(i)[k] * e.vec(j)[k];
        CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
    for (int i = 1; i < n; ++i) CHECK(e.eigenvalues[i] >= e.eigenvalues[i - 1]);
  }
}

TEST_CASE("eigenvalues match characteristic polynomial roots on integer 4x4") {
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    const auto a = random_symmetric(4, rng, true);
    const SymEig e = eig_sym(a, 4);
    for (double lam : e.eigenvalues) {
      const double p = charpoly_at(a, 4, lam);
      const double h = 1e-6;
      const double dp = (charpoly_at(a, 4, lam + h) - charpoly_at(a, 4, lam - h)) / (2 * h);
      // distance to the nearest true root, first-order estimate
      const double dist = std::fabs(p) / std::max(1.0, std::fabs(dp));
      CHECK(dist < 1e-8);
    }
  }
}

TEST_CASE("values-only path agrees with the full decomposition") {
  Rng rng(3);
  for (int it = 0; it < 10; ++it) {
    const int n = 2 + static_cast<int>(rng.uniform_int(40));
    const auto a = random_symmetric(n, rng);
    const SymEig e = eig_sym(a, n);
    const auto vals = eig_sym_values(a, n);
    REQUIRE(vals.size() == e.eigenvalues.size());
    for (int i = 0; i < n; ++i)
      CHECK(vals[i] == doctest::Approx(e.eigenvalues[i]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("top_eigenpairs multiplicity and residuals") {
  Rng rng(5);
  for (int it = 0; it < 10; ++it) {
    const int n = 3 + static_cast<int>(rng.uniform_int(30));
    const auto a = random_symmetric(n, rng);
    const TopEigs top = top_eigenpairs(a, n, 1e-7);
    CHECK(top.multiplicity == static_cast<int>(top.vectors.size()));
    CHECK(top.residual <= 1e-9 * std::max(1.0, std::fabs(top.lambda_max)));
    // orthonormal cluster
    for (std::size_t i = 0; i < top.vectors.size(); ++i)
      for (std::size_t j = i; j < top.vectors.size(); ++j) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += top.vectors[i][k] * top.vectors[j][k];
        CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-8);
      }
  }
}

TEST_CASE("top_eigenpairs handles exact degeneracy") {
  // diag(3,3,3,1): top eigenvalue 3 with multiplicity 3
  const std::vector<double> a{3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 1};
  const TopEigs top = top_eigenpairs(a, 4, 1e-7);
  CHECK(top.lambda_max == doctest::Approx(3.0));
  CHECK(top.multiplicity == 3);
  CHECK(top.gap == doctest::Approx(2.0));
}
