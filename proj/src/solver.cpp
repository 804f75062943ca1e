#include "bisect/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "bisect/rng.hpp"

namespace bisect {

namespace {

void check_even(const Graph& g) {
  if (g.n() < 2 || g.n() % 2 != 0)
    throw Error("bisection solving requires an even vertex count >= 2");
}

double vec_sum(const CorrectionVector& d) {
  double s = 0.0;
  for (double v : d) s += v;
  return s;
}

// Reduced column echelon form of the n×k column set (in place): k pivot rows
// end up forming an identity. Throws if the numerical rank drops below k.
void rcef(std::vector<std::vector<double>>& cols, int n, double pivot_tol) {
  const int k = static_cast<int>(cols.size());
  std::vector<char> used(n, 0);
  for (int j = 0; j < k; ++j) {
    int piv = -1;
    double best = pivot_tol;
    for (int r = 0; r < n; ++r) {
      if (used[r]) continue;
      if (std::fabs(cols[j][r]) > best) {
        best = std::fabs(cols[j][r]);
        piv = r;
      }
    }
    if (piv < 0) throw Error("degenerate echelon form: rank < k");
    used[piv] = 1;
    const double inv = 1.0 / cols[j][piv];
    for (int r = 0; r < n; ++r) cols[j][r] *= inv;
    cols[j][piv] = 1.0;
    for (int jj = 0; jj < k; ++jj) {
      if (jj == j) continue;
      const double f = cols[jj][piv];
      if (f == 0.0) continue;
      for (int r = 0; r < n; ++r) cols[jj][r] -= f * cols[j][r];
      cols[jj][piv] = 0.0;
    }
  }
}

// Sign-combination sweep over an echelonized eigenbasis. entry_tol bounds the
// elementwise distance to ±1 before rounding.
std::vector<BisectionVector> pm1_combinations(const std::vector<std::vector<double>>& basis,
                                              int n, double entry_tol) {
  const int k = static_cast<int>(basis.size());
  std::set<std::vector<int>> seen;
  std::vector<BisectionVector> out;
  std::vector<double> x(n);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::fill(x.begin(), x.end(), 0.0);
    for (int j = 0; j < k; ++j) {
      const double c = (mask >> j) & 1u ? -1.0 : 1.0;
      for (int i = 0; i < n; ++i) x[i] += c * basis[j][i];
    }
    std::vector<int> rounded(n);
    bool ok = true;
    int sum = 0;
    for (int i = 0; i < n && ok; ++i) {
      const int s = x[i] >= 0.0 ? 1 : -1;
      if (std::fabs(x[i] - s) > entry_tol) ok = false;
      rounded[i] = s;
      sum += s;
    }
    if (!ok || sum != 0) continue;
    BisectionVector y(rounded);
    y = y.canonical();
    if (seen.insert(y.values).second) out.push_back(std::move(y));
  }
  return out;
}

// Greedy pairwise-swap descent on the cut width. Keeps the bisection balanced;
// used only to generate candidates, never to replace the median-split output.
BisectionVector improve_candidate(const Graph& g, BisectionVector y, int max_swaps) {
  const int n = g.n();
  std::vector<int> gain(n);  // cross-degree minus same-side degree
  auto recompute = [&]() {
    std::fill(gain.begin(), gain.end(), 0);
    for (auto [u, v] : g.edges()) {
      const int s = y[u] == y[v] ? -1 : 1;
      gain[u] += s;
      gain[v] += s;
    }
  };
  recompute();
  for (int round = 0; round < max_swaps; ++round) {
    int best_u = -1, best_v = -1, best_delta = 0;
    for (int u = 0; u < n; ++u) {
      if (y[u] != 1) continue;
      for (int v = 0; v < n; ++v) {
        if (y[v] != -1) continue;
        const int delta = gain[u] + gain[v] - 2 * (g.has_edge(u, v) ? 1 : 0);
        if (delta > best_delta) {
          best_delta = delta;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_u < 0) break;
    y.values[best_u] = -1;
    y.values[best_v] = 1;
    recompute();
  }
  return y;
}

struct LineSearchResult {
  CorrectionVector d;
  double value;
};

// Exact 1-D maximization of the concave a -> g(G, d^(y) + a*y).
// sum(d) is constant along the family, so this minimizes lambda(B_S).
LineSearchResult line_search_alpha(const Graph& g, const BisectionVector& y, int gs_iters) {
  const int n = g.n();
  const CorrectionVector dy = correction_from_bisection(g, y);

  CorrectionVector d(n);
  auto phi = [&](double a) {
    for (int i = 0; i < n; ++i) d[i] = dy[i] + a * y[i];
    return eval_g_value(g, d);
  };

  double best_a = 0.0, best_v = phi(0.0);
  auto track = [&](double a, double v) {
    if (v > best_v) {
      best_v = v;
      best_a = a;
    }
  };

  // Bracket the maximum by doubling outward; phi is concave.
  double lo = -1.0, hi = 1.0;
  double flo = phi(lo), fhi = phi(hi);
  track(lo, flo);
  track(hi, fhi);
  const double f0 = best_v;
  for (int it = 0; it < 40 && fhi >= f0 && fhi >= flo; ++it) {
    hi *= 2.0;
    fhi = phi(hi);
    track(hi, fhi);
    if (fhi < best_v) break;
  }
  for (int it = 0; it < 40 && flo >= f0 && flo >= fhi; ++it) {
    lo *= 2.0;
    flo = phi(lo);
    track(lo, flo);
    if (flo < best_v) break;
  }

  // Golden-section refinement on [lo, hi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c1 = b - inv_phi * (b - a);
  double c2 = a + inv_phi * (b - a);
  double f1 = phi(c1), f2 = phi(c2);
  track(c1, f1);
  track(c2, f2);
  for (int it = 0; it < gs_iters; ++it) {
    if (f1 < f2) {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + inv_phi * (b - a);
      f2 = phi(c2);
      track(c2, f2);
    } else {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - inv_phi * (b - a);
      f1 = phi(c1);
      track(c1, f1);
    }
    if (b - a < 1e-13 * std::max(1.0, std::fabs(a) + std::fabs(b))) break;
  }

  LineSearchResult res;
  res.value = best_v;
  res.d.resize(n);
  for (int i = 0; i < n; ++i) res.d[i] = dy[i] + best_a * y[i];
  return res;
}

}  // namespace

const char* to_string(SolveStatus s) {
  return s == SolveStatus::CertifiedOptimum ? "CertifiedOptimum" : "Fail";
}

double eval_f(const Graph& g, const CorrectionVector& d, const std::vector<double>& x) {
  if (static_cast<int>(d.size()) != g.n() || static_cast<int>(x.size()) != g.n())
    throw Error("eval_f length mismatch");
  double val = 0.0;
  for (auto [u, v] : g.edges()) val += (1.0 - x[u] * x[v]) / 2.0;
  for (int i = 0; i < g.n(); ++i) val += d[i] * (x[i] * x[i] - 1.0);
  return val;
}

GValue eval_g(const Graph& g, const CorrectionVector& d, double mult_tol) {
  SpectralResult spec = top_eigpair_S(g, d, mult_tol);
  const double value = (2.0 * g.m() + vec_sum(d) - g.n() * spec.lambda_max) / 4.0;
  return {value, std::move(spec)};
}

double eval_g_value(const Graph& g, const CorrectionVector& d) {
  return (2.0 * g.m() + vec_sum(d) - g.n() * lambda_S(g, d)) / 4.0;
}

CorrectionVector supergradient_g(const Graph& g, const CorrectionVector& d) {
  const SpectralResult spec = top_eigpair_S(g, d);
  const auto& v = spec.eigvecs.front();
  const int n = g.n();
  CorrectionVector grad(n);
  for (int i = 0; i < n; ++i) grad[i] = (1.0 - n * v[i] * v[i]) / 4.0;
  return grad;
}

CorrectionVector normalize_d(const CorrectionVector& d, double target_sum) {
  if (!std::isfinite(target_sum)) throw Error("normalize_d target must be finite");
  if (d.empty()) throw Error("normalize_d on empty vector");
  const double c = (target_sum - vec_sum(d)) / static_cast<double>(d.size());
  CorrectionVector out = d;
  for (double& v : out) v += c;
  return out;
}

BisectionVector extract_bisection(const std::vector<double>& eigvec) {
  const int n = static_cast<int>(eigvec.size());
  if (n < 2 || n % 2 != 0) throw Error("median split needs an even-length vector");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  // value descending, index ascending: ties at the median keep low indices on +1
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eigvec[a] > eigvec[b]; });
  BisectionVector out;
  out.values.assign(n, -1);
  for (int i = 0; i < n / 2; ++i) out.values[order[i]] = 1;
  long long sum = 0;
  for (int v : out.values) sum += v;
  if (sum != 0) throw Error("median split failed to balance");
  return out;
}

SolveStatus certify(const Graph& g, double h_hat, const BisectionVector& x) {
  const int cut = cut_width(g, x);
  return static_cast<double>(cut) < h_hat + kCertEps ? SolveStatus::CertifiedOptimum
                                                     : SolveStatus::Fail;
}

MaximizeResult maximize_g(const Graph& g, const SolveOptions& opts) {
  check_even(g);
  if (opts.max_iters < 1) throw Error("max_iters must be >= 1");
  if (opts.k_cap > 24) throw Error("k_cap must be <= 24");

  const int n = g.n();
  const int m = g.m();
  const double target_sum = 2.0 * m;

  MaximizeResult res;
  double best_val = -std::numeric_limits<double>::infinity();
  CorrectionVector best_d(n, 0.0);

  int min_cut = std::numeric_limits<int>::max();
  std::set<std::vector<int>> seen;
  std::vector<BisectionVector> queue;

  auto add_candidate = [&](const BisectionVector& y) {
    const BisectionVector c = y.canonical();
    if (!seen.insert(c.values).second) return;
    min_cut = std::min(min_cut, cut_width(g, c));
    queue.push_back(c);
  };

  auto harvest = [&](const SpectralResult& spec) {
    const int cap = std::min<int>(4, static_cast<int>(spec.eigvecs.size()));
    for (int j = 0; j < cap; ++j) {
      BisectionVector y = extract_bisection(spec.eigvecs[j]);
      add_candidate(y);
      add_candidate(improve_candidate(g, y, n));
    }
    const int k = spec.multiplicity;
    if (k >= 2 && k <= std::min(opts.k_cap, 12) &&
        k == static_cast<int>(spec.eigvecs.size())) {
      auto cols = spec.eigvecs;
      try {
        rcef(cols, n, 1e-9);
        for (auto& y : pm1_combinations(cols, n, 0.35)) add_candidate(y);
      } catch (const Error&) {
        // rank-deficient harvest is not an error here; candidates are optional
      }
    }
  };

  // Once a candidate's cut width is matched by the lower bound, nothing can improve.
  auto done = [&]() {
    return min_cut != std::numeric_limits<int>::max() &&
           static_cast<double>(min_cut) < best_val + 0.5 * kCertEps;
  };

  auto consider = [&](const CorrectionVector& d, double val) {
    if (val > best_val) {
      best_val = val;
      best_d = d;
    }
  };

  int polish_left = opts.polish_candidates;  // total line-search budget per call
  auto polish_queue = [&]() {
    // Prefer candidates with small cut width: they are the optimum suspects.
    std::stable_sort(queue.begin(), queue.end(), [&](const auto& a, const auto& b) {
      return cut_width(g, a) < cut_width(g, b);
    });
    for (const auto& y : queue) {
      if (polish_left <= 0 || done()) break;
      --polish_left;
      LineSearchResult ls = line_search_alpha(g, y, opts.alpha_iters);
      consider(ls.d, ls.value);
    }
    queue.clear();
  };

  // Initial candidates from the spectrum of A_S.
  {
    const CorrectionVector zero(n, 0.0);
    GValue g0 = eval_g(g, zero, opts.mult_tol);
    consider(zero, g0.value);
    harvest(g0.spectral);
  }
  if (opts.hint) {
    if (opts.hint->size() != n) throw Error("hint bisection length mismatch");
    add_candidate(*opts.hint);
  }
  polish_queue();

  Rng rng(opts.seed ^ 0x5bd1e995u);
  const double s0 = opts.s0 > 0.0 ? opts.s0 : 2.0 * std::max(1.0, 2.0 * m / n);

  for (int restart = 0; restart <= opts.restarts && !done(); ++restart) {
    CorrectionVector d = normalize_d(best_d, target_sum);
    if (restart > 0)
      for (double& v : d) v += rng.uniform(-0.5 * restart, 0.5 * restart);
    d = normalize_d(d, target_sum);

    const int iters = restart == 0 ? opts.max_iters : std::max(10, opts.max_iters / 2);
    const int stall_window = std::max(25, iters / 4);
    double stall_ref = best_val;
    int last_progress = 0;
    for (int t = 1; t <= iters && !done(); ++t) {
      GValue gv = eval_g(g, d, opts.mult_tol);
      consider(d, gv.value);
      if (best_val > stall_ref + opts.g_tol) {
        stall_ref = best_val;
        last_progress = t;
      }
      if (t - last_progress > stall_window) break;  // converged within g_tol
      const double step = s0 / std::sqrt(static_cast<double>(t));
      res.trace.push_back({gv.value, gv.spectral.lambda_max, step});
      ++res.iterations;

      if (t % 8 == 0 || t == iters) harvest(gv.spectral);

      const auto& v = gv.spectral.eigvecs.front();
      double mean = 0.0;
      CorrectionVector grad(n);
      for (int i = 0; i < n; ++i) {
        grad[i] = (1.0 - n * v[i] * v[i]) / 4.0;
        mean += grad[i];
      }
      mean /= n;
      for (int i = 0; i < n; ++i) d[i] += step * (grad[i] - mean);
      d = normalize_d(d, target_sum);
    }
    polish_queue();
  }

  res.d_best = normalize_d(best_d, target_sum);
  res.h_hat = best_val;
  return res;
}

std::vector<BisectionVector> enumerate_bisections_multiplicity(const Graph& g,
                                                               const CorrectionVector& d_best,
                                                               int k_cap,
                                                               double mult_tol) {
  check_even(g);
  GValue gv = eval_g(g, d_best, mult_tol);
  const int k = gv.spectral.multiplicity;
  if (k < 2) throw Error("enumeration requires top-eigenvalue multiplicity >= 2");
  if (k > k_cap) throw Error("eigenspace too large: multiplicity " + std::to_string(k) +
                             " exceeds k_cap " + std::to_string(k_cap));

  auto cols = gv.spectral.eigvecs;
  rcef(cols, g.n(), 1e-9);

  std::vector<BisectionVector> out;
  for (auto& y : pm1_combinations(cols, g.n(), 1e-6))
    if (certify(g, gv.value, y) == SolveStatus::CertifiedOptimum) out.push_back(std::move(y));
  return out;
}

SolveReport solve(const Graph& g, const SolveOptions& opts) {
  check_even(g);
  MaximizeResult mr = maximize_g(g, opts);

  SolveReport report;
  report.h_hat = mr.h_hat;
  report.d_best = mr.d_best;
  report.iterations = mr.iterations;
  report.trace = std::move(mr.trace);

  GValue gv = eval_g(g, report.d_best, opts.mult_tol);
  report.lambda_at_best = gv.spectral.lambda_max;
  report.multiplicity = gv.spectral.multiplicity;

  std::vector<BisectionVector> considered;
  considered.push_back(extract_bisection(gv.spectral.eigvecs.front()).canonical());

  const int k = gv.spectral.multiplicity;
  if (k > 1) {
    if (k > opts.k_cap) {
      report.diagnostic = "eigenspace too large: multiplicity " + std::to_string(k) +
                          " exceeds k_cap " + std::to_string(opts.k_cap);
      report.best_cut = cut_width(g, considered.front());
      report.status = SolveStatus::Fail;
      return report;
    }
    try {
      for (auto& y : enumerate_bisections_multiplicity(g, report.d_best, opts.k_cap, opts.mult_tol))
        considered.push_back(std::move(y));
    } catch (const Error& e) {
      report.diagnostic = e.what();
    }
  }

  int best_cut = std::numeric_limits<int>::max();
  const BisectionVector* best = nullptr;
  for (const auto& y : considered) {
    const int c = cut_width(g, y);
    if (c < best_cut) {
      best_cut = c;
      best = &y;
    }
  }
  report.best_cut = best_cut;
  report.status = certify(g, report.h_hat, *best);

  if (report.status == SolveStatus::CertifiedOptimum) {
    std::set<std::vector<int>> uniq;
    for (const auto& y : considered)
      if (cut_width(g, y) == best_cut && uniq.insert(y.canonical().values).second)
        report.bisections.push_back(y.canonical());
  }
  return report;
}

}  // namespace bisect
