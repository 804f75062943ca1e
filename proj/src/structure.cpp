#include "bisect/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "bisect/spectral.hpp"

namespace bisect {

namespace {

void check_lengths(const Graph& g, const BisectionVector& y) {
  if (y.size() != g.n()) throw Error("bisection length does not match graph");
}

// cross-degree minus same-side degree of every vertex
std::vector<int> side_balance(const Graph& g, const BisectionVector& y) {
  std::vector<int> bal(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    const int s = y[u] == y[v] ? -1 : 1;
    bal[u] += s;
    bal[v] += s;
  }
  return bal;
}

}  // namespace

CorrectionVector correction_from_bisection(const Graph& g, const BisectionVector& y) {
  check_lengths(g, y);
  CorrectionVector d(g.n(), 0.0);
  for (auto [u, v] : g.edges()) {
    const double s = y[u] == y[v] ? -1.0 : 1.0;
    d[u] += s;
    d[v] += s;
  }
  return d;
}

AlphaRecovery recover_alpha(const Graph& g, const BisectionVector& y,
                            const CorrectionVector& d_star) {
  check_lengths(g, y);
  if (static_cast<int>(d_star.size()) != g.n()) throw Error("correction length mismatch");
  const int n = g.n();
  const CorrectionVector dy = correction_from_bisection(g, y);

  double dot_y = 0.0, dot_ones = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = d_star[i] - dy[i];
    dot_y += r * y[i];
    dot_ones += r;
  }
  // y and ones are orthogonal (zero-sum y), each with squared norm n.
  const double alpha = dot_y / n;
  const double c = dot_ones / n;

  double res2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = d_star[i] - dy[i] - alpha * y[i] - c;
    res2 += r * r;
  }
  return {alpha, std::sqrt(res2)};
}

double check_eigenvector_lemma(const Graph& g, const CorrectionVector& d_star,
                               const BisectionVector& y) {
  check_lengths(g, y);
  const int n = g.n();
  const double target = 4.0 * cut_width(g, y) - 2.0 * g.m();
  double sum = 0.0;
  for (double v : d_star) sum += v;
  const double shift = (target - sum) / n;

  CorrectionVector d(n);
  for (int i = 0; i < n; ++i) d[i] = d_star[i] + shift;

  const SpectralResult spec = top_eigpair_S(g, d);

  // B_S y = P B y since y has zero sum; P subtracts the mean.
  std::vector<double> w(n, 0.0);
  for (auto [u, v] : g.edges()) {
    w[u] += y[v];
    w[v] += y[u];
  }
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] += d[i] * y[i];
    mean += w[i];
  }
  mean /= n;

  double res = 0.0;
  for (int i = 0; i < n; ++i)
    res = std::max(res, std::fabs(w[i] - mean - spec.lambda_max * y[i]));
  return res;
}

std::vector<std::pair<int, int>> balanced_same_neighbor_violations(const Graph& g,
                                                                   const BisectionVector& y) {
  check_lengths(g, y);
  const std::vector<int> bal = side_balance(g, y);
  std::vector<int> balanced;
  for (int v = 0; v < g.n(); ++v)
    if (bal[v] == 0) balanced.push_back(v);

  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < balanced.size(); ++a) {
    for (std::size_t b = a + 1; b < balanced.size(); ++b) {
      const int u = balanced[a], w = balanced[b];
      if (y[u] == y[w]) continue;
      if (g.has_edge(u, w)) continue;  // the lemma only constrains non-adjacent pairs
      if (g.neighbors(u) != g.neighbors(w)) out.emplace_back(u, w);
    }
  }
  return out;
}

PathSegmentReport detect_path_segment(const Graph& g, const BisectionVector& y) {
  check_lengths(g, y);
  PathSegmentReport report;
  report.conclusive = g.n() >= 10;

  for (auto [a, b] : g.edges()) {
    if (y[a] == y[b]) continue;
    // orient so u is on the +1 side
    const int u = y[a] > 0 ? a : b;
    const int w = y[a] > 0 ? b : a;
    if (g.degree(u) != 2 || g.degree(w) != 2) continue;
    int up = -1, wp = -1;
    for (int t : g.neighbors(u))
      if (t != w) up = t;
    for (int t : g.neighbors(w))
      if (t != u) wp = t;
    if (up < 0 || wp < 0) continue;
    if (y[up] != y[u] || y[wp] != y[w]) continue;
    report.segments.push_back({up, u, w, wp});
  }
  return report;
}

LatticeReport detect_lattice(const Graph& g, const BisectionVector& y, int c) {
  check_lengths(g, y);
  if (c < 1) throw Error("lattice width must be >= 1");
  if (c > 4) throw Error("lattice detector restricted to c <= 4");

  if (c == 1) {
    const PathSegmentReport paths = detect_path_segment(g, y);
    LatticeReport report;
    report.conclusive = paths.conclusive;
    for (const auto& s : paths.segments) report.lattices.push_back({{s.u}, {s.w}});
    return report;
  }

  LatticeReport report;
  report.conclusive = g.n() >= 10 * c;

  // Rung candidates: cut edges whose endpoints have no other cross edge.
  std::vector<std::pair<int, int>> rungs;
  for (auto [a, b] : g.edges()) {
    if (y[a] == y[b]) continue;
    const int u = y[a] > 0 ? a : b;
    const int w = y[a] > 0 ? b : a;
    int cross_u = 0, cross_w = 0;
    for (int t : g.neighbors(u))
      if (y[t] != y[u]) ++cross_u;
    for (int t : g.neighbors(w))
      if (y[t] != y[w]) ++cross_w;
    if (cross_u == 1 && cross_w == 1) rungs.emplace_back(u, w);
  }

  // Grow chains of rungs connected by rails on both sides.
  const int nr = static_cast<int>(rungs.size());
  std::vector<std::vector<int>> next(nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j)
      if (i != j && g.has_edge(rungs[i].first, rungs[j].first) &&
          g.has_edge(rungs[i].second, rungs[j].second))
        next[i].push_back(j);

  std::vector<int> chain;
  std::vector<bool> used(nr, false);
  auto emit = [&]() {
    Lattice lat;
    for (int idx : chain) {
      lat.u.push_back(rungs[idx].first);
      lat.w.push_back(rungs[idx].second);
    }
    // Interior rung vertices carry exactly their lattice edges plus
    // same-side attachments; end vertices must attach to the rest of
    // their side (the blobs in the construction).
    auto attachments = [&](int v, const std::vector<int>& members) {
      int count = 0;
      for (int t : g.neighbors(v))
        if (std::find(members.begin(), members.end(), t) == members.end()) ++count;
      return count;
    };
    std::vector<int> all = lat.u;
    all.insert(all.end(), lat.w.begin(), lat.w.end());
    const int ends[4] = {lat.u.front(), lat.u.back(), lat.w.front(), lat.w.back()};
    for (int e : ends)
      if (attachments(e, all) == 0) return;
    // canonical orientation to avoid duplicates: smaller end vertex first
    if (lat.u.front() > lat.u.back()) return;
    report.lattices.push_back(std::move(lat));
  };

  std::function<void(int, int)> grow = [&](int last, int depth) {
    if (depth == c) {
      emit();
      return;
    }
    for (int j : next[last]) {
      if (used[j]) continue;
      used[j] = true;
      chain.push_back(j);
      grow(j, depth + 1);
      chain.pop_back();
      used[j] = false;
    }
  };

  for (int i = 0; i < nr; ++i) {
    used[i] = true;
    chain = {i};
    grow(i, 1);
    used[i] = false;
  }
  return report;
}

bool detect_isolated_pair(const Graph& g) {
  int isolated = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) ++isolated;
  return isolated >= 2;
}

Witness witness_vector(const Graph& g, const BisectionVector& y,
                       const std::vector<int>& c_plus, const std::vector<int>& c_minus) {
  check_lengths(g, y);
  if (c_plus.empty() || c_minus.empty()) throw Error("witness sets must be nonempty");

  auto validate_side = [&](const std::vector<int>& set, int side, const char* name) {
    for (int v : set) {
      if (v < 0 || v >= g.n()) throw Error(std::string(name) + ": vertex out of range");
      if (y[v] != side) throw Error(std::string(name) + ": vertex not on the required side");
      bool cut_adjacent = false;
      for (int t : g.neighbors(v))
        if (y[t] != y[v]) cut_adjacent = true;
      if (!cut_adjacent) throw Error(std::string(name) + ": vertex not adjacent to the cut");
    }
  };
  validate_side(c_plus, +1, "C_plus");
  validate_side(c_minus, -1, "C_minus");

  Witness wit;
  BisectionVector yy = y;
  std::vector<int> big = c_plus, small = c_minus;
  if (big.size() < small.size()) {
    std::swap(big, small);
    yy = y.flipped();
    wit.params.swapped = true;
  }

  const int n = g.n();
  const int k = static_cast<int>(small.size());
  const int delta = static_cast<int>(big.size()) - k;
  const int l = n / 2 - (k + delta);

  wit.params.c_plus = big;
  wit.params.c_minus = small;
  wit.params.k = k;
  wit.params.delta = delta;
  wit.params.l = l;

  if (delta == 0) {
    if (!(3 * k < l))
      throw Error("size condition violated: need 3k < l, got 3*" + std::to_string(k) +
                  " >= " + std::to_string(l));
  } else {
    if (!(4 * k < l))
      throw Error("size condition violated: need 4k < l, got 4*" + std::to_string(k) +
                  " >= " + std::to_string(l));
    const double lim = std::min(4.0 * k * k / (l - 4.0 * k), 7.0 * l / 128.0);
    if (!(delta < lim))
      throw Error("size condition violated: need delta < min{4k^2/(l-4k), 7l/128} = " +
                  std::to_string(lim) + ", got delta = " + std::to_string(delta));
  }

  std::vector<char> in_plus(n, 0), in_minus(n, 0);
  for (int v : big) in_plus[v] = 1;
  for (int v : small) in_minus[v] = 1;

  int cross_inside = 0, boundary = 0;
  for (auto [a, b] : g.edges()) {
    const bool a_in = in_plus[a] || in_minus[a];
    const bool b_in = in_plus[b] || in_minus[b];
    if (a_in && b_in) {
      if ((in_plus[a] && in_minus[b]) || (in_minus[a] && in_plus[b])) ++cross_inside;
    } else if (a_in || b_in) {
      ++boundary;
    }
  }
  if (2 * cross_inside < boundary)
    throw Error("edge condition violated: need 2|E(C+,C-)| >= |E(C, rest)|, got 2*" +
                std::to_string(cross_inside) + " < " + std::to_string(boundary));

  const double kd = k, dd = delta, ld = l;
  const double denom = 4.0 * kd * kd + 4.0 * kd * dd - dd * ld;
  const double z = (2.0 * kd * ld + dd * ld + 2.0 * std::sqrt(kd * ld * (kd + dd) * (ld + dd))) / denom;
  const double beta = std::sqrt((dd + ld / (z * z)) / (dd + ld));
  wit.params.z = z;
  wit.params.beta = beta;

  wit.x.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (in_plus[v] || in_minus[v])
      wit.x[v] = z;
    else if (yy[v] > 0)
      wit.x[v] = -1.0;
    else
      wit.x[v] = -beta * z;
  }

  double sum = 0.0, sq_plus = 0.0, sq_minus = 0.0;
  for (int v = 0; v < n; ++v) {
    sum += wit.x[v];
    (yy[v] > 0 ? sq_plus : sq_minus) += wit.x[v] * wit.x[v];
  }
  if (std::fabs(sum) > 1e-9 || std::fabs(sq_plus - sq_minus) > 1e-9 * n)
    throw Error("witness vector failed its balance invariants");
  return wit;
}

TightnessVerdict disprove_tightness(const Graph& g, const BisectionVector& y,
                                    const std::vector<double>& x) {
  check_lengths(g, y);
  if (static_cast<int>(x.size()) != g.n()) throw Error("witness vector length mismatch");

  double sum = 0.0, sq_plus = 0.0, sq_minus = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    sum += x[i];
    (y[i] > 0 ? sq_plus : sq_minus) += x[i] * x[i];
  }
  if (std::fabs(sum) > 1e-7 || std::fabs(sq_plus - sq_minus) > 1e-7 * g.n())
    throw Error("unbalanced witness vector rejected");

  const CorrectionVector dy = correction_from_bisection(g, y);
  double excess = 0.0;
  for (auto [u, v] : g.edges()) excess += 2.0 * x[u] * x[v];
  for (int i = 0; i < g.n(); ++i) excess += dy[i] * x[i] * x[i];

  return {excess, excess > 1e-8};
}

StructureReport analyze_structure(const Graph& g, const BisectionVector& y,
                                  const CorrectionVector* d_star, int max_lattice_width) {
  check_lengths(g, y);
  StructureReport report;
  report.d_y = correction_from_bisection(g, y);

  const CorrectionVector& d_ref = d_star ? *d_star : report.d_y;
  report.eigen_residual = check_eigenvector_lemma(g, d_ref, y);
  if (d_star) {
    const AlphaRecovery rec = recover_alpha(g, y, *d_star);
    report.has_alpha = true;
    report.alpha = rec.alpha;
    report.off_span_residual = rec.off_span_residual;
  }

  for (auto [u, w] : balanced_same_neighbor_violations(g, y))
    report.violations.push_back({"same_neighbor_pair", {u}, {w}});
  for (const auto& s : detect_path_segment(g, y).segments)
    report.violations.push_back({"path_segment", {s.u_prime, s.u}, {s.w, s.w_prime}});
  for (int c = 2; c <= max_lattice_width; ++c)
    for (const auto& lat : detect_lattice(g, y, c).lattices)
      report.violations.push_back({"lattice", lat.u, lat.w});
  if (detect_isolated_pair(g)) report.violations.push_back({"isolated_pair", {}, {}});
  return report;
}

CorrectionVector monotone_d_update(const Graph& g_before, const BisectionVector& y,
                                   const CorrectionVector& d_opt,
                                   const std::vector<std::pair<int, int>>& edited_pairs) {
  check_lengths(g_before, y);
  const int n = g_before.n();
  if (static_cast<int>(d_opt.size()) != n) throw Error("correction length mismatch");

  const double target = 4.0 * cut_width(g_before, y) - 2.0 * g_before.m();
  double sum = 0.0;
  for (double v : d_opt) sum += v;
  const double shift = (target - sum) / n;

  CorrectionVector d(n);
  for (int i = 0; i < n; ++i) d[i] = d_opt[i] + shift;
  for (auto [u, v] : edited_pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error("bad edited pair");
    d[u] -= 1.0;
    d[v] -= 1.0;
  }
  return d;
}

}  // namespace bisect
