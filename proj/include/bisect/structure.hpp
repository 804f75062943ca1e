#pragma once

#include <string>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

using CorrectionVector = std::vector<double>;

// d^(y) = -diag(y) A y: entry i is (#cross-neighbors - #same-side-neighbors)
// of vertex i. Integer-valued; sum(d^(y)) = 4*cut_width(g,y) - 2m.
CorrectionVector correction_from_bisection(const Graph& g, const BisectionVector& y);

struct AlphaRecovery {
  double alpha = 0.0;
  double off_span_residual = 0.0;  // norm of (d_star - d^(y)) outside span{y, ones}
};

// Least-squares projection of d_star - d^(y) onto span{y, ones}.
AlphaRecovery recover_alpha(const Graph& g, const BisectionVector& y,
                            const CorrectionVector& d_star);

// ||B_S y - lambda_max y||_inf after renormalizing sum(d) to 4*cw(y) - 2m.
double check_eigenvector_lemma(const Graph& g, const CorrectionVector& d_star,
                               const BisectionVector& y);

// Cross pairs (u, w), not adjacent, both with balanced degree under y, whose
// neighborhoods differ. Nonempty output rules out h(G) = bw(G) when y is optimal.
std::vector<std::pair<int, int>> balanced_same_neighbor_violations(const Graph& g,
                                                                   const BisectionVector& y);

struct PathSegment {
  int u_prime, u, w, w_prime;
};

struct PathSegmentReport {
  std::vector<PathSegment> segments;
  bool conclusive = false;  // requires n >= 10
};

// Path segments u'-u-w-w' with deg(u)=deg(w)=2 straddling the cut
// (y_u = y_{u'} = +1 and y_w = y_{w'} = -1 up to a global flip).
PathSegmentReport detect_path_segment(const Graph& g, const BisectionVector& y);

struct Lattice {
  std::vector<int> u, w;  // u[i]-w[i] rungs, consecutive rails on each side
};

struct LatticeReport {
  std::vector<Lattice> lattices;
  bool conclusive = false;  // requires n >= 10c
};

// 2xc lattices straddling the cut: rungs u_i-w_i, rails u_i-u_{i+1} and
// w_i-w_{i+1}, lattice vertices with no extra cross edges, end vertices
// attached to the rest of their side. c = 1 delegates to the path detector.
LatticeReport detect_lattice(const Graph& g, const BisectionVector& y, int c);

// True iff the graph has at least two isolated vertices.
bool detect_isolated_pair(const Graph& g);

struct WitnessParams {
  std::vector<int> c_plus, c_minus;  // after the internal w.l.o.g. orientation
  int k = 0;
  int delta = 0;
  int l = 0;       // side size minus |larger set|: n/2 - (k + delta)
  double z = 0.0;
  double beta = 0.0;
  bool swapped = false;  // sides were flipped so that |C+| >= |C-|
};

struct Witness {
  WitnessParams params;
  std::vector<double> x;
};

// Test vector for the many-edges failure condition: -1 on side +1 outside
// C+, z on C+ and C-, -beta*z on side -1 outside C-. Throws naming the
// violated size or edge-count condition. Sum(x) = 0 and the per-side sums
// of squares agree by construction.
Witness witness_vector(const Graph& g, const BisectionVector& y,
                       const std::vector<int>& c_plus, const std::vector<int>& c_minus);

struct TightnessVerdict {
  double rayleigh_excess = 0.0;  // x^T (A + diag(d^(y))) x
  bool disproved = false;        // excess > 1e-8 => g(G,d) < cw(y) for every d = d^(y)+a*y
};

TightnessVerdict disprove_tightness(const Graph& g, const BisectionVector& y,
                                    const std::vector<double>& x);

// Explicit correction-vector update accompanying a monotone edit: -1 at both
// endpoints, applied to a d normalized so that sum(d) = 4*cw(y) - 2m on the
// pre-edit graph. Re-certifies the edited graph without re-optimizing.
CorrectionVector monotone_d_update(const Graph& g_before, const BisectionVector& y,
                                   const CorrectionVector& d_opt,
                                   const std::vector<std::pair<int, int>>& edited_pairs);

struct StructureFinding {
  std::string kind;  // same_neighbor_pair | path_segment | lattice | isolated_pair
  std::vector<int> u, w;
};

// Aggregated structural picture of (g, y): the induced correction vector,
// the decomposition of d_star against span{y, ones} when d_star is given,
// the eigenvector residual, and every detected failure pattern.
struct StructureReport {
  CorrectionVector d_y;
  bool has_alpha = false;
  double alpha = 0.0;
  double eigen_residual = 0.0;
  double off_span_residual = 0.0;
  std::vector<StructureFinding> violations;
};

StructureReport analyze_structure(const Graph& g, const BisectionVector& y,
                                  const CorrectionVector* d_star = nullptr,
                                  int max_lattice_width = 4);

}  // namespace bisect
