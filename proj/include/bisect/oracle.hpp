#pragma once

#include <functional>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

// Exact ground truth for small graphs.
struct OracleResult {
  int bw = 0;
  std::vector<BisectionVector> optimal_bisections;  // canonical sign: first entry +1
  int count = 0;
};

inline constexpr int kOracleMaxN = 28;

// Visits every bisection sign-class exactly once (vertex 0 on the +1 side),
// lexicographic on the +1 set. n even, n <= 28.
void enumerate_bisections(int n, const std::function<void(const BisectionVector&)>& visit);

std::vector<BisectionVector> enumerate_bisections(int n);

// Exact minimum bisection width plus the complete optimal set.
OracleResult brute_force_bw(const Graph& g);

}  // namespace bisect
