#include "bisect/oracle.hpp"

#include <bit>
#include <cstdint>

namespace bisect {

namespace {

void check_bounds(int n) {
  if (n < 2 || n % 2 != 0) throw Error("oracle requires an even vertex count >= 2");
  if (n > kOracleMaxN) throw Error("oracle capped at n <= " + std::to_string(kOracleMaxN));
}

BisectionVector from_mask(int n, std::uint32_t plus) {
  BisectionVector b;
  b.values.resize(n);
  for (int i = 0; i < n; ++i) b.values[i] = (plus >> i) & 1u ? 1 : -1;
  return b;
}

}  // namespace

void enumerate_bisections(int n, const std::function<void(const BisectionVector&)>& visit) {
  check_bounds(n);
  const int k = n / 2 - 1;  // companions of vertex 0 on the +1 side
  // Lexicographic k-combinations of {1..n-1} via the standard bit trick.
  if (k == 0) {
    visit(from_mask(n, 1u));
    return;
  }
  std::uint32_t comb = (1u << k) - 1u;                 // over vertices 1..n-1
  const std::uint32_t limit = 1u << (n - 1);
  while (comb < limit) {
    visit(from_mask(n, (comb << 1) | 1u));
    const std::uint32_t t = comb | (comb - 1);
    comb = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(comb) + 1));
  }
}

std::vector<BisectionVector> enumerate_bisections(int n) {
  std::vector<BisectionVector> out;
  enumerate_bisections(n, [&](const BisectionVector& b) { out.push_back(b); });
  return out;
}

OracleResult brute_force_bw(const Graph& g) {
  const int n = g.n();
  check_bounds(n);

  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }

  OracleResult res;
  res.bw = g.m() + 1;
  enumerate_bisections(n, [&](const BisectionVector& b) {
    std::uint32_t plus = 0;
    for (int i = 0; i < n; ++i)
      if (b[i] > 0) plus |= 1u << i;
    int cut = 0;
    std::uint32_t side = plus;
    while (side) {
      const int u = std::countr_zero(side);
      side &= side - 1;
      cut += std::popcount(nbr[u] & ~plus);
    }
    if (cut < res.bw) {
      res.bw = cut;
      res.optimal_bisections.clear();
    }
    if (cut == res.bw) res.optimal_bisections.push_back(b);
  });
  res.count = static_cast<int>(res.optimal_bisections.size());
  return res;
}

}  // namespace bisect
