#include "bisect/generators.hpp"

#include <algorithm>
#include <set>

#include "bisect/rng.hpp"

namespace bisect {

namespace {

void check_even_n(int n) {
  if (n < 2 || n % 2 != 0) throw Error("generator requires an even vertex count >= 2");
}

// Balanced ±1 assignment: positions 0..n/2-1 of a seeded permutation go to +1.
BisectionVector planted_sides(int n, Rng& rng) {
  const std::vector<int> perm = rng.permutation(n);
  std::vector<int> side(n, -1);
  for (int i = 0; i < n / 2; ++i) side[perm[i]] = 1;
  return BisectionVector(side);
}

}  // namespace

PlantedInstance gen_planted_bisection(int n, double p, double q, std::uint64_t seed) {
  check_even_n(n);
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw Error("edge probabilities must lie in [0, 1]");

  Rng rng(seed);
  BisectionVector side = planted_sides(n, rng);

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double prob = side[u] == side[v] ? p : q;
      if (rng.uniform01() < prob) edges.emplace_back(u, v);
    }

  PlantedInstance inst{Graph(n, std::move(edges)), std::move(side), {}, seed};
  inst.params.family = "planted";
  inst.params.p = p;
  inst.params.q = q;
  return inst;
}

Graph gen_hypercube(int k) {
  if (k < 1) throw Error("hypercube dimension must be >= 1");
  if (k > 24) throw Error("hypercube dimension too large");
  const int n = 1 << k;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(k) * (n / 2));
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < k; ++b) {
      const int u = v ^ (1 << b);
      if (v < u) edges.emplace_back(v, u);
    }
  return Graph(n, std::move(edges));
}

PlantedInstance gen_planted_regular(int n, int r, int b, std::uint64_t seed) {
  check_even_n(n);
  const int half = n / 2;
  if (r < 1 || r >= half)
    throw Error("infeasible (n, r, b): need 1 <= r < n/2");
  if (b < 0 || b > half * half) throw Error("cut width b out of range");
  const long long intra_stubs = static_cast<long long>(r) * half - b;
  if (intra_stubs < 0) throw Error("infeasible (n, r, b): more cut edges than degree allows");
  if (intra_stubs % 2 != 0)
    throw Error("infeasible (n, r, b): r*(n/2) - b must be even");

  Rng rng(seed);
  BisectionVector side = planted_sides(n, rng);
  std::vector<int> plus, minus;
  for (int v = 0; v < n; ++v) (side[v] > 0 ? plus : minus).push_back(v);

  const int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Cross edges first; greedily keep per-vertex cross degree <= r.
    std::vector<std::pair<int, int>> cross_pairs;
    cross_pairs.reserve(static_cast<std::size_t>(half) * half);
    for (int u : plus)
      for (int v : minus) cross_pairs.emplace_back(std::min(u, v), std::max(u, v));
    rng.shuffle(cross_pairs);

    std::vector<int> cross_deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    int placed = 0;
    for (const auto& [u, v] : cross_pairs) {
      if (placed == b) break;
      if (cross_deg[u] >= r || cross_deg[v] >= r) continue;
      ++cross_deg[u];
      ++cross_deg[v];
      edges.emplace_back(u, v);
      ++placed;
    }
    if (placed != b) continue;

    // Configuration-model pairing inside each side. A raw pairing almost
    // surely contains loops or duplicate edges once degrees grow, so instead
    // of restarting, offending pairs are repaired by endpoint swaps with
    // randomly chosen partner pairs (bounded passes, then reshuffle).
    auto pair_side = [&](const std::vector<int>& verts) -> bool {
      std::vector<int> stubs;
      for (int v : verts)
        for (int i = cross_deg[v]; i < r; ++i) stubs.push_back(v);
      if (stubs.size() % 2 != 0) return false;
      if (stubs.empty()) return true;

      auto key = [](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
      };
      for (int tries = 0; tries < 20; ++tries) {
        rng.shuffle(stubs);
        const std::size_t np = stubs.size() / 2;
        std::vector<std::pair<int, int>> pairs(np);
        std::multiset<std::pair<int, int>> used;
        for (std::size_t i = 0; i < np; ++i) {
          pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
          used.insert(key(pairs[i].first, pairs[i].second));
        }
        auto bad = [&](const std::pair<int, int>& p) {
          return p.first == p.second || used.count(key(p.first, p.second)) > 1;
        };

        bool clean = false;
        for (std::size_t pass = 0; pass < 40 * np && !clean; ++pass) {
          clean = true;
          for (std::size_t i = 0; i < np; ++i) {
            if (!bad(pairs[i])) continue;
            clean = false;
            const std::size_t j = static_cast<std::size_t>(rng.uniform_int(np));
            if (j == i) continue;
            // swap second endpoints of pairs i and j
            auto pi = pairs[i], pj = pairs[j];
            std::swap(pi.second, pj.second);
            if (pi.first == pi.second || pj.first == pj.second) continue;
            used.erase(used.find(key(pairs[i].first, pairs[i].second)));
            used.erase(used.find(key(pairs[j].first, pairs[j].second)));
            used.insert(key(pi.first, pi.second));
            used.insert(key(pj.first, pj.second));
            if (used.count(key(pi.first, pi.second)) > 1 ||
                used.count(key(pj.first, pj.second)) > 1) {
              // revert a swap that did not help
              used.erase(used.find(key(pi.first, pi.second)));
              used.erase(used.find(key(pj.first, pj.second)));
              used.insert(key(pairs[i].first, pairs[i].second));
              used.insert(key(pairs[j].first, pairs[j].second));
              continue;
            }
            pairs[i] = pi;
            pairs[j] = pj;
          }
        }
        if (!clean) continue;
        for (const auto& p : pairs) edges.push_back(key(p.first, p.second));
        return true;
      }
      return false;
    };

    const std::size_t before = edges.size();
    if (!pair_side(plus)) continue;
    if (!pair_side(minus)) {
      edges.resize(before);
      continue;
    }

    PlantedInstance inst{Graph(n, std::move(edges)), side, {}, seed};
    inst.params.family = "planted_regular";
    inst.params.r = r;
    inst.params.b = b;
    return inst;
  }
  throw Error("planted regular generator: attempt budget exhausted for (n=" +
              std::to_string(n) + ", r=" + std::to_string(r) + ", b=" + std::to_string(b) + ")");
}

Fixture make_fixture(const std::string& name) {
  if (name == "path") {
    // K4 on {0..3}, path 3-4-5-6, K4 on {6..9}; optimal cut is the edge {4,5}.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    for (int i = 6; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) edges.emplace_back(i, j);
    edges.emplace_back(3, 4);
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    BisectionVector y(std::vector<int>{1, 1, 1, 1, 1, -1, -1, -1, -1, -1});
    return {Graph(10, std::move(edges)), std::move(y), "path"};
  }
  if (name == "isolated") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    BisectionVector y(std::vector<int>{1, 1, -1, -1, 1, -1});
    return {Graph(6, std::move(edges)), std::move(y), "isolated"};
  }
  if (name == "lattice") {
    // Four K5 blobs (0-4, 5-9 on side +1; 10-14, 15-19 on side -1) and a 2x2
    // lattice u1=20, u2=21 / w1=22, w2=23 carrying the two cut edges.
    std::vector<std::pair<int, int>> edges;
    auto k5 = [&](int base) {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(base + i, base + j);
    };
    k5(0);
    k5(5);
    k5(10);
    k5(15);
    const int u1 = 20, u2 = 21, w1 = 22, w2 = 23;
    edges.emplace_back(0, u1);
    edges.emplace_back(5, u2);
    edges.emplace_back(10, w1);
    edges.emplace_back(15, w2);
    edges.emplace_back(u1, u2);
    edges.emplace_back(w1, w2);
    edges.emplace_back(u1, w1);
    edges.emplace_back(u2, w2);
    std::vector<int> side(24, -1);
    for (int v = 0; v < 10; ++v) side[v] = 1;
    side[u1] = side[u2] = 1;
    return {Graph(24, std::move(edges)), BisectionVector(side), "lattice"};
  }
  throw Error("unknown fixture: " + name + " (expected path | isolated | lattice)");
}

}  // namespace bisect
