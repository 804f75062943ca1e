#pragma once

#include <cstdint>
#include <string>

#include "bisect/graph.hpp"

namespace bisect {

struct GeneratorParams {
  std::string family;  // "planted" | "planted_regular" | "hypercube" | "fixture" | "adversarial"
  double p = 0.0, q = 0.0;  // planted
  int r = 0, b = 0;         // planted_regular
  int k = 0;                // hypercube
  std::string name;         // fixture
  int moves = 0;            // adversarial
};

struct PlantedInstance {
  Graph graph;
  BisectionVector planted;
  GeneratorParams params;
  std::uint64_t seed = 0;
};

// Planted bisection model: a seeded balanced partition, each same-side pair
// joined with probability p, each cross pair with probability q. The
// degenerate endpoints p, q ∈ {0, 1} are allowed.
PlantedInstance gen_planted_bisection(int n, double p, double q, std::uint64_t seed);

// k-dimensional hypercube: 2^k vertices, edges between labels differing in one bit.
Graph gen_hypercube(int k);

// r-regular graph with planted bisection of cut width exactly b: b seeded
// cross edges plus per-side configuration-model pairings completing every
// degree to r. The sampling distribution is NOT uniform over
// {r-regular, bw = b}; the family is a test harness, not a sampler.
PlantedInstance gen_planted_regular(int n, int r, int b, std::uint64_t seed);

struct Fixture {
  Graph graph;
  BisectionVector reference;  // the bisection the construction is built around
  std::string name;
};

// Named failure fixtures:
//  "path"     two K4 blobs joined through a degree-2 cut pair (n = 10, bw = 1)
//  "isolated" C4 plus two isolated vertices (n = 6, bw = 2)
//  "lattice"  2x2 lattice between four K5 blobs (n = 24, bw = 2)
Fixture make_fixture(const std::string& name);

}  // namespace bisect
