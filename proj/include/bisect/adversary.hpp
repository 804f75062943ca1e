#pragma once

#include <cstdint>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

enum class MoveKind { RemoveCutEdge, AddInnerEdge };

struct MonotoneMove {
  MoveKind kind;
  int u, v;
};

// Applies the moves in order, validating each against the evolving graph and
// the fixed reference bisection y. Errors carry the offending move index.
Graph apply_monotone_moves(const Graph& g, const BisectionVector& y,
                           const std::vector<MonotoneMove>& moves);

struct SampledMoves {
  std::vector<MonotoneMove> moves;
  bool exhausted = false;  // the valid move set emptied before `count` moves
};

// Uniform draws from the currently valid move set (cut-edge removals and
// same-side additions mixed), applied sequentially. Deterministic per seed.
SampledMoves sample_monotone_moves(const Graph& g, const BisectionVector& y, int count,
                                   std::uint64_t seed);

}  // namespace bisect
