#include "bisect/adversary.hpp"

#include <algorithm>
#include <set>

#include "bisect/rng.hpp"

namespace bisect {

namespace {

struct EdgeState {
  int n;
  std::set<std::pair<int, int>> edges;

  explicit EdgeState(const Graph& g) : n(g.n()) {
    for (auto e : g.edges()) edges.insert(e);
  }

  bool has(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) != 0;
  }

  Graph to_graph() const {
    return Graph(n, {edges.begin(), edges.end()});
  }
};

void validate_and_apply(EdgeState& state, const BisectionVector& y, const MonotoneMove& mv,
                        std::size_t index) {
  int u = mv.u, v = mv.v;
  if (u > v) std::swap(u, v);
  const std::string at = " (move " + std::to_string(index) + ")";
  if (u < 0 || v >= state.n || u == v) throw Error("move endpoints invalid" + at);
  if (mv.kind == MoveKind::RemoveCutEdge) {
    if (y[u] == y[v]) throw Error("RemoveCutEdge endpoints on the same side" + at);
    if (!state.has(u, v)) throw Error("RemoveCutEdge on a missing edge" + at);
    state.edges.erase({u, v});
  } else {
    if (y[u] != y[v]) throw Error("AddInnerEdge endpoints on different sides" + at);
    if (state.has(u, v)) throw Error("AddInnerEdge on an existing edge" + at);
    state.edges.insert({u, v});
  }
}

}  // namespace

Graph apply_monotone_moves(const Graph& g, const BisectionVector& y,
                           const std::vector<MonotoneMove>& moves) {
  if (y.size() != g.n()) throw Error("bisection length does not match graph");
  EdgeState state(g);
  for (std::size_t i = 0; i < moves.size(); ++i) validate_and_apply(state, y, moves[i], i);
  return state.to_graph();
}

SampledMoves sample_monotone_moves(const Graph& g, const BisectionVector& y, int count,
                                   std::uint64_t seed) {
  if (y.size() != g.n()) throw Error("bisection length does not match graph");
  if (count < 0) throw Error("move count must be >= 0");

  EdgeState state(g);
  Rng rng(seed);
  SampledMoves out;
  out.moves.reserve(count);

  for (int step = 0; step < count; ++step) {
    std::vector<MonotoneMove> valid;
    for (const auto& [u, v] : state.edges)
      if (y[u] != y[v]) valid.push_back({MoveKind::RemoveCutEdge, u, v});
    for (int u = 0; u < state.n; ++u)
      for (int v = u + 1; v < state.n; ++v)
        if (y[u] == y[v] && !state.has(u, v)) valid.push_back({MoveKind::AddInnerEdge, u, v});

    if (valid.empty()) {
      out.exhausted = true;
      break;
    }
    const MonotoneMove mv = valid[rng.uniform_int(valid.size())];
    validate_and_apply(state, y, mv, out.moves.size());
    out.moves.push_back(mv);
  }
  return out;
}

}  // namespace bisect
