#include "bisect/graph.hpp"

#include <algorithm>
#include <sstream>

namespace bisect {

BisectionVector::BisectionVector(std::vector<int> v) : values(std::move(v)) {
  long long sum = 0;
  for (int e : values) {
    if (e != 1 && e != -1) throw Error("bisection vector entries must be +1 or -1");
    sum += e;
  }
  if (sum != 0) throw Error("bisection vector must have zero sum");
}

BisectionVector BisectionVector::flipped() const {
  BisectionVector out;
  out.values.reserve(values.size());
  for (int e : values) out.values.push_back(-e);
  return out;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n <= 0) throw Error("graph needs a positive vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n) throw Error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error("duplicate edge " + std::to_string(edges[i].first) + " " +
                  std::to_string(edges[i].second));
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<double> Graph::adjacency_dense() const {
  std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
  for (auto [u, v] : edges_) {
    a[static_cast<std::size_t>(u) * n_ + v] = 1.0;
    a[static_cast<std::size_t>(v) * n_ + u] = 1.0;
  }
  return a;
}

Graph Graph::with_edge(int u, int v) const {
  auto e = edges_;
  e.emplace_back(u, v);
  return Graph(n_, std::move(e));
}

Graph Graph::without_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto e = edges_;
  auto it = std::find(e.begin(), e.end(), std::make_pair(u, v));
  if (it == e.end()) throw Error("edge to remove does not exist");
  e.erase(it);
  return Graph(n_, std::move(e));
}

int cut_width(const Graph& g, const BisectionVector& x) {
  if (x.size() != g.n()) throw Error("bisection length does not match graph");
  int cut = 0;
  for (auto [u, v] : g.edges())
    if (x[u] != x[v]) ++cut;
  return cut;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    if (required) throw Error("unexpected end of edge list at line " + std::to_string(lineno + 1));
    return false;
  };

  if (!next_line(false)) throw Error("empty edge-list document");
  long long n, m;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw Error("line 1: expected header \"n m\"");
  }
  if (n <= 0) throw Error("line 1: vertex count must be positive");
  if (m < 0) throw Error("line 1: edge count must be nonnegative");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    next_line(true);
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw Error("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 0 || v >= n)
      throw Error("line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v)
      throw Error("line " + std::to_string(lineno) + ": self-loop");
    if (u >= v)
      throw Error("line " + std::to_string(lineno) + ": endpoints must satisfy u < v");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(false))
    throw Error("line " + std::to_string(lineno) + ": trailing content after " +
                std::to_string(m) + " edges");

  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw Error("duplicate edge " + std::to_string(sorted[i].first) + " " +
                  std::to_string(sorted[i].second));

  return Graph(static_cast<int>(n), std::move(edges));
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace bisect
