#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bisect {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ±1 assignment of vertices with zero sum.
struct BisectionVector {
  std::vector<int> values;

  BisectionVector() = default;
  explicit BisectionVector(std::vector<int> v);

  int size() const { return static_cast<int>(values.size()); }
  int operator[](int i) const { return values[i]; }

  BisectionVector flipped() const;
  // Canonical representative of the {x, −x} sign class: first entry +1.
  BisectionVector canonical() const { return values[0] > 0 ? *this : flipped(); }

  bool operator==(const BisectionVector& o) const { return values == o.values; }
  bool same_cut(const BisectionVector& o) const {
    return values == o.values || flipped().values == o.values;
  }
};

// Undirected simple graph: sorted edge list + adjacency lists.
// Vertex indices are 0-based everywhere.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // Dense symmetric 0/1 adjacency view, row-major n×n.
  std::vector<double> adjacency_dense() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;     // u < v, lexicographically sorted
  std::vector<std::vector<int>> adj_;
};

// Exact number of edges crossing the bisection x.
int cut_width(const Graph& g, const BisectionVector& x);

// Edge-list text format: "n m" header, then one "u v" line per edge with
// u < v, sorted lexicographically on output. UTF-8, LF.
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

}  // namespace bisect
