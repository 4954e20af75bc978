#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heawood/genus.hpp"

// Simple graphs on dense integer vertices 0..n-1, capped at 64 so adjacency
// rows and vertex sets fit in one machine word. No loops, no multi-edges.

namespace heawood {

class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph cycle(int n);  // n >= 3
  static Graph path(int n);   // n >= 1
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  uint64_t neighbors_mask(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v

  // Mask of all n vertices.
  uint64_t full_mask() const;
  bool connected() const;  // graphs on 0 or 1 vertices count as connected
  bool connected_within(uint64_t vertex_mask) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

// New graph on vs (result vertex i = vs[i]); vs must be distinct, in range.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);
Graph induced_subgraph(const Graph& g, uint64_t vertex_mask);

Graph complement(const Graph& g);

// Disjoint union of g1, g2 plus all edges between them; g2's vertices are
// shifted up by g1's count.
Graph join(const Graph& g1, const Graph& g2);

// Deletes v and renumbers vertices above it down by one.
Graph remove_vertex(const Graph& g, int v);

// Image of g under vertex map v -> perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Exact search for an m-clique, branch-and-bound over degree-sorted
// candidates. Returns one witness clique (ascending) or nullopt.
std::optional<std::vector<int>> contains_clique(const Graph& g, int m);

int clique_number(const Graph& g);

// Degree census of g with face_mask marking the vertices of the
// distinguished face; epsilon fixes which degrees count as high.
DegreeProfile degree_profile(const Graph& g, uint64_t face_mask,
                             long long epsilon);

}  // namespace heawood
