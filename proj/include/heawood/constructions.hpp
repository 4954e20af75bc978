#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "heawood/coloring.hpp"
#include "heawood/embedding.hpp"
#include "heawood/graph.hpp"

namespace heawood {

// K_n with an explicit set of edges removed. Pairs must be distinct valid
// vertex pairs; anything else throws std::invalid_argument.
Graph complete_minus(int n, const std::vector<std::pair<int, int>>& missing);

// The join K_{k-3} + C_5 on k+2 vertices, k >= 4 (throws std::domain_error
// below that). Its clique number is k-1 and it is k-critical.
Graph gallai_join(int k);

// A graph on a special-genus surface together with identical lists that are
// one short of what its coloring needs. For H = 3i+4 and eps = (3i^2+3i)/2
// the graph is K_{H-5} + C_5 with uniform (H-3)-lists. i <= 1 throws
// std::domain_error (the i = 1 surface does not carry the construction).
struct Prop12Instance {
  Graph graph;
  ListAssignment lists;
  long long epsilon = 0;
};
Prop12Instance prop12_family(int i);

// Outerplanar near-triangulation: the cycle v_0..v_{n-1} plus n-3 interior
// diagonals. Such graphs have exactly one proper 3-coloring up to renaming;
// `coloring` is the representative with coloring[0] = 0, coloring[1] = 1.
struct TriangulatedPolygon {
  Graph graph;
  std::vector<std::pair<int, int>> diagonals;  // u < v, lexicographic
  Coloring coloring;
  int size() const { return graph.vertex_count(); }
};

enum class PolygonShape {
  fan,    // all diagonals from v_0
  snake,  // alternating strip, high side first
  random  // seeded recursive splits
};

TriangulatedPolygon triangulated_polygon(int n, PolygonShape shape,
                                         uint64_t seed = 0);

// Glue one boundary edge of a triangulated polygon onto another. Both edges
// are given in cycle order ((u, u+1 mod n)). Without a twist, `first.first`
// merges with `second.second` and `first.second` with `second.first`; with a
// twist the identification is parallel (first.first with second.first). The
// quotient must stay a simple graph, otherwise std::invalid_argument explains
// which vertices or edges collide.
struct IdentificationSpec {
  std::pair<int, int> first;
  std::pair<int, int> second;
  bool twist = false;
};

// The quotient graph and a rotation embedding that keeps every vertex on one
// traced face (index `face_index`): the torus without a twist, the projective
// plane with one. `color_condition_met` reports whether some merged pair
// splits a color class of the polygon's forced 3-coloring; when it does, the
// quotient is no longer 3-colorable.
struct EdgeIdentification {
  Graph graph;
  RotationEmbedding embedding;
  int face_index = -1;
  std::vector<int> vertex_map;  // polygon vertex -> quotient vertex
  bool color_condition_met = false;
  bool induced_k4_free = false;
  int identified_edge_distance = 0;  // BFS distance between the glued edges
};

EdgeIdentification identify_edges(const TriangulatedPolygon& tp,
                                  const IdentificationSpec& spec);

// Edge-count feasibility of K_{H(eps)+1} minus one edge against the Euler
// bound for the surface, plus the known embeddability status on special
// genera (settled for H = 1, 4, 10 mod 12, open for H = 7 mod 12 except the
// smallest case, which is known not to embed).
enum class EmbedStatus { not_special, non_embeddable, embeddable, unknown };

struct FeasibilityReport {
  long long epsilon = 0;
  long long heawood = 0;
  long long edges = 0;  // edges of K_{H+1} minus one
  long long bound = 0;  // edge_bound(H+1, eps)
  bool numerically_feasible = false;
  bool special = false;
  EmbedStatus status = EmbedStatus::not_special;
};

FeasibilityReport k_h_plus1_minus_E_feasibility(long long epsilon);

}  // namespace heawood
