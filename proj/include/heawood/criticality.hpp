#pragma once

#include <optional>
#include <vector>

#include "heawood/coloring.hpp"
#include "heawood/graph.hpp"

// Critical-graph machinery: exact chromatic number at desk scale,
// brute-force recognition of L-critical and k-critical graphs, the
// Kostochka-Stiebitz edge lower bound for clique-free list-critical graphs,
// and the counting contradiction that rules out a critical subgraph when a
// graph sits on a surface with every vertex on one face.

namespace heawood {

// chi(g) by iterative deepening on the palette size, reusing the list
// solver with identical lists {0..k-1}. Exponential worst case; meant for
// the same desk-scale instances as the rest of this header.
int chromatic_number(const Graph& g);

// One single-deletion subinstance of a criticality test. Vertex deletions
// keep original indices and leave the deleted vertex uncolored; edge
// deletions carry a total coloring that is proper once a-b is removed.
struct SubgraphCheck {
  bool vertex_deletion = false;
  int a = -1;  // deleted vertex, or one endpoint of the deleted edge
  int b = -1;  // other endpoint (edge deletions only)
  bool colorable = false;
  Coloring coloring;  // certificate for the reduced instance when colorable
};

struct CriticalityReport {
  bool is_critical = false;
  // Present when g itself is colorable, which already refutes criticality.
  std::optional<Coloring> base_coloring;
  // For a critical graph: one certificate per single-vertex and single-edge
  // deletion, vertices first. For an uncolorable graph that is still not
  // critical: exactly the one deletion that stays uncolorable.
  std::vector<SubgraphCheck> checks;
};

// g is L-critical iff g is not L-colorable but every proper subgraph is.
// Checking single-vertex and single-edge deletions suffices: colorability
// is monotone under subgraphs and every proper subgraph lies inside one
// single deletion. Refuses n > max_n.
CriticalityReport is_L_critical(const Graph& g, const ListAssignment& L,
                                int max_n = 12);

// Specializes is_L_critical to identical (k-1)-lists on every vertex, the
// classical k-critical notion. Needs k >= 1.
CriticalityReport is_k_critical(const Graph& g, int k, int max_n = 12);

// Edge lower bound of Kostochka and Stiebitz: a K_k-free graph that is
// critical for lists of size k-1 must satisfy 2e >= (k-1)n + k - 3. Pure
// arithmetic on the inequality; throws std::domain_error unless k >= 4,
// where the bound is stated.
bool ks_edge_bound(long long n, long long e, int k);

// Both sides of the edge-count squeeze on a hypothetical critical subgraph
// inside a graph of H+1 vertices drawn with all vertices on one face of a
// special-genus surface. `lower` is twice the edge count forced by
// criticality of an nprime-vertex subgraph plus the H-2 diagonals that
// triangulate the face; `upper` is the Euler-formula ceiling on the same
// quantity. A positive margin means the subgraph cannot exist.
struct Case3Report {
  long long heawood = 0;
  long long nprime = 0;
  long long lower = 0;
  long long upper = 0;
  long long margin = 0;  // lower - upper
  bool contradiction = false;
};

// Requires genus_window(epsilon).special and nprime in {H, H+1}; throws
// std::domain_error otherwise. The margin is reported, not asserted: at
// epsilon = 3 (the smallest special genus) the nprime = H+1 squeeze fails
// by one, and that anomaly is data the caller may want.
Case3Report case3_contradiction(long long epsilon, long long nprime);

}  // namespace heawood
