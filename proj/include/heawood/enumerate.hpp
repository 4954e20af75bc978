#pragma once

#include <cstdint>
#include <vector>

#include "heawood/graph.hpp"

// Exhaustive small-graph enumeration up to isomorphism, backing the
// desk-scale verification sweeps. Canonical form is the lexicographically
// maximal upper-triangle adjacency bitstring over all vertex orderings,
// found by branch and bound with prefix pruning.

namespace heawood {

// Canonical code of g; equal codes on equal vertex counts mean isomorphic
// graphs. Needs n <= 11 so the n(n-1)/2 bits fit in 64.
uint64_t canonical_code(const Graph& g);

// The graph realizing a code, in canonical labeling.
Graph graph_from_code(int n, uint64_t code);

// All graphs on n vertices up to isomorphism (1 <= n <= 8), canonically
// labeled, sorted by code, cached after first use. Build the cache before
// entering parallel regions; afterwards reads are safe concurrently.
const std::vector<Graph>& all_graphs(int n);

// The connected ones, same ordering and caching.
const std::vector<Graph>& connected_graphs(int n);

}  // namespace heawood
