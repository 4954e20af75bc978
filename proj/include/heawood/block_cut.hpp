#pragma once

#include <vector>

#include "heawood/graph.hpp"

// Block decomposition (maximal 2-connected subgraphs, bridges, isolated
// vertices) with the block-cutvertex incidence used to walk the tree.

namespace heawood {

struct BlockCutTree {
  struct Block {
    std::vector<int> vertices;  // ascending
    long long edge_count = 0;
  };

  std::vector<Block> blocks;
  std::vector<int> cutvertices;  // ascending
  // block_cutvertices[b] lists indices into `cutvertices` lying on block b.
  std::vector<std::vector<int>> block_cutvertices;
  bool disconnected_input = false;

  bool is_cutvertex(int v) const;
  // Degree of a block node in the tree = number of cutvertices on it.
  int block_tree_degree(size_t b) const {
    return static_cast<int>(block_cutvertices[b].size());
  }
};

BlockCutTree block_cut_tree(const Graph& g);

// Sound lower bound on the Euler genus of g: genera of complete blocks add
// up (blocks meet only in cutvertices); other blocks contribute 0.
long long genus_lower_bound_blocks(const Graph& g);

}  // namespace heawood
