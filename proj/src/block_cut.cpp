#include "heawood/block_cut.hpp"

#include <algorithm>

namespace heawood {

bool BlockCutTree::is_cutvertex(int v) const {
  return std::binary_search(cutvertices.begin(), cutvertices.end(), v);
}

namespace {

struct BlockDfs {
  const Graph& g;
  int timer = 0;
  std::vector<int> disc, low;
  std::vector<bool> is_cut;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<BlockCutTree::Block> blocks;

  explicit BlockDfs(const Graph& graph)
      : g(graph),
        disc(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        is_cut(graph.vertex_count(), false) {}

  void pop_block(std::pair<int, int> top_edge) {
    BlockCutTree::Block block;
    uint64_t verts = 0;
    for (;;) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts |= (1ULL << e.first) | (1ULL << e.second);
      ++block.edge_count;
      if (e == top_edge) break;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
      if (verts >> v & 1) block.vertices.push_back(v);
    blocks.push_back(std::move(block));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (disc[v] == -1) {
        ++children;
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != -1 || children > 1) is_cut[u] = true;
          pop_block({u, v});
        }
      } else if (v != parent && disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
  BlockDfs dfs(g);
  BlockCutTree out;
  int components = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dfs.disc[v] != -1) continue;
    ++components;
    if (g.degree(v) == 0) {
      BlockCutTree::Block isolated;
      isolated.vertices.push_back(v);
      dfs.blocks.push_back(std::move(isolated));
      dfs.disc[v] = dfs.timer++;
      continue;
    }
    dfs.dfs(v, -1);
  }
  out.blocks = std::move(dfs.blocks);
  out.disconnected_input = components > 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.is_cut[v]) out.cutvertices.push_back(v);
  out.block_cutvertices.resize(out.blocks.size());
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (int v : out.blocks[b].vertices) {
      auto it =
          std::lower_bound(out.cutvertices.begin(), out.cutvertices.end(), v);
      if (it != out.cutvertices.end() && *it == v)
        out.block_cutvertices[b].push_back(
            static_cast<int>(it - out.cutvertices.begin()));
    }
  return out;
}

long long genus_lower_bound_blocks(const Graph& g) {
  long long total = 0;
  for (const auto& block : block_cut_tree(g).blocks) {
    long long k = static_cast<long long>(block.vertices.size());
    if (k >= 3 && block.edge_count == k * (k - 1) / 2)
      total += min_genus_complete(k).epsilon;
  }
  return total;
}

}  // namespace heawood
