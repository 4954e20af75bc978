#include "heawood/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace heawood {

namespace {

struct CodeSearch {
  const Graph& g;
  int n;
  int total_bits;
  uint64_t best = 0;
  bool have_best = false;
  int placed[12] = {};

  explicit CodeSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        total_bits(graph.vertex_count() * (graph.vertex_count() - 1) / 2) {}

  void dfs(int depth, uint64_t used, uint64_t code, int len) {
    if (depth == n) {
      if (!have_best || code > best) {
        best = code;
        have_best = true;
      }
      return;
    }
    struct Cand {
      int v;
      uint64_t chunk;
      int degree;
    };
    Cand cands[12];
    int count = 0;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      uint64_t chunk = 0;
      for (int i = 0; i < depth; ++i)
        chunk = chunk << 1 | (g.has_edge(placed[i], v) ? 1 : 0);
      cands[count++] = {v, chunk, g.degree(v)};
    }
    // Large chunks first so a strong incumbent appears early.
    std::sort(cands, cands + count, [](const Cand& a, const Cand& b) {
      if (a.chunk != b.chunk) return a.chunk > b.chunk;
      if (a.degree != b.degree) return a.degree > b.degree;
      return a.v < b.v;
    });
    for (int c = 0; c < count; ++c) {
      uint64_t code2 = code << depth | cands[c].chunk;
      int len2 = len + depth;
      if (have_best && code2 < best >> (total_bits - len2)) continue;
      placed[depth] = cands[c].v;
      dfs(depth + 1, used | 1ULL << cands[c].v, code2, len2);
    }
  }
};

}  // namespace

uint64_t canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > 11)
    throw std::invalid_argument("canonical_code: " + std::to_string(n) +
                                " vertices exceed the 64-bit code limit");
  if (n <= 1) return 0;
  CodeSearch search(g);
  search.dfs(0, 0, 0, 0);
  return search.best;
}

Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  int pos = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code >> --pos & 1) g.add_edge(i, j);
  return g;
}

namespace {

std::mutex cache_mutex;
constexpr int kMaxEnumVertices = 8;
// Fixed-size so returned references stay valid as later levels build.
std::vector<Graph> cache_all[kMaxEnumVertices + 1];
std::vector<Graph> cache_connected[kMaxEnumVertices + 1];
int built_level = 0;

void build_up_to(int n) {
  for (int level = built_level + 1; level <= n; ++level) {
    std::set<uint64_t> codes;
    if (level == 1) {
      codes.insert(0);
    } else {
      for (const Graph& g : cache_all[level - 1]) {
        for (uint64_t mask = 0; mask < (1ULL << (level - 1)); ++mask) {
          Graph h(level);
          for (auto [u, v] : g.edges()) h.add_edge(u, v);
          for (uint64_t m = mask; m; m &= m - 1)
            h.add_edge(std::countr_zero(m), level - 1);
          codes.insert(canonical_code(h));
        }
      }
    }
    for (uint64_t code : codes) {
      Graph g = graph_from_code(level, code);
      cache_all[level].push_back(g);
      if (g.connected()) cache_connected[level].push_back(g);
    }
    built_level = level;
  }
}

void check_enum_range(int n) {
  if (n < 1 || n > kMaxEnumVertices)
    throw std::invalid_argument("graph enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumVertices) + ", got " +
                                std::to_string(n));
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  check_enum_range(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  build_up_to(n);
  return cache_all[n];
}

const std::vector<Graph>& connected_graphs(int n) {
  check_enum_range(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  build_up_to(n);
  return cache_connected[n];
}

}  // namespace heawood
