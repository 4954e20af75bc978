#include "heawood/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "heawood/block_cut.hpp"

namespace heawood {

ListAssignment ListAssignment::uniform(int n, int k) {
  ListAssignment L;
  L.lists.assign(n, {});
  for (auto& list : L.lists)
    for (int c = 0; c < k; ++c) list.push_back(c);
  return L;
}

uint64_t ListAssignment::mask(int v) const {
  uint64_t m = 0;
  for (int c : lists[v]) m |= 1ULL << c;
  return m;
}

void ListAssignment::normalize(int n) {
  if (size() != n)
    throw std::invalid_argument("ListAssignment: have " +
                                std::to_string(size()) + " lists for " +
                                std::to_string(n) + " vertices");
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int c : list)
      if (c < 0 || c >= 64)
        throw std::invalid_argument("ListAssignment: color " +
                                    std::to_string(c) + " outside [0, 64)");
  }
}

bool Coloring::total() const {
  return std::all_of(color.begin(), color.end(), [](int c) { return c >= 0; });
}

bool is_proper_list_coloring(const Graph& g, const ListAssignment& L,
                             const Coloring& c, bool require_total) {
  int n = g.vertex_count();
  if (static_cast<int>(c.color.size()) != n || L.size() != n) return false;
  for (int v = 0; v < n; ++v) {
    if (c.color[v] < 0) {
      if (require_total) return false;
      continue;
    }
    if (!std::count(L.lists[v].begin(), L.lists[v].end(), c.color[v]))
      return false;
    for (int u : g.neighbors(v))
      if (c.color[u] == c.color[v]) return false;
  }
  return true;
}

namespace {

// avail[v]: colors of L(v) not yet taken by colored neighbors.
bool solve_rec(const Graph& g, std::vector<uint64_t>& avail, Coloring& c,
               uint64_t uncolored) {
  if (uncolored == 0) return true;
  int pick = -1;
  int fewest = 65;
  for (uint64_t m = uncolored; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int options = std::popcount(avail[v]);
    if (options == 0) return false;
    if (options < fewest) {
      fewest = options;
      pick = v;
    }
  }
  uint64_t rest = uncolored & ~(1ULL << pick);
  for (uint64_t colors = avail[pick]; colors; colors &= colors - 1) {
    int col = std::countr_zero(colors);
    c.color[pick] = col;
    uint64_t touched = g.neighbors_mask(pick) & rest;
    uint64_t changed = 0;
    for (uint64_t m = touched; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (avail[u] >> col & 1) {
        avail[u] &= ~(1ULL << col);
        changed |= 1ULL << u;
      }
    }
    if (solve_rec(g, avail, c, rest)) return true;
    for (uint64_t m = changed; m; m &= m - 1)
      avail[std::countr_zero(m)] |= 1ULL << col;
  }
  c.color[pick] = -1;
  return false;
}

}  // namespace

std::optional<Coloring> solve_list_coloring(const Graph& g,
                                            const ListAssignment& L) {
  int n = g.vertex_count();
  ListAssignment norm = L;
  norm.normalize(n);
  std::vector<uint64_t> avail(n);
  for (int v = 0; v < n; ++v) {
    avail[v] = norm.mask(v);
    if (avail[v] == 0) return std::nullopt;
  }
  Coloring c = Coloring::blank(n);
  if (!solve_rec(g, avail, c, g.full_mask())) return std::nullopt;
  if (!is_proper_list_coloring(g, norm, c))
    throw std::logic_error("solve_list_coloring: produced invalid coloring");
  return c;
}

GreedyResult greedy_extend(const Graph& g, const ListAssignment& L,
                           const Coloring& partial,
                           const std::vector<int>& order) {
  int n = g.vertex_count();
  ListAssignment norm = L;
  norm.normalize(n);
  if (static_cast<int>(partial.color.size()) != n)
    throw std::invalid_argument("greedy_extend: partial coloring size");
  if (!is_proper_list_coloring(g, norm, partial, false))
    throw std::invalid_argument("greedy_extend: partial coloring invalid");
  uint64_t pending = 0;
  for (int v : order) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("greedy_extend: vertex out of range");
    if (partial.color[v] >= 0 || (pending >> v & 1))
      throw std::invalid_argument("greedy_extend: vertex repeated or colored");
    pending |= 1ULL << v;
  }
  for (int v = 0; v < n; ++v)
    if (partial.color[v] < 0 && !(pending >> v & 1))
      throw std::invalid_argument("greedy_extend: order misses vertex " +
                                  std::to_string(v));

  GreedyResult out;
  Coloring c = partial;
  for (int v : order) {
    uint64_t usable = norm.mask(v);
    for (int u : g.neighbors(v))
      if (c.color[u] >= 0) usable &= ~(1ULL << c.color[u]);
    if (usable == 0) {
      out.failed_vertex = v;
      return out;
    }
    c.color[v] = std::countr_zero(usable);
  }
  if (!is_proper_list_coloring(g, norm, c))
    throw std::logic_error("greedy_extend: produced invalid coloring");
  out.coloring = std::move(c);
  return out;
}

Lemma42Result lemma42_color(const Graph& g, const ListAssignment& L) {
  int k = g.vertex_count();
  ListAssignment norm = L;
  norm.normalize(k);
  Lemma42Result out;
  if (k < 3) {
    out.status = Lemma42Status::too_few_vertices;
    out.detail = "needs at least 3 vertices, got " + std::to_string(k);
    return out;
  }
  for (int v = 0; v < k; ++v)
    if (static_cast<int>(norm.lists[v].size()) < k - 2) {
      out.status = Lemma42Status::list_too_small;
      out.detail = "vertex " + std::to_string(v) + " has " +
                   std::to_string(norm.lists[v].size()) + " colors, needs " +
                   std::to_string(k - 2);
      return out;
    }
  int high = 0;
  for (int v = 0; v < k; ++v)
    if (g.degree(v) >= k - 2) ++high;
  if (high > k - 2) {
    out.status = Lemma42Status::too_many_high_degree;
    out.detail = std::to_string(high) + " vertices of degree >= " +
                 std::to_string(k - 2) + ", allowed " + std::to_string(k - 2);
    return out;
  }

  std::vector<int> order(k);
  for (int v = 0; v < k; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  GreedyResult greedy = greedy_extend(g, norm, Coloring::blank(k), order);
  if (!greedy.coloring)
    throw std::logic_error(
        "lemma42_color: greedy failed under satisfied preconditions");
  out.coloring = std::move(greedy.coloring);
  return out;
}

bool is_gallai_tree(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("is_gallai_tree: graph must be connected");
  for (const auto& block : block_cut_tree(g).blocks) {
    long long k = static_cast<long long>(block.vertices.size());
    if (block.edge_count == k * (k - 1) / 2) continue;  // complete (K1, K2 too)
    if (k >= 3 && (k % 2 == 1) && block.edge_count == k) continue;  // odd cycle
    return false;
  }
  return true;
}

std::optional<std::vector<int>> find_f_bad_clique(const Graph& g,
                                                  uint64_t face_mask,
                                                  long long epsilon) {
  long long h = heawood_number(epsilon);
  if (face_mask & ~g.full_mask())
    throw std::invalid_argument("find_f_bad_clique: face mask outside graph");
  std::vector<int> face;
  for (uint64_t m = face_mask; m; m &= m - 1)
    face.push_back(std::countr_zero(m));
  if (static_cast<long long>(face.size()) < h - 1) return std::nullopt;
  auto inner = contains_clique(induced_subgraph(g, face),
                               static_cast<int>(h - 1));
  if (!inner) return std::nullopt;
  std::vector<int> out;
  for (int idx : *inner) out.push_back(face[idx]);
  return out;
}

}  // namespace heawood
