#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "heawood/coloring.hpp"

// Search for uncolorable list assignments with prescribed list sizes.
//
// Exhausting all assignments naively is hopeless even at n = 7, so the
// search is anchored on two exact reductions:
//
//  1. Any uncolorable assignment admits no injective choice of colors (an
//     all-distinct choice would be proper), so by Hall's theorem some vertex
//     set W has fewer colors in its lists' union than members, and W can be
//     shrunk until the union has exactly |W| - 1 colors. Enumeration
//     therefore starts from W and a surjective cover of |W| - 1 colors,
//     instead of from a free palette.
//
//  2. If some vertex v holds a color appearing on none of its neighbors,
//     the restriction to G - v is already uncolorable, so that assignment
//     is reachable from the smaller instance. Assignments where every color
//     is mirrored on a neighbor are searched directly; the rest are covered
//     by recursing on deleted-vertex subsets (memoized by vertex mask).
//
// On top of that, vertices whose list size exceeds their degree never block
// a coloring and are peeled off first, and components are searched
// independently.

namespace heawood {

namespace {

using Witness = std::map<int, std::vector<int>>;  // vertex -> its list

std::vector<int> canonical_list(int size) {
  std::vector<int> out;
  for (int c = 0; c < size; ++c) out.push_back(c);
  return out;
}

// Exhaustive colorability on <= 8 local vertices given availability masks.
// On success the chosen colors are written into *out when provided.
bool colorable_masks(const std::array<uint64_t, 8>& adj,
                     std::array<uint64_t, 8> avail, uint64_t todo,
                     std::array<int8_t, 8>* out = nullptr) {
  while (todo) {
    int pick = -1;
    int fewest = 65;
    for (uint64_t m = todo; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int options = std::popcount(avail[v]);
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        pick = v;
      }
    }
    if (fewest > 1) {
      // Branch.
      uint64_t rest = todo & ~(1ULL << pick);
      for (uint64_t colors = avail[pick]; colors; colors &= colors - 1) {
        uint64_t color_bit = colors & (-colors);
        std::array<uint64_t, 8> next = avail;
        for (uint64_t m = adj[pick] & rest; m; m &= m - 1)
          next[std::countr_zero(m)] &= ~color_bit;
        if (colorable_masks(adj, next, rest, out)) {
          if (out) (*out)[pick] = static_cast<int8_t>(std::countr_zero(color_bit));
          return true;
        }
      }
      return false;
    }
    // Forced choice, no branching needed.
    uint64_t color_bit = avail[pick] & (-avail[pick]);
    if (out) (*out)[pick] = static_cast<int8_t>(std::countr_zero(color_bit));
    todo &= ~(1ULL << pick);
    for (uint64_t m = adj[pick] & todo; m; m &= m - 1)
      avail[std::countr_zero(m)] &= ~color_bit;
  }
  return true;
}

// The Hall-anchored enumeration over one connected component in which every
// list size is within [1, degree]. The deficient set W can additionally be
// taken minimal, and minimality forces every color of the union to sit in
// at least two W lists: dropping the sole carrier of a color would leave a
// smaller deficient set. That double-coverage requirement prunes most of
// the W phase.
struct ComponentSearch {
  const Graph& g;
  const std::vector<int>& sizes;

  std::vector<int> verts;          // component vertices, ascending
  int m = 0;
  std::array<uint64_t, 8> adj{};   // local adjacency
  std::array<int, 8> local_size{};

  std::array<int, 8> order{};      // W prefix then the rest
  int w_count = 0;
  int u_target = 0;
  std::array<int, 9> w_suffix_capacity{};  // list slots left in the W phase

  std::array<uint64_t, 8> chosen{};  // local vertex -> color mask, 0 = unset
  uint64_t assigned = 0;
  // One proper coloring of the assigned prefix, per depth. Kept valid along
  // the whole search path: most new lists extend it greedily, and a full
  // re-solve happens only when the greedy step finds no free color. An
  // unsolvable re-solve is exactly an uncolorable assignment.
  std::array<std::array<int8_t, 8>, 9> prefix_coloring{};
  std::optional<Witness> found;

  ComponentSearch(const Graph& graph, const std::vector<int>& list_sizes,
                  uint64_t comp_mask)
      : g(graph), sizes(list_sizes) {
    for (uint64_t mm = comp_mask; mm; mm &= mm - 1)
      verts.push_back(std::countr_zero(mm));
    m = static_cast<int>(verts.size());
    for (int a = 0; a < m; ++a) {
      local_size[a] = sizes[verts[a]];
      for (int b = 0; b < m; ++b)
        if (b != a && g.has_edge(verts[a], verts[b])) adj[a] |= 1ULL << b;
    }
  }

  // Every color of a fully surrounded vertex must appear on a neighbor;
  // checked as soon as the surrounding completes, which keeps stray fresh
  // colors from spawning dead subtrees.
  bool mirrored_colors_ok(int x) {
    uint64_t to_check = (1ULL << x) | adj[x];
    for (uint64_t mm = to_check; mm; mm &= mm - 1) {
      int y = std::countr_zero(mm);
      if (!(assigned >> y & 1)) continue;
      if ((adj[y] & assigned) != adj[y]) continue;  // not yet surrounded
      uint64_t neighborhood = 0;
      for (uint64_t nm = adj[y]; nm; nm &= nm - 1)
        neighborhood |= chosen[std::countr_zero(nm)];
      if (chosen[y] & ~neighborhood) return false;
    }
    return true;
  }

  bool assigned_prefix_uncolorable(std::array<int8_t, 8>* out) {
    std::array<uint64_t, 8> sub_adj{}, avail{};
    for (int a = 0; a < m; ++a) {
      sub_adj[a] = adj[a] & assigned;
      avail[a] = chosen[a];
    }
    return !colorable_masks(sub_adj, avail, assigned, out);
  }

  void emit_witness() {
    Witness w;
    for (int a = 0; a < m; ++a) {
      std::vector<int> list;
      if (assigned >> a & 1)
        for (uint64_t mm = chosen[a]; mm; mm &= mm - 1)
          list.push_back(std::countr_zero(mm));
      else
        list = canonical_list(local_size[a]);
      w[verts[a]] = std::move(list);
    }
    found = std::move(w);
  }

  void descend(int pos, int e) {
    if (found) return;
    // W must cover exactly u_target colors.
    if (pos == w_count && e != u_target) return;
    if (pos == m) return;  // prefix_coloring proves the leaf colorable
    int x = order[pos];
    int s = local_size[x];
    bool in_w = pos < w_count;
    // The remaining W lists must still be able to reach the target.
    if (in_w && e + w_suffix_capacity[pos] < u_target) return;
    for (int t = 0; t <= s && e + t <= 64; ++t) {
      if (in_w) {
        if (e + t > u_target) break;
        if (pos + 1 == w_count && e + t != u_target) continue;
      }
      int old_needed = s - t;
      if (old_needed > e) continue;
      uint64_t fresh = t ? ((1ULL << t) - 1) << e : 0;
      // All old_needed-subsets of [0, e), low to high.
      uint64_t old_mask = old_needed ? (1ULL << old_needed) - 1 : 0;
      uint64_t limit = e ? 1ULL << e : 1;
      for (;;) {
        if (old_mask >= limit && old_needed) break;
        chosen[x] = old_mask | fresh;
        assigned |= 1ULL << x;
        bool viable = mirrored_colors_ok(x);
        if (viable) {
          // Extend the running proper coloring, or re-solve on conflict.
          uint64_t taken = 0;
          for (uint64_t mm = adj[x] & assigned; mm; mm &= mm - 1)
            taken |= uint64_t{1} << prefix_coloring[pos][std::countr_zero(mm)];
          uint64_t free = chosen[x] & ~taken;
          if (free) {
            prefix_coloring[pos + 1] = prefix_coloring[pos];
            prefix_coloring[pos + 1][x] =
                static_cast<int8_t>(std::countr_zero(free));
          } else if (assigned_prefix_uncolorable(&prefix_coloring[pos + 1])) {
            emit_witness();
            viable = false;
          }
        }
        if (viable) descend(pos + 1, e + t);
        assigned &= ~(1ULL << x);
        chosen[x] = 0;
        if (found) return;
        if (!old_needed) break;
        // Gosper's hack: next subset of the same size.
        uint64_t c = old_mask & (-old_mask);
        uint64_t r = old_mask + c;
        old_mask = (((r ^ old_mask) >> 2) / c) | r;
      }
    }
  }

  // Placement order: W first, then the rest, each phase greedily picking
  // the vertex with the most already placed neighbors so the mirror check
  // above fires as early as possible.
  void build_order(uint64_t wmask) {
    uint64_t placed = 0;
    int at = 0;
    const uint64_t phases[2] = {wmask, ~wmask & ((uint64_t{1} << m) - 1)};
    for (uint64_t phase_mask : phases) {
      uint64_t left = phase_mask;
      while (left) {
        int best = -1, best_score = -1;
        for (uint64_t mm = left; mm; mm &= mm - 1) {
          int v = std::countr_zero(mm);
          int score = std::popcount(adj[v] & placed);
          if (score > best_score) {
            best = v;
            best_score = score;
          }
        }
        order[at++] = best;
        placed |= 1ULL << best;
        left &= ~(1ULL << best);
      }
    }
  }

  std::optional<Witness> run() {
    for (uint64_t wmask = 0; wmask < (1ULL << m); ++wmask) {
      int wc = std::popcount(wmask);
      if (wc < 2) continue;
      u_target = wc - 1;
      bool feasible = true;
      int capacity = 0;
      for (uint64_t mm = wmask; mm; mm &= mm - 1) {
        int size = local_size[std::countr_zero(mm)];
        if (size > u_target) feasible = false;
        capacity += size;
      }
      if (!feasible || capacity < u_target) continue;
      w_count = wc;
      build_order(wmask);
      w_suffix_capacity[w_count] = 0;
      for (int p = w_count - 1; p >= 0; --p)
        w_suffix_capacity[p] = w_suffix_capacity[p + 1] + local_size[order[p]];
      descend(0, 0);
      if (found) return found;
    }
    return std::nullopt;
  }
};

struct BadSearch {
  const Graph& g;
  const std::vector<int>& sizes;
  std::unordered_map<uint64_t, std::optional<Witness>> memo;

  BadSearch(const Graph& graph, const std::vector<int>& list_sizes)
      : g(graph), sizes(list_sizes) {}

  int degree_in(int v, uint64_t mask) const {
    return std::popcount(g.neighbors_mask(v) & mask);
  }

  void fill_canonical(Witness& w, uint64_t mask) const {
    for (uint64_t mm = mask; mm; mm &= mm - 1) {
      int v = std::countr_zero(mm);
      if (!w.count(v)) w[v] = canonical_list(sizes[v]);
    }
  }

  std::optional<Witness> find(uint64_t mask) {
    if (mask == 0) return std::nullopt;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::optional<Witness> result = compute(mask);
    memo[mask] = result;
    return result;
  }

  std::optional<Witness> compute(uint64_t mask) {
    // An empty list is its own witness.
    for (uint64_t mm = mask; mm; mm &= mm - 1) {
      int v = std::countr_zero(mm);
      if (sizes[v] == 0) {
        Witness w;
        w[v] = {};
        fill_canonical(w, mask);
        return w;
      }
    }

    // Vertices with more colors than neighbors never block a coloring:
    // peeling them changes nothing in either direction.
    uint64_t reduced = mask;
    for (bool changed = true; changed;) {
      changed = false;
      for (uint64_t mm = reduced; mm; mm &= mm - 1) {
        int v = std::countr_zero(mm);
        if (sizes[v] > degree_in(v, reduced)) {
          reduced &= ~(1ULL << v);
          changed = true;
        }
      }
    }
    if (reduced != mask) {
      auto sub = find(reduced);
      if (!sub) return std::nullopt;
      Witness w = *sub;
      fill_canonical(w, mask);
      return w;
    }

    // Split into components; a bad restriction to one lifts.
    uint64_t comp = 0;
    {
      uint64_t seen = mask & (-mask);
      for (;;) {
        uint64_t frontier = 0;
        for (uint64_t mm = seen; mm; mm &= mm - 1)
          frontier |= g.neighbors_mask(std::countr_zero(mm));
        frontier &= mask;
        if ((frontier | seen) == seen) break;
        seen |= frontier;
      }
      comp = seen;
    }
    if (comp != mask) {
      for (uint64_t rest = mask; rest;) {
        uint64_t piece = rest & (-rest);
        uint64_t seen = piece;
        for (;;) {
          uint64_t frontier = 0;
          for (uint64_t mm = seen; mm; mm &= mm - 1)
            frontier |= g.neighbors_mask(std::countr_zero(mm));
          frontier &= mask;
          if ((frontier | seen) == seen) break;
          seen |= frontier;
        }
        rest &= ~seen;
        if (auto sub = find(seen)) {
          Witness w = *sub;
          fill_canonical(w, mask);
          return w;
        }
      }
      return std::nullopt;
    }

    // Connected, fully reduced: direct search over mirrored-color
    // assignments, then the deleted-vertex subproblems.
    ComponentSearch search(g, sizes, mask);
    if (auto w = search.run()) return w;
    for (uint64_t mm = mask; mm; mm &= mm - 1) {
      int v = std::countr_zero(mm);
      if (auto sub = find(mask & ~(1ULL << v))) {
        Witness w = *sub;
        fill_canonical(w, mask);
        return w;
      }
    }
    return std::nullopt;
  }
};

ListAssignment witness_to_assignment(const Witness& w, int n) {
  ListAssignment L;
  L.lists.assign(n, {});
  for (const auto& [v, list] : w) L.lists[v] = list;
  return L;
}

void check_sizes(const Graph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.vertex_count())
    throw std::invalid_argument("list sizes: need one entry per vertex");
  for (int s : sizes)
    if (s < 0 || s >= 64)
      throw std::invalid_argument("list sizes: entries must be in [0, 64)");
}

}  // namespace

std::optional<ListAssignment> find_bad_assignment(const Graph& g,
                                                  const std::vector<int>& sizes) {
  check_sizes(g, sizes);
  // The recursion never crosses components, and inside a component of m
  // vertices the degree reduction caps every surviving list at m - 1, so
  // m <= 8 keeps all color sets inside one 64-bit mask.
  for (int v = 0; v < g.vertex_count(); ++v) {
    uint64_t comp = 1ULL << v;
    for (bool grew = true; grew;) {
      grew = false;
      for (uint64_t mm = comp; mm; mm &= mm - 1) {
        uint64_t nb = g.neighbors_mask(std::countr_zero(mm));
        if (nb & ~comp) {
          comp |= nb;
          grew = true;
        }
      }
    }
    if (std::popcount(comp) > 8)
      throw std::invalid_argument(
          "find_bad_assignment: search capped at components of <= 8 vertices");
  }
  if (g.vertex_count() == 0) return std::nullopt;
  BadSearch search(g, sizes);
  auto w = search.find(g.full_mask());
  if (!w) return std::nullopt;
  ListAssignment L = witness_to_assignment(*w, g.vertex_count());
  L.normalize(g.vertex_count());
  if (solve_list_coloring(g, L))
    throw std::logic_error("find_bad_assignment: witness is colorable");
  return L;
}

std::optional<ListAssignment> find_bad_assignment_naive(
    const Graph& g, const std::vector<int>& sizes) {
  check_sizes(g, sizes);
  int n = g.vertex_count();
  if (n > 6)
    throw std::invalid_argument(
        "find_bad_assignment_naive: reference oracle capped at n <= 6");
  if (n == 0) return std::nullopt;
  int total = 0;
  for (int s : sizes) total += s;
  if (total > 62)
    throw std::invalid_argument(
        "find_bad_assignment_naive: combined list sizes exceed the palette");

  std::vector<uint64_t> chosen(n, 0);
  std::optional<ListAssignment> found;

  auto leaf = [&]() {
    ListAssignment L;
    L.lists.assign(n, {});
    for (int v = 0; v < n; ++v)
      for (uint64_t mm = chosen[v]; mm; mm &= mm - 1)
        L.lists[v].push_back(std::countr_zero(mm));
    if (!solve_list_coloring(g, L)) found = L;
  };

  // Canonical growth: each vertex takes any old colors plus a consecutive
  // run of fresh ones.
  auto rec = [&](auto&& self, int v, int e) -> void {
    if (found) return;
    if (v == n) {
      leaf();
      return;
    }
    int s = sizes[v];
    for (int t = 0; t <= s && e + t <= 62; ++t) {
      int old_needed = s - t;
      if (old_needed > e) continue;
      uint64_t fresh = t ? ((1ULL << t) - 1) << e : 0;
      uint64_t old_mask = old_needed ? (1ULL << old_needed) - 1 : 0;
      uint64_t limit = e ? 1ULL << e : 1;
      for (;;) {
        if (old_needed && old_mask >= limit) break;
        chosen[v] = old_mask | fresh;
        self(self, v + 1, e + t);
        chosen[v] = 0;
        if (found) return;
        if (!old_needed) break;
        uint64_t c = old_mask & (-old_mask);
        uint64_t r = old_mask + c;
        old_mask = (((r ^ old_mask) >> 2) / c) | r;
      }
    }
  };
  rec(rec, 0, 0);
  return found;
}

ChoosabilityResult degree_choosable(const Graph& g, int brute_bound) {
  if (!g.connected())
    throw std::invalid_argument("degree_choosable: graph must be connected");
  ChoosabilityResult out;
  if (g.vertex_count() <= brute_bound) {
    std::vector<int> sizes(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) sizes[v] = g.degree(v);
    out.witness = find_bad_assignment(g, sizes);
    out.choosable = !out.witness.has_value();
    out.verified_by_search = true;
  } else {
    out.choosable = !is_gallai_tree(g);
    out.verified_by_search = false;
  }
  return out;
}

ChoosabilityResult is_k_choosable(const Graph& g, int k,
                                  const ChoosabilityLimits& limits) {
  if (k < 1) throw std::invalid_argument("is_k_choosable: needs k >= 1");
  if (g.vertex_count() > limits.max_n || k > limits.max_k)
    throw std::invalid_argument(
        "is_k_choosable: instance exceeds the search caps (n <= " +
        std::to_string(limits.max_n) + ", k <= " + std::to_string(limits.max_k) +
        ")");
  ChoosabilityResult out;
  out.witness =
      find_bad_assignment(g, std::vector<int>(g.vertex_count(), k));
  out.choosable = !out.witness.has_value();
  out.verified_by_search = true;
  return out;
}

}  // namespace heawood
