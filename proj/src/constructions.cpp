#include "heawood/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "heawood/genus.hpp"

namespace heawood {

Graph complete_minus(int n, const std::vector<std::pair<int, int>>& missing) {
  Graph g = Graph::complete(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : missing) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("complete_minus: vertex out of range in (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("complete_minus: pair (" +
                                  std::to_string(u) + ", " +
                                  std::to_string(v) + ") is not an edge");
    auto [lo, hi] = std::minmax(u, v);
    if (!seen.insert({lo, hi}).second)
      throw std::invalid_argument("complete_minus: duplicate pair (" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + ")");
    g.remove_edge(lo, hi);
  }
  return g;
}

Graph gallai_join(int k) {
  if (k < 4) throw std::domain_error("gallai_join: k must be at least 4");
  return join(Graph::complete(k - 3), Graph::cycle(5));
}

Prop12Instance prop12_family(int i) {
  if (i <= 1)
    throw std::domain_error(
        "prop12_family: no instance below i = 2; the smallest surface in the "
        "family does not carry the construction");
  long long h = 3LL * i + 4;
  Prop12Instance inst{gallai_join((int)h - 2),
                      ListAssignment::uniform((int)h, (int)h - 3),
                      3LL * i * (i + 1) / 2};
  return inst;
}

namespace {

// All pairwise-adjacent triples. In convex position any such triple bounds an
// empty region, so these are exactly the interior triangle faces.
std::vector<std::array<int, 3>> polygon_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (auto [u, v] : g.edges())
    for (int w = v + 1; w < g.vertex_count(); ++w)
      if (g.has_edge(u, w) && g.has_edge(v, w)) out.push_back({u, v, w});
  return out;
}

Coloring forced_three_coloring(const Graph& g) {
  int n = g.vertex_count();
  auto tris = polygon_triangles(g);
  Coloring out = Coloring::blank(n);
  std::vector<int>& c = out.color;
  c[0] = 0;
  c[1] = 1;
  int colored = 2;
  bool progress = true;
  while (colored < n && progress) {
    progress = false;
    for (auto [a, b, d] : tris) {
      int known = (c[a] >= 0) + (c[b] >= 0) + (c[d] >= 0);
      if (known != 2) continue;
      if (c[a] < 0) c[a] = 3 - c[b] - c[d];
      else if (c[b] < 0) c[b] = 3 - c[a] - c[d];
      else c[d] = 3 - c[a] - c[b];
      ++colored;
      progress = true;
    }
  }
  if (colored < n)
    throw std::logic_error("triangulated_polygon: coloring did not propagate");
  for (auto [u, v] : g.edges())
    if (c[u] == c[v])
      throw std::logic_error("triangulated_polygon: forced coloring improper");
  return out;
}

void split_range(int a, int b, std::mt19937_64& rng,
                 std::vector<std::pair<int, int>>& diag) {
  if (b - a < 2) return;
  int k = (int)std::uniform_int_distribution<int>(a + 1, b - 1)(rng);
  if (k - a >= 2) diag.push_back({a, k});
  if (b - k >= 2) diag.push_back({k, b});
  split_range(a, k, rng, diag);
  split_range(k, b, rng, diag);
}

}  // namespace

TriangulatedPolygon triangulated_polygon(int n, PolygonShape shape,
                                         uint64_t seed) {
  if (n < 4)
    throw std::invalid_argument("triangulated_polygon: need at least 4 "
                                "vertices");
  std::vector<std::pair<int, int>> diag;
  switch (shape) {
    case PolygonShape::fan:
      for (int j = 2; j <= n - 2; ++j) diag.push_back({0, j});
      break;
    case PolygonShape::snake: {
      diag.push_back({1, n - 1});
      int lo = 1, hi = n - 1, turn = 0;
      while (hi - lo > 2) {
        if (turn == 0) diag.push_back({lo, --hi});
        else diag.push_back({++lo, hi});
        turn ^= 1;
      }
      break;
    }
    case PolygonShape::random: {
      std::mt19937_64 rng(seed);
      split_range(0, n - 1, rng, diag);
      break;
    }
  }
  if ((int)diag.size() != n - 3)
    throw std::logic_error("triangulated_polygon: wrong diagonal count");
  Graph g = Graph::cycle(n);
  for (auto [u, v] : diag) g.add_edge(u, v);
  std::sort(diag.begin(), diag.end());
  TriangulatedPolygon tp{std::move(g), std::move(diag), {}};
  tp.coloring = forced_three_coloring(tp.graph);
  return tp;
}

namespace {

// Neighbors of j in the planar rotation of a convex-position polygon:
// ascending distance along the cycle, starting just past j.
std::vector<int> convex_rotation(const Graph& g, int j) {
  int n = g.vertex_count();
  auto nb = g.neighbors(j);
  std::sort(nb.begin(), nb.end(), [&](int a, int b) {
    return (a - j + n) % n < (b - j + n) % n;
  });
  return nb;
}

// The rotation of x with `partner` removed, read cyclically starting just
// after it.
std::vector<int> fan_after(const Graph& g, int x, int partner) {
  auto r = convex_rotation(g, x);
  int m = (int)r.size();
  int p = (int)(std::find(r.begin(), r.end(), partner) - r.begin());
  std::vector<int> out;
  out.reserve(m - 1);
  for (int t = 1; t < m; ++t) out.push_back(r[(p + t) % m]);
  return out;
}

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

EdgeIdentification identify_edges(const TriangulatedPolygon& tp,
                                  const IdentificationSpec& spec) {
  const Graph& g = tp.graph;
  int n = g.vertex_count();
  auto check_boundary = [&](std::pair<int, int> e) {
    if (e.first < 0 || e.first >= n || e.second != (e.first + 1) % n)
      throw std::invalid_argument("identify_edges: " +
                                  edge_str(e.first, e.second) +
                                  " is not a boundary edge in cycle order");
  };
  check_boundary(spec.first);
  check_boundary(spec.second);
  int v1 = spec.first.first, v2 = spec.first.second;
  int vi = spec.second.first, vi1 = spec.second.second;
  if (v1 == vi)
    throw std::invalid_argument("identify_edges: the two edges are equal");
  for (int x : {v1, v2})
    for (int y : {vi, vi1})
      if (x == y)
        throw std::invalid_argument(
            "identify_edges: edges share vertex " + std::to_string(x) +
            "; identification would create a loop");

  // partner of each merged vertex
  int a2 = spec.twist ? vi : vi1;  // merges with v1
  int b2 = spec.twist ? vi1 : vi;  // merges with v2
  if (g.has_edge(v1, a2))
    throw std::invalid_argument("identify_edges: merged vertices " +
                                std::to_string(v1) + " and " +
                                std::to_string(a2) +
                                " are adjacent; the edge between them would "
                                "become a loop");
  if (g.has_edge(v2, b2))
    throw std::invalid_argument("identify_edges: merged vertices " +
                                std::to_string(v2) + " and " +
                                std::to_string(b2) +
                                " are adjacent; the edge between them would "
                                "become a loop");

  std::vector<int> vmap(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (vmap[v] >= 0) continue;
    vmap[v] = next;
    if (v == v1) vmap[a2] = next;
    if (v == v2) vmap[b2] = next;
    ++next;
  }
  int ap = vmap[v1], bp = vmap[v2];
  auto fkey = std::minmax(ap, bp);

  std::map<std::pair<int, int>, std::pair<int, int>> image;
  for (auto [u, v] : g.edges()) {
    auto [mu, mv] = std::minmax(vmap[u], vmap[v]);
    auto [it, fresh] = image.insert({{mu, mv}, {u, v}});
    if (fresh) continue;
    if (mu == fkey.first && mv == fkey.second) continue;  // the glued pair
    throw std::invalid_argument(
        "identify_edges: edges " + edge_str(it->second.first,
                                            it->second.second) +
        " and " + edge_str(u, v) + " would merge into a multi-edge");
  }
  Graph q(next);
  for (const auto& [e, orig] : image) q.add_edge(e.first, e.second);

  std::vector<std::vector<int>> rot(next);
  for (int v = 0; v < n; ++v) {
    if (v == v1 || v == v2 || v == a2 || v == b2) continue;
    for (int u : convex_rotation(g, v)) rot[vmap[v]].push_back(vmap[u]);
  }
  auto mapped = [&](std::vector<int> r) {
    for (int& t : r) t = vmap[t];
    return r;
  };
  std::vector<std::pair<int, int>> neg;
  auto splice = [&](int target, int other, std::vector<int> head,
                    std::vector<int> tail) {
    rot[target].push_back(other);
    rot[target].insert(rot[target].end(), head.begin(), head.end());
    rot[target].insert(rot[target].end(), tail.begin(), tail.end());
  };
  if (!spec.twist) {
    // both halves keep their planar orientation; the gluing is through a
    // handle and needs no signs
    splice(ap, bp, mapped(fan_after(g, vi1, vi)), mapped(fan_after(g, v1, v2)));
    splice(bp, ap, mapped(fan_after(g, v2, v1)), mapped(fan_after(g, vi, vi1)));
  } else {
    // one half of each merged fan is traversed against its planar
    // orientation; edges leaving a reversed half cross the orientation seam
    // and carry negative signs, as does the glued edge itself
    auto a_rev = mapped(fan_after(g, vi, vi1));
    auto b_rev = mapped(fan_after(g, v2, v1));
    std::reverse(a_rev.begin(), a_rev.end());
    std::reverse(b_rev.begin(), b_rev.end());
    neg.push_back({fkey.first, fkey.second});
    for (int w : a_rev) neg.push_back({std::min(ap, w), std::max(ap, w)});
    for (int w : b_rev) neg.push_back({std::min(bp, w), std::max(bp, w)});
    splice(ap, bp, mapped(fan_after(g, v1, v2)), std::move(a_rev));
    splice(bp, ap, std::move(b_rev), mapped(fan_after(g, vi1, vi)));
  }

  RotationEmbedding emb(q, std::move(rot), neg);

  auto faces = trace_faces(emb);
  uint64_t full = (next >= 64) ? ~uint64_t{0} : (uint64_t{1} << next) - 1;
  int face_index = -1;
  for (size_t fi = 0; fi < faces.size(); ++fi)
    if (faces[fi].vertex_mask == full) {
      face_index = (int)fi;
      break;
    }
  if (face_index < 0)
    throw std::logic_error("identify_edges: no face carries all vertices");

  const std::vector<int>& c = tp.coloring.color;
  bool cond = (c[v1] != c[a2]) || (c[v2] != c[b2]);
  bool k4_free = !contains_clique(q, 4).has_value();

  // BFS distance between the glued edges in the polygon
  std::vector<int> dist(n, -1);
  std::queue<int> bfs;
  for (int s : {v1, v2}) {
    dist[s] = 0;
    bfs.push(s);
  }
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        bfs.push(u);
      }
  }
  return EdgeIdentification{std::move(q),
                            std::move(emb),
                            face_index,
                            std::move(vmap),
                            cond,
                            k4_free,
                            std::min(dist[vi], dist[vi1])};
}

FeasibilityReport k_h_plus1_minus_E_feasibility(long long epsilon) {
  if (epsilon < 1)
    throw std::domain_error(
        "k_h_plus1_minus_E_feasibility: epsilon must be at least 1");
  FeasibilityReport rep;
  rep.epsilon = epsilon;
  rep.heawood = heawood_number(epsilon);
  rep.edges = (rep.heawood + 1) * rep.heawood / 2 - 1;
  rep.bound = edge_bound(rep.heawood + 1, epsilon);
  rep.numerically_feasible = rep.edges <= rep.bound;
  GenusWindow gw = genus_window(epsilon);
  rep.special = gw.special;
  if (!rep.special) return rep;
  if (gw.i == 1) {
    rep.status = EmbedStatus::non_embeddable;
  } else {
    switch (rep.heawood % 12) {
      case 1:
      case 4:
      case 10:
        rep.status = EmbedStatus::embeddable;
        break;
      default:  // 7 mod 12
        rep.status = EmbedStatus::unknown;
        break;
    }
  }
  return rep;
}

}  // namespace heawood
