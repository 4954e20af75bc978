#include "heawood/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace heawood {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count " + std::to_string(n) +
                                " outside [0, 64]");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("Graph::cycle: needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) +
                                ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loop at " + std::to_string(u));
  adj_[u] |= 1ULL << v;
  adj_[v] |= 1ULL << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(1ULL << v);
  adj_[v] &= ~(1ULL << u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

uint64_t Graph::neighbors_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (uint64_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  return out;
}

uint64_t Graph::full_mask() const {
  return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
}

bool Graph::connected_within(uint64_t vertex_mask) const {
  if (vertex_mask == 0) return true;
  uint64_t seen = vertex_mask & (-vertex_mask);  // lowest vertex as seed
  for (;;) {
    uint64_t frontier = 0;
    for (uint64_t m = seen; m; m &= m - 1)
      frontier |= adj_[std::countr_zero(m)];
    frontier &= vertex_mask;
    if ((frontier | seen) == seen) break;
    seen |= frontier;
  }
  return seen == vertex_mask;
}

bool Graph::connected() const { return connected_within(full_mask()); }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  Graph out(static_cast<int>(vs.size()));
  uint64_t seen = 0;
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (seen & (1ULL << v))
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    seen |= 1ULL << v;
  }
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph induced_subgraph(const Graph& g, uint64_t vertex_mask) {
  std::vector<int> vs;
  for (uint64_t m = vertex_mask; m; m &= m - 1)
    vs.push_back(std::countr_zero(m));
  return induced_subgraph(g, vs);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  Graph out(n1 + n2);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  std::vector<int> keep;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  if (static_cast<int>(keep.size()) == g.vertex_count())
    throw std::invalid_argument("remove_vertex: vertex out of range");
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen >> v & 1))
      throw std::invalid_argument("relabel: not a permutation");
    seen |= 1ULL << v;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

bool clique_search(const Graph& g, const std::vector<int>& order, int m,
                   uint64_t candidates, std::vector<int>& clique) {
  if (static_cast<int>(clique.size()) == m) return true;
  if (static_cast<int>(clique.size()) + std::popcount(candidates) < m)
    return false;
  // Iterate candidates in the degree-sorted order for better early pruning.
  for (int v : order) {
    if (!(candidates & (1ULL << v))) continue;
    clique.push_back(v);
    if (clique_search(g, order, m, candidates & g.neighbors_mask(v), clique))
      return true;
    clique.pop_back();
    candidates &= ~(1ULL << v);
    if (static_cast<int>(clique.size()) + std::popcount(candidates) < m)
      return false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_clique(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("contains_clique: needs m >= 1");
  if (m > g.vertex_count()) return std::nullopt;
  std::vector<int> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  std::vector<int> clique;
  if (!clique_search(g, order, m, g.full_mask(), clique)) return std::nullopt;
  std::sort(clique.begin(), clique.end());
  return clique;
}

int clique_number(const Graph& g) {
  int best = 0;
  while (best < g.vertex_count() && contains_clique(g, best + 1)) ++best;
  return best;
}

DegreeProfile degree_profile(const Graph& g, uint64_t face_mask,
                             long long epsilon) {
  if (face_mask & ~g.full_mask())
    throw std::invalid_argument("degree_profile: face mask outside graph");
  long long h = heawood_number(epsilon);
  DegreeProfile p;
  p.n = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    ++p.degree_count[d];
    if ((face_mask >> v & 1) && d >= h) ++p.face_high_count;
  }
  return p;
}

}  // namespace heawood
