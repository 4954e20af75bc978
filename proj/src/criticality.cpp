#include "heawood/criticality.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "heawood/genus.hpp"

namespace heawood {

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  for (int k = 1;; ++k)
    if (solve_list_coloring(g, ListAssignment::uniform(n, k))) return k;
}

namespace {

// Solves the instance induced on everything but v, reporting the coloring
// in original indices with v left uncolored.
std::optional<Coloring> solve_without_vertex(const Graph& g,
                                             const ListAssignment& L, int v) {
  const int n = g.vertex_count();
  ListAssignment sub_lists;
  sub_lists.lists.reserve(n - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) sub_lists.lists.push_back(L.lists[u]);
  auto sub = solve_list_coloring(remove_vertex(g, v), sub_lists);
  if (!sub) return std::nullopt;
  Coloring c = Coloring::blank(n);
  for (int u = 0, j = 0; u < n; ++u)
    if (u != v) c.color[u] = sub->color[j++];
  return c;
}

}  // namespace

CriticalityReport is_L_critical(const Graph& g, const ListAssignment& L,
                                int max_n) {
  const int n = g.vertex_count();
  if (n > max_n)
    throw std::invalid_argument(
        "is_L_critical: " + std::to_string(n) + " vertices exceeds the cap of " +
        std::to_string(max_n));
  ListAssignment lists = L;
  lists.normalize(n);

  CriticalityReport report;
  if (auto base = solve_list_coloring(g, lists)) {
    report.base_coloring = std::move(base);
    return report;
  }

  std::vector<SubgraphCheck> checks;
  for (int v = 0; v < n; ++v) {
    SubgraphCheck chk;
    chk.vertex_deletion = true;
    chk.a = v;
    auto c = solve_without_vertex(g, lists, v);
    if (!c) {
      report.checks = {std::move(chk)};
      return report;
    }
    chk.colorable = true;
    chk.coloring = std::move(*c);
    checks.push_back(std::move(chk));
  }
  for (auto [u, v] : g.edges()) {
    SubgraphCheck chk;
    chk.a = u;
    chk.b = v;
    Graph h = g;
    h.remove_edge(u, v);
    auto c = solve_list_coloring(h, lists);
    if (!c) {
      report.checks = {std::move(chk)};
      return report;
    }
    chk.colorable = true;
    chk.coloring = std::move(*c);
    checks.push_back(std::move(chk));
  }
  report.is_critical = true;
  report.checks = std::move(checks);
  return report;
}

CriticalityReport is_k_critical(const Graph& g, int k, int max_n) {
  if (k < 1) throw std::invalid_argument("is_k_critical: needs k >= 1");
  return is_L_critical(g, ListAssignment::uniform(g.vertex_count(), k - 1),
                       max_n);
}

bool ks_edge_bound(long long n, long long e, int k) {
  if (k < 4)
    throw std::domain_error("ks_edge_bound: the bound is stated for k >= 4");
  return 2 * e >= static_cast<long long>(k - 1) * n + k - 3;
}

Case3Report case3_contradiction(long long epsilon, long long nprime) {
  const GenusWindow w = genus_window(epsilon);
  if (!w.special)
    throw std::domain_error("case3_contradiction: epsilon " +
                            std::to_string(epsilon) +
                            " does not top an H = 3i+4 window");
  const long long H = w.heawood;
  if (nprime != H && nprime != H + 1)
    throw std::domain_error("case3_contradiction: nprime must be " +
                            std::to_string(H) + " or " + std::to_string(H + 1));

  Case3Report r;
  r.heawood = H;
  r.nprime = nprime;
  // A critical subgraph on nprime vertices with (H-2)-lists forces
  // 2e' >= (H-2)*nprime + H - 4. The host graph has H+1 vertices on one
  // face; triangulating that face adds H-2 diagonals (2 degree units each),
  // and when nprime = H the vertex outside the subgraph contributes degree
  // at least H-2 on top.
  if (nprime == H)
    r.lower = (H - 2) * H + H - 4 + 2 * (H - 2) + 2 * (H - 2);
  else
    r.lower = (H - 2) * (H + 1) + H - 4 + 2 * (H - 2);
  r.upper = 2 * edge_bound(H + 1, epsilon);
  r.margin = r.lower - r.upper;
  r.contradiction = r.margin > 0;
  return r;
}

}  // namespace heawood
