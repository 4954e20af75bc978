#include "heawood/embedding.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "heawood/genus.hpp"

namespace heawood {

int Face::vertex_count() const { return std::popcount(vertex_mask); }

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  for (uint64_t m = vertex_mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

RotationEmbedding::RotationEmbedding(
    Graph g, std::vector<std::vector<int>> rotations,
    const std::vector<std::pair<int, int>>& negative_edges)
    : g_(std::move(g)), rot_(std::move(rotations)) {
  const int n = g_.vertex_count();
  if (n == 0)
    throw std::invalid_argument("RotationEmbedding: graph has no vertices");
  if (!g_.connected())
    throw std::invalid_argument("RotationEmbedding: graph must be connected");
  if (static_cast<int>(rot_.size()) != n)
    throw std::invalid_argument("RotationEmbedding: need one rotation per vertex");
  pos_.assign(n, std::vector<int8_t>(n, -1));
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rot_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g_.neighbors(v))
      throw std::invalid_argument("RotationEmbedding: rotation at vertex " +
                                  std::to_string(v) +
                                  " must list exactly its neighbors");
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
      pos_[v][rot_[v][i]] = static_cast<int8_t>(i);
  }
  neg_.assign(n, 0);
  for (auto [u, v] : negative_edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || !g_.has_edge(u, v))
      throw std::invalid_argument("RotationEmbedding: sign listed for a non-edge");
    neg_[u] |= uint64_t{1} << v;
    neg_[v] |= uint64_t{1} << u;
  }
}

int RotationEmbedding::sign(int u, int v) const {
  if (u < 0 || u >= g_.vertex_count() || !g_.has_edge(u, v))
    throw std::invalid_argument("RotationEmbedding::sign: not an edge");
  return (neg_[u] >> v & 1) ? -1 : 1;
}

std::vector<std::pair<int, int>> RotationEmbedding::negative_edges() const {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g_.edges())
    if (neg_[u] >> v & 1) out.push_back({u, v});
  return out;
}

int RotationEmbedding::rotation_index(int v, int u) const {
  if (v < 0 || v >= g_.vertex_count() || !g_.has_edge(v, u))
    throw std::invalid_argument("RotationEmbedding::rotation_index: not an edge");
  return pos_[v][u];
}

bool RotationEmbedding::orientable() const {
  const int n = g_.vertex_count();
  std::vector<int> sigma(n, 0);
  std::vector<int> stack{0};
  sigma[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : rot_[v]) {
      int want = sigma[v] * ((neg_[v] >> u & 1) ? -1 : 1);
      if (sigma[u] == 0) {
        sigma[u] = want;
        stack.push_back(u);
      } else if (sigma[u] != want) {
        return false;
      }
    }
  }
  return true;
}

void RotationEmbedding::switch_vertex(int v) {
  if (v < 0 || v >= g_.vertex_count())
    throw std::invalid_argument("RotationEmbedding::switch_vertex: bad vertex");
  std::reverse(rot_[v].begin(), rot_[v].end());
  for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
    pos_[v][rot_[v][i]] = static_cast<int8_t>(i);
  for (int u : g_.neighbors(v)) {
    neg_[v] ^= uint64_t{1} << u;
    neg_[u] ^= uint64_t{1} << v;
  }
}

namespace {

// Rotation data flattened for tight tracing loops, shared by the public
// tracer and the embedding search.
struct RawScheme {
  int n = 0;
  const std::vector<std::vector<int>>* rot = nullptr;
  std::vector<int8_t> pos;   // pos[v*n + u] = index of u in (*rot)[v]
  std::vector<uint64_t> neg;

  void build_pos() {
    pos.assign(static_cast<size_t>(n) * n, -1);
    for (int v = 0; v < n; ++v) {
      const auto& rv = (*rot)[v];
      for (int i = 0; i < static_cast<int>(rv.size()); ++i)
        pos[static_cast<size_t>(v) * n + rv[i]] = static_cast<int8_t>(i);
    }
  }
  int sign_bit(int u, int v) const { return neg[u] >> v & 1; }
  int state_id(int u, int v, int sbit) const { return (u * n + v) * 2 + sbit; }

  // One face-walk step: arrived at v from u on side sbit; leave through the
  // rotation's previous neighbor on side +1, the next one on side -1, and
  // pick up the sign of the edge crossed.
  void step(int& u, int& v, int& sbit) const {
    const auto& rv = (*rot)[v];
    const int d = static_cast<int>(rv.size());
    const int i = pos[static_cast<size_t>(v) * n + u];
    const int j = sbit == 0 ? (i + d - 1) % d : (i + 1) % d;
    const int w = rv[j];
    sbit ^= sign_bit(v, w);
    u = v;
    v = w;
  }
};

RawScheme raw_from(const RotationEmbedding& emb,
                   const std::vector<std::vector<int>>& rot) {
  RawScheme s;
  s.n = emb.graph().vertex_count();
  s.rot = &rot;
  s.build_pos();
  s.neg.assign(s.n, 0);
  for (auto [u, v] : emb.negative_edges()) {
    s.neg[u] |= uint64_t{1} << v;
    s.neg[v] |= uint64_t{1} << u;
  }
  return s;
}

// Number of transition orbits over all 4e directed edge-sides. Orbits come
// in mirror pairs, one per face, so the face count is half of this.
int count_orbits(const RawScheme& s, std::vector<uint8_t>& visited) {
  const int n = s.n;
  visited.assign(static_cast<size_t>(2) * n * n, 0);
  int orbits = 0;
  for (int u0 = 0; u0 < n; ++u0) {
    for (int v0 : (*s.rot)[u0]) {
      for (int sb0 = 0; sb0 < 2; ++sb0) {
        if (visited[s.state_id(u0, v0, sb0)]) continue;
        ++orbits;
        int u = u0, v = v0, sb = sb0;
        do {
          visited[s.state_id(u, v, sb)] = 1;
          s.step(u, v, sb);
        } while (!(u == u0 && v == v0 && sb == sb0));
      }
    }
  }
  return orbits;
}

long long genus_of_counts(int n, long long e, int orbits) {
  if (orbits % 2 != 0)
    throw std::logic_error("face tracing: orbit count must be even");
  const long long f = orbits / 2;
  const long long genus = 2 - n + e - f;
  if (genus < 0)
    throw std::logic_error("face tracing: negative genus, tracer bug");
  return genus;
}

}  // namespace

std::vector<Face> trace_faces(const RotationEmbedding& emb) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  std::vector<Face> faces;
  if (n == 1) {
    // One vertex on the sphere: a single disk face with an empty walk.
    Face f;
    f.vertex_mask = 1;
    faces.push_back(std::move(f));
    return faces;
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = emb.rotation(v);
  RawScheme s = raw_from(emb, rot);

  std::vector<uint8_t> visited(static_cast<size_t>(2) * n * n, 0);
  // Ascending state ids, so each orbit is first entered at its least state
  // and faces come out in the order of those minima.
  for (int u0 = 0; u0 < n; ++u0) {
    for (int v0 = 0; v0 < n; ++v0) {
      if (!g.has_edge(u0, v0)) continue;
      for (int sb0 = 0; sb0 < 2; ++sb0) {
        const int start = s.state_id(u0, v0, sb0);
        if (visited[start]) continue;
        Face face;
        int mirror_min = 2 * n * n;
        int u = u0, v = v0, sb = sb0;
        do {
          visited[s.state_id(u, v, sb)] = 1;
          face.walk.push_back({u, v, sb == 0 ? 1 : -1});
          face.vertex_mask |= uint64_t{1} << u;
          mirror_min =
              std::min(mirror_min, s.state_id(v, u, sb ^ 1 ^ s.sign_bit(u, v)));
          s.step(u, v, sb);
        } while (!(u == u0 && v == v0 && sb == sb0));
        if (start == mirror_min)
          throw std::logic_error("face tracing: self-mirrored walk");
        // Keep the orbit of each mirror pair that starts first; the other
        // is the same face traversed from the other side.
        if (start < mirror_min) faces.push_back(std::move(face));
      }
    }
  }
  return faces;
}

long long euler_genus(const RotationEmbedding& emb) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  if (n == 1) return 0;
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) rot[v] = emb.rotation(v);
  RawScheme s = raw_from(emb, rot);
  std::vector<uint8_t> visited;
  return genus_of_counts(n, g.edge_count(), count_orbits(s, visited));
}

Face distinguished_face(const RotationEmbedding& emb, int face_index) {
  std::vector<Face> faces = trace_faces(emb);
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw std::out_of_range("distinguished_face: index " +
                            std::to_string(face_index) + " of " +
                            std::to_string(faces.size()) + " faces");
  return faces[face_index];
}

InstanceReport validate_theorem_instance(const RotationEmbedding& emb,
                                         int face_index,
                                         const ListAssignment& lists) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  ListAssignment L = lists;
  L.normalize(n);
  std::vector<Face> faces = trace_faces(emb);
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw std::out_of_range("validate_theorem_instance: face index " +
                            std::to_string(face_index) + " of " +
                            std::to_string(faces.size()) + " faces");
  InstanceReport rep;
  rep.epsilon = 2 - n + g.edge_count() - static_cast<long long>(faces.size());
  if (rep.epsilon == 0)
    throw std::domain_error(
        "validate_theorem_instance: Euler genus 0, below the genus range");
  rep.heawood = heawood_number(rep.epsilon);
  rep.excluded_eps3 = rep.epsilon == 3;
  rep.face_index = face_index;
  rep.face_vertices = faces[face_index].vertex_mask;
  for (int v = 0; v < n; ++v) {
    const long long need =
        (rep.face_vertices >> v & 1) ? rep.heawood - 2 : rep.heawood;
    if (static_cast<long long>(L.lists[v].size()) < need)
      rep.list_violations.push_back(v);
  }
  rep.lists_ok = rep.list_violations.empty();
  rep.f_bad_clique = find_f_bad_clique(g, rep.face_vertices, rep.epsilon);
  rep.hypothesis_met = rep.lists_ok && !rep.excluded_eps3 && !rep.f_bad_clique;
  return rep;
}

std::optional<RotationEmbedding> find_embedding_with_genus(const Graph& g,
                                                           long long target_eps,
                                                           bool orientable_only,
                                                           long long budget) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (!g.connected())
    throw std::invalid_argument("find_embedding_with_genus: graph must be connected");
  if (n == 1) {
    if (target_eps != 0) return std::nullopt;
    return RotationEmbedding(g, {{}});
  }

  std::vector<std::vector<int>> base(n), rot(n);
  for (int v = 0; v < n; ++v) rot[v] = base[v] = g.neighbors(v);

  // Signs are normalized to +1 on a spanning tree; together with the full
  // rotation sweep this still reaches every embedding up to equivalence.
  std::vector<std::pair<int, int>> cotree;
  {
    std::vector<uint8_t> seen(n, 0);
    std::vector<uint64_t> tree(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        tree[v] |= uint64_t{1} << u;
        tree[u] |= uint64_t{1} << v;
        stack.push_back(u);
      }
    }
    for (auto [u, v] : g.edges())
      if (!(tree[u] >> v & 1)) cotree.push_back({u, v});
  }
  const int c = static_cast<int>(cotree.size());
  const long long sign_cap =
      orientable_only || c >= 62 ? 1 : (1LL << c);

  const long long e = g.edge_count();
  RawScheme s;
  s.n = n;
  s.rot = &rot;
  s.neg.assign(n, 0);
  std::vector<uint8_t> visited;
  long long tried = 0;

  while (true) {
    s.build_pos();
    for (long long mask = 0; mask < sign_cap; ++mask) {
      std::fill(s.neg.begin(), s.neg.end(), 0);
      for (int j = 0; j < c; ++j) {
        if (!(mask >> j & 1)) continue;
        auto [u, v] = cotree[j];
        s.neg[u] |= uint64_t{1} << v;
        s.neg[v] |= uint64_t{1} << u;
      }
      if (++tried > budget) return std::nullopt;
      if (genus_of_counts(n, e, count_orbits(s, visited)) == target_eps) {
        std::vector<std::pair<int, int>> neg;
        for (int j = 0; j < c; ++j)
          if (mask >> j & 1) neg.push_back(cotree[j]);
        return RotationEmbedding(g, rot, neg);
      }
    }
    // Advance the rotation odometer: permute each vertex's tail, first
    // neighbor pinned (cyclic rotations repeat the same system).
    int v = n - 1;
    while (v >= 0) {
      if (rot[v].size() >= 3 &&
          std::next_permutation(rot[v].begin() + 1, rot[v].end()))
        break;
      rot[v] = base[v];
      --v;
    }
    if (v < 0) return std::nullopt;
  }
}

RotationEmbedding insert_apex_in_face(const RotationEmbedding& emb,
                                      int face_index) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  if (n + 1 > Graph::kMaxVertices)
    throw std::invalid_argument("insert_apex_in_face: vertex cap reached");
  std::vector<Face> faces = trace_faces(emb);
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw std::out_of_range("insert_apex_in_face: face index " +
                            std::to_string(face_index) + " of " +
                            std::to_string(faces.size()) + " faces");
  const Face& F = faces[face_index];
  const long long genus =
      2 - n + g.edge_count() - static_cast<long long>(faces.size());

  // One corner per distinct boundary vertex, at its first appearance.
  struct Corner {
    int v, from, side;
  };
  std::vector<Corner> corners;
  if (F.walk.empty()) {
    corners.push_back({0, -1, 1});  // lone-vertex disk
  } else {
    uint64_t seen = 0;
    for (const EdgeSide& es : F.walk) {
      if (seen >> es.to & 1) continue;
      seen |= uint64_t{1} << es.to;
      corners.push_back({es.to, es.from, es.side});
    }
  }
  const int k = static_cast<int>(corners.size());
  const int apex = n;

  Graph g2(n + 1);
  for (auto [u, v] : g.edges()) g2.add_edge(u, v);
  for (const Corner& c : corners) g2.add_edge(c.v, apex);

  std::vector<std::vector<int>> rot2(n + 1);
  for (int v = 0; v < n; ++v) rot2[v] = emb.rotation(v);
  for (const Corner& c : corners) {
    auto& r = rot2[c.v];
    if (c.from < 0) {
      r.push_back(apex);
      continue;
    }
    // The corner occupies the gap next to `from`: before it on side +1
    // (where the walk turns to the rotation's previous element), after it
    // on side -1.
    const auto it = std::find(r.begin(), r.end(), c.from);
    r.insert(c.side > 0 ? it : it + 1, apex);
  }

  std::vector<int> ring;
  ring.reserve(k);
  for (const Corner& c : corners) ring.push_back(c.v);
  const std::vector<std::pair<int, int>> base_neg = emb.negative_edges();

  // The corner positions are forced; the apex's cyclic order (up to
  // reflection) and the new edges' signs are completed by search. Splitting
  // one face into k is equivalent to keeping the genus, which certifies
  // the candidate.
  for (int orient = 0; orient < 2; ++orient) {
    rot2[apex] = ring;
    if (orient) std::reverse(rot2[apex].begin(), rot2[apex].end());
    for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
      std::vector<std::pair<int, int>> neg = base_neg;
      for (int j = 0; j < k; ++j)
        if (mask >> j & 1) neg.push_back({ring[j], apex});
      RotationEmbedding cand(g2, rot2, neg);
      if (euler_genus(cand) == genus) return cand;
    }
  }
  throw std::logic_error(
      "insert_apex_in_face: no sign completion preserved the surface");
}

}  // namespace heawood
