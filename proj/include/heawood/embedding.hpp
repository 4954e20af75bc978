#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heawood/coloring.hpp"
#include "heawood/graph.hpp"

// Combinatorial embeddings as signed rotation systems: each vertex carries a
// cyclic order of its neighbors, each edge a sign, with -1 marking a band
// glued with a half twist. Face tracing walks directed edge-sides, and the
// Euler formula turns the face count into the genus of the carrier surface.

namespace heawood {

// One step of a face walk: the walk crosses the band from `from` to `to`;
// `side` (+1/-1) says which side of the strip it is on after crossing.
struct EdgeSide {
  int from = -1;
  int to = -1;
  int side = 1;
  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

struct Face {
  std::vector<EdgeSide> walk;  // closed; starts at the least edge-side
  uint64_t vertex_mask = 0;    // distinct vertices on the walk

  int length() const { return static_cast<int>(walk.size()); }
  int vertex_count() const;
  std::vector<int> vertices() const;  // ascending
};

class RotationEmbedding {
 public:
  // Validates on construction: the graph must be connected and nonempty,
  // rotation[v] must list exactly the neighbors of v (in the intended cyclic
  // order), and negative_edges must name existing edges; those get sign -1,
  // all others +1. Throws std::invalid_argument on any violation.
  RotationEmbedding(Graph g, std::vector<std::vector<int>> rotations,
                    const std::vector<std::pair<int, int>>& negative_edges = {});

  const Graph& graph() const { return g_; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int sign(int u, int v) const;  // +1 or -1; throws on a non-edge
  std::vector<std::pair<int, int>> negative_edges() const;  // lexicographic

  // True iff every cycle has positive sign product, i.e. the signs can be
  // switched away entirely and the carrier surface is orientable.
  bool orientable() const;

  // The local equivalence move: reverse the rotation at v and negate the
  // signs of all edges at v. The embedded surface, the face walks, and the
  // genus are unchanged.
  void switch_vertex(int v);

  // Position of u within rotation(v), for walking the cyclic order.
  int rotation_index(int v, int u) const;

 private:
  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int8_t>> pos_;  // pos_[v][u], -1 for non-neighbors
  std::vector<uint64_t> neg_;             // symmetric sign-bit rows
};

// All faces of the embedding. Every directed edge-side lies on exactly one
// returned walk, so the walk lengths sum to 2e. Deterministic: faces appear
// in the order of their least edge-side, and each walk starts there.
std::vector<Face> trace_faces(const RotationEmbedding& emb);

// 2 - n + e - f for the traced face count f (Euler's formula for cellular
// embeddings). Zero exactly on sphere embeddings; never negative.
long long euler_genus(const RotationEmbedding& emb);

// The face of the given traced index. Throws std::out_of_range.
Face distinguished_face(const RotationEmbedding& emb, int face_index);

// Hypothesis check for a coloring instance: a graph embedded with Euler
// genus eps >= 1, a distinguished face F, lists of size >= H(eps)-2 on V(F)
// and >= H(eps) off it, and no (H(eps)-1)-clique inside V(F).
struct InstanceReport {
  long long epsilon = 0;
  long long heawood = 0;
  bool excluded_eps3 = false;  // eps == 3 sits outside the theorem's range
  int face_index = -1;
  uint64_t face_vertices = 0;
  bool lists_ok = false;
  std::vector<int> list_violations;  // vertices with too-small lists
  std::optional<std::vector<int>> f_bad_clique;
  bool hypothesis_met = false;  // lists_ok, eps != 3, and no bad clique
};

// Throws std::domain_error when the embedding has genus 0 (the Heawood
// number is undefined there); otherwise all violations are reported, not
// thrown.
InstanceReport validate_theorem_instance(const RotationEmbedding& emb,
                                         int face_index,
                                         const ListAssignment& lists);

// Exhaustive fixture-scale search for an embedding of the exact target
// genus: all rotations (first neighbor pinned per vertex), signs free on
// the edges outside a spanning tree, or all positive when orientable_only.
// Deterministic first hit; nullopt when the space or the budget (number of
// traced candidates) is exhausted.
std::optional<RotationEmbedding> find_embedding_with_genus(
    const Graph& g, long long target_eps, bool orientable_only = false,
    long long budget = 5'000'000);

// New embedding with vertex n placed inside the given face and joined to
// every distinct vertex on its walk; the face splits into deg(n) faces and
// the genus is unchanged. Signs and the cyclic order of the new vertex are
// completed by a small certified search (the candidate is re-traced and the
// face count checked), so the result is always valid.
RotationEmbedding insert_apex_in_face(const RotationEmbedding& emb,
                                      int face_index);

}  // namespace heawood
