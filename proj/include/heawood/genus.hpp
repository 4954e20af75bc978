#pragma once

#include <cstdint>
#include <map>

// Exact integer arithmetic for surface genus bounds: the Heawood number,
// genus windows of complete graphs, and the degree-profile inequalities used
// to rule out minimal counterexamples on a fixed surface. Everything here is
// pure integer math; surfaces are identified by Euler genus.

namespace heawood {

// floor(sqrt(x)) for x >= 0 by Newton iteration. No floating point: rounding
// near perfect squares (e.g. 24*eps+1 = 169) must be exact.
long long isqrt_floor(long long x);

// H(eps) = floor((7 + sqrt(24*eps + 1)) / 2). Defined for eps >= 1 only.
long long heawood_number(long long epsilon);

// A surface given by Euler genus plus an orientability hint. The hint only
// matters at epsilon = 2, where (2, nonorientable) is the Klein bottle.
struct SurfaceGenus {
  long long epsilon = 0;
  bool orientable = true;
};

struct CompleteGenus {
  long long epsilon = 0;
  // K7 needs Euler genus 2 but embeds only on the torus, not the Klein
  // bottle; the flag marks that the nonorientable surface of this genus is
  // excluded.
  bool klein_exception = false;
};

// Least Euler genus on which K_n embeds: ceil((n-3)(n-4)/6), n >= 3.
CompleteGenus min_genus_complete(long long n);

// The window of Euler genera sharing one Heawood number, keyed by
// i = floor((H-3)/3). `special` marks the top end of the H = 3i+4 window,
// the only genera where K_{H+1} minus an edge fits by edge count.
struct GenusWindow {
  long long i = 0;
  long long heawood = 0;
  long long eps_lo = 0;
  long long eps_hi = 0;
  bool special = false;
};

GenusWindow genus_window(long long epsilon);

// Largest m with K_m embeddable on the surface: H(eps) except the Klein
// bottle, which only takes K6.
long long largest_embeddable_clique(const SurfaceGenus& surface);

// Max edges of a graph embedded in a surface of Euler genus eps with all
// faces of size >= 3: 3n + 3(eps - 2). Valid for eps = 0 too.
long long edge_bound(long long n, long long epsilon);

// Right-hand side 6(eps-1) - (H(eps)-6)*n of the first profile inequality.
// Callers compare d_{H-1} + 2*d^F_{>=H} against it. Requires n >= H(eps)+1;
// below that the profile machinery does not apply.
long long inequality_star(long long epsilon, long long n);

// Vertex-degree census of a graph drawn with a distinguished face F.
// face_high_count is the number of vertices on F of degree >= H(eps).
struct DegreeProfile {
  long long n = 0;
  std::map<long long, long long> degree_count;
  long long face_high_count = 0;

  long long count_of(long long degree) const;
  long long count_at_least(long long degree) const;
  // Throws std::invalid_argument unless counts are nonnegative, sum to n,
  // and face_high_count is within [0, n].
  void validate() const;
};

enum class ProfileStatus {
  // n <= H(eps): settled by the small-order base case, the inequalities
  // carry no conclusion here.
  out_of_theorem_range,
  // Some applicable inequality fails, so no minimal counterexample has this
  // profile.
  contradiction_reached,
  // n = d_{H-2} + d_H: the two-level profile handled by the dense-pair
  // lemma.
  lemma32_case,
  open,
};

struct InequalityCheck {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = true;  // lhs <= rhs
};

struct ProfileReport {
  long long epsilon = 0;
  long long heawood = 0;
  long long n = 0;
  // (*)  d_{H-1} + 2*d^F_{>=H}              <= 6(eps-1) - (H-6)n
  // (**) (H-5)n                             <= 6(eps-1) + d_{H-2} + d_H
  // (***)(H-6)(d_{H-2}+d_H) + (H-5)d_{>=H+1} <= 6(eps-1)
  InequalityCheck star;
  InequalityCheck double_star;
  InequalityCheck triple_star;
  bool special = false;        // epsilon tops an H = 3i+4 window
  bool excluded_eps3 = false;  // eps = 3: left open upstream, reported not rejected
  // Raw arithmetic fact: at least one of the three checks fails. Unlike
  // `status` this ignores whether the failing check is conclusive for this
  // epsilon and n.
  bool contradiction = false;
  ProfileStatus status = ProfileStatus::open;
};

// Evaluates the three profile inequalities exactly and classifies the
// profile. (**) and (***) presuppose the non-special cleanup step, so for
// special epsilon only a failing (*) counts toward contradiction_reached.
ProfileReport check_profile_inequalities(const DegreeProfile& profile,
                                         long long epsilon);

}  // namespace heawood
