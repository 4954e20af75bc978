#pragma once

#include <cstdint>
#include <string>

#include "heawood/report.hpp"

// Desk-scale verification sweeps. Each function enumerates the instances of
// one claim, checks every instance exactly, and returns a RunReport whose
// verdicts carry certificates (colorings, cliques, margins) or witnesses.
// All sweeps run serially or fanned out over OpenMP workers; both modes
// produce identical reports.

namespace heawood {

struct VerifyOptions {
  RunMode mode = RunMode::serial;
  uint64_t seed = 1;        // randomized instance generation only
  int max_n = -1;           // cap on vertex count; -1 = the sweep's default
  long long max_classes = -1;  // cap on isomorphism classes; -1 = all
  int palette_bound = -1;   // cap on distinct colors; -1 = not binding
  int instances = 1000;     // randomized suite size
};

// Small-order base case of the one-face coloring theorem: for every
// connected graph with n <= H(epsilon) vertices up to isomorphism and every
// vertex subset S playing the distinguished face, lists of size H-2 on S
// and H elsewhere always admit a proper coloring, unless S carries an
// (H-1)-clique (those instances are exempt by the theorem's exception
// clause). epsilon must be 1 or 2; larger surfaces are past desk scale and
// throw std::domain_error.
RunReport verify_lemma31(long long epsilon, const VerifyOptions& opt = {});

// Degree-ordered greedy coloring guarantee: random graphs on k <= 9
// vertices with every list of size >= k-2 and at most k-2 vertices of
// degree >= k-2 are always colored by the nonincreasing-degree greedy
// procedure. Instances are generated from opt.seed; each verdict embeds the
// instance and the coloring found.
RunReport verify_lemma42(const VerifyOptions& opt = {});

// Block-structure characterization of degree-choosability: a connected
// graph is colorable from arbitrary degree-sized lists exactly when it is
// not a Gallai tree (every block complete or an odd cycle). Sweeps all
// connected graphs with n <= opt.max_n (default 7) up to isomorphism,
// comparing the brute-force search against the characterization.
RunReport verify_degree_choosability_characterization(
    const VerifyOptions& opt = {});

// Edge lower bound for clique-free critical graphs: every k-critical graph
// without a K_k subgraph satisfies 2e >= (k-1)n + k - 3. Exhaustive search
// over connected graphs with n <= opt.max_n (default 8) for k in {4, 5};
// critical graphs containing K_k are exempt (the bound is not claimed
// there).
RunReport verify_critical_edge_bound(const VerifyOptions& opt = {});

struct ConstructionParams {
  int i = 2;           // complete-join family index (prop12)
  int k = 4;           // Gallai-join order (gallai)
  int max_n = 8;       // polygon size cap (section5)
  int twist = -1;      // section5 filter: 0 plain, 1 twisted, -1 both
};

// Claims attached to the named construction family:
//   "gallai":   the join of K_{k-3} with C5 is k-critical, has clique
//               number k-1, and meets the critical edge bound.
//   "prop12":   the i=2 member (K5+C5) has clique number 7, is 8-critical,
//               fails its identical 7-lists, and sits on the special genus
//               where K_{H+1} minus an edge fits by edge count.
//   "section5": every triangulated polygon with n <= max_n and every valid
//               boundary-edge identification whose merged pairs split a
//               color class yields a quotient with chi >= 4 that is not
//               3-choosable and embeds with one face covering all vertices.
// Unknown names and parameters over desk-scale caps throw
// std::domain_error.
RunReport verify_construction(const std::string& name,
                              const ConstructionParams& params = {},
                              const VerifyOptions& opt = {});

}  // namespace heawood
