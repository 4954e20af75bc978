#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heawood/graph.hpp"

// Exact list coloring: backtracking solver, greedy extension, the
// degree-ordered coloring procedure, Gallai-tree recognition, and
// brute-force choosability on desk-scale instances.

namespace heawood {

// Per-vertex color lists. Colors are small nonnegative integers below 64 so
// availability fits in a word.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  static ListAssignment uniform(int n, int k);  // every list = {0..k-1}

  int size() const { return static_cast<int>(lists.size()); }
  uint64_t mask(int v) const;
  // Sorts and checks: one list per vertex of g, colors within [0, 64).
  // Empty lists are allowed; the solver treats them as unsatisfiable.
  void normalize(int n);
};

struct Coloring {
  std::vector<int> color;  // -1 = uncolored

  static Coloring blank(int n) { return Coloring{std::vector<int>(n, -1)}; }
  bool total() const;
};

// Independent validity check used on every coloring before it is returned:
// adjacent colored vertices differ and every chosen color is on its list.
bool is_proper_list_coloring(const Graph& g, const ListAssignment& L,
                             const Coloring& c, bool require_total = true);

// Exhaustive backtracking with most-constrained-vertex ordering (ties by
// lowest index, colors tried ascending), forward pruning on neighbor
// availability. Deterministic.
std::optional<Coloring> solve_list_coloring(const Graph& g,
                                            const ListAssignment& L);

struct GreedyResult {
  std::optional<Coloring> coloring;
  int failed_vertex = -1;  // set when a list is exhausted
};

// Colors `order` sequentially on top of `partial`, smallest usable color
// first. Fails only by exhausting some vertex's list.
GreedyResult greedy_extend(const Graph& g, const ListAssignment& L,
                           const Coloring& partial,
                           const std::vector<int>& order);

enum class Lemma42Status {
  colored,
  too_few_vertices,      // k < 3
  list_too_small,        // some list shorter than k-2
  too_many_high_degree,  // more than k-2 vertices of degree >= k-2
};

struct Lemma42Result {
  Lemma42Status status = Lemma42Status::colored;
  std::optional<Coloring> coloring;
  std::string detail;
};

// Greedy coloring in nonincreasing degree order (ties by index). Succeeds
// whenever the three preconditions hold; returns which clause failed
// otherwise.
Lemma42Result lemma42_color(const Graph& g, const ListAssignment& L);

// True iff every block of connected g is a complete graph (K1, K2 included)
// or an odd cycle.
bool is_gallai_tree(const Graph& g);

// Searches for a list assignment with the given per-vertex sizes that
// admits no proper coloring. Returns a verified witness or nullopt when
// every such assignment is colorable. Exact, via Hall-deficiency seeding:
// any uncolorable assignment has a vertex set whose lists' union is smaller
// than the set, so enumeration is anchored on those sets; assignments in
// which some vertex holds a color absent from all its neighbors reduce to a
// deleted-vertex subproblem (memoized).
std::optional<ListAssignment> find_bad_assignment(const Graph& g,
                                                  const std::vector<int>& sizes);

// Reference oracle: plain canonical enumeration of all assignments with the
// given sizes, no reductions. Exponential; guarded to n <= 6.
std::optional<ListAssignment> find_bad_assignment_naive(
    const Graph& g, const std::vector<int>& sizes);

struct ChoosabilityResult {
  bool choosable = false;
  // True when brute-force search ran; false when the answer rests on the
  // block-structure characterization only (instance over the size cap).
  bool verified_by_search = false;
  std::optional<ListAssignment> witness;  // preventing lists, when they exist
};

// Degree-choosability of connected g: brute force for n <= brute_bound,
// otherwise the Gallai-tree characterization with the flag unset.
ChoosabilityResult degree_choosable(const Graph& g, int brute_bound = 8);

struct ChoosabilityLimits {
  int max_n = 8;
  int max_k = 5;
};

// Brute-force k-choosability. Refuses instances over the limits.
ChoosabilityResult is_k_choosable(const Graph& g, int k,
                                  const ChoosabilityLimits& limits = {});

// An (H(eps)-1)-clique with all vertices inside face_mask, or nullopt.
std::optional<std::vector<int>> find_f_bad_clique(const Graph& g,
                                                  uint64_t face_mask,
                                                  long long epsilon);

}  // namespace heawood
