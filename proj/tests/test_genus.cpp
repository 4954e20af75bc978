#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heawood/genus.hpp"

using namespace heawood;

namespace {

// Independent oracle: largest r with r*r <= x, found by counting up.
long long isqrt_by_scan(long long x) {
  long long r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

TEST_CASE("isqrt_floor matches the linear-scan oracle") {
  for (long long x = 0; x <= 10000; ++x) CHECK(isqrt_floor(x) == isqrt_by_scan(x));
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(168) == 12);
  CHECK(isqrt_floor(169) == 13);  // 24*7+1, exactness at a perfect square
  CHECK(isqrt_floor(170) == 13);
  CHECK(isqrt_floor((1LL << 40) - 1) == (1LL << 20) - 1);
  CHECK_THROWS_AS(isqrt_floor(-1), std::invalid_argument);
}

TEST_CASE("heawood_number pinned values and domain") {
  CHECK(heawood_number(1) == 6);
  CHECK(heawood_number(2) == 7);
  CHECK(heawood_number(3) == 7);
  CHECK(heawood_number(4) == 8);
  CHECK(heawood_number(5) == 9);
  CHECK(heawood_number(9) == 10);
  CHECK_THROWS_AS(heawood_number(0), std::invalid_argument);
  CHECK_THROWS_AS(heawood_number(-2), std::invalid_argument);
}

TEST_CASE("heawood_number is nondecreasing over [1, 10000]") {
  long long prev = heawood_number(1);
  for (long long eps = 2; eps <= 10000; ++eps) {
    long long h = heawood_number(eps);
    CHECK(h >= prev);
    prev = h;
  }
}

TEST_CASE("min_genus_complete pinned values and inverse relation") {
  CHECK(min_genus_complete(7).epsilon == 2);
  CHECK(min_genus_complete(7).klein_exception);
  CHECK(min_genus_complete(4).epsilon == 0);
  CHECK_FALSE(min_genus_complete(4).klein_exception);
  CHECK(min_genus_complete(10).epsilon == 7);
  CHECK_FALSE(min_genus_complete(10).klein_exception);
  CHECK(min_genus_complete(3).epsilon == 0);
  CHECK(min_genus_complete(5).epsilon == 1);
  CHECK(min_genus_complete(12).epsilon == 12);
  CHECK_THROWS_AS(min_genus_complete(2), std::invalid_argument);

  // K_n fits on its minimum surface: H of that genus is at least n.
  for (long long n = 3; n <= 200; ++n) {
    long long eps = min_genus_complete(n).epsilon;
    if (eps >= 1) CHECK(heawood_number(eps) >= n);
  }
}

TEST_CASE("genus_window pinned examples") {
  GenusWindow w2 = genus_window(2);
  CHECK(w2.i == 1);
  CHECK(w2.heawood == 7);
  CHECK(w2.eps_lo == 2);
  CHECK(w2.eps_hi == 3);
  CHECK_FALSE(w2.special);

  GenusWindow w3 = genus_window(3);
  CHECK(w3.i == 1);
  CHECK(w3.heawood == 7);
  CHECK(w3.eps_lo == 2);
  CHECK(w3.eps_hi == 3);
  CHECK(w3.special);

  // i = 2 window for H = 10 covers {7, 8, 9}; 9 is the special endpoint.
  GenusWindow w9 = genus_window(9);
  CHECK(w9.i == 2);
  CHECK(w9.heawood == 10);
  CHECK(w9.eps_lo == 7);
  CHECK(w9.eps_hi == 9);
  CHECK(w9.special);
  CHECK_FALSE(genus_window(7).special);
  CHECK_FALSE(genus_window(8).special);

  GenusWindow w1 = genus_window(1);
  CHECK(w1.i == 1);
  CHECK(w1.heawood == 6);
  CHECK(w1.eps_lo == 1);
  CHECK(w1.eps_hi == 1);
  CHECK_FALSE(w1.special);
}

TEST_CASE("genus_window brackets its argument and matches heawood_number") {
  for (long long eps = 1; eps <= 5000; ++eps) {
    GenusWindow w = genus_window(eps);
    CHECK(w.eps_lo <= eps);
    CHECK(eps <= w.eps_hi);
    CHECK(w.heawood == heawood_number(eps));
    CHECK(w.i >= 1);
    CHECK(w.heawood == 3 * w.i + 3 + (w.heawood % 3 == 1 ? 1 : 0) +
                           (w.heawood % 3 == 2 ? 2 : 0));
    if (w.special) {
      CHECK(w.heawood == 3 * w.i + 4);
      CHECK(eps == (3 * w.i * w.i + 3 * w.i) / 2);
    }
  }
}

TEST_CASE("consecutive genus windows tile the genera with no gap") {
  // Walk windows upward from eps = 1; each must resume right after the last.
  long long eps = 1;
  long long expected_lo = 1;
  int windows_seen = 0;
  while (windows_seen < 150) {  // covers i up to 50, three windows each
    GenusWindow w = genus_window(eps);
    CHECK(w.eps_lo == expected_lo);
    // Window size: i values of eps for H = 0,2 mod 3, i+1 for H = 1 mod 3.
    long long size = w.eps_hi - w.eps_lo + 1;
    if (w.heawood % 3 == 1)
      CHECK(size == w.i + 1);
    else
      CHECK(size == w.i);
    expected_lo = w.eps_hi + 1;
    eps = expected_lo;
    ++windows_seen;
  }
}

TEST_CASE("special genera are exactly the tops of H = 3i+4 windows") {
  std::vector<long long> specials;
  for (long long eps = 1; eps <= 5000; ++eps)
    if (genus_window(eps).special) specials.push_back(eps);
  // (3i^2+3i)/2 for i = 1, 2, 3, ...
  std::vector<long long> expected;
  for (long long i = 1; (3 * i * i + 3 * i) / 2 <= 5000; ++i)
    expected.push_back((3 * i * i + 3 * i) / 2);
  CHECK(specials == expected);
  REQUIRE(specials.size() >= 4);
  CHECK(specials[0] == 3);
  CHECK(specials[1] == 9);
  CHECK(specials[2] == 18);
  CHECK(specials[3] == 30);
}

TEST_CASE("largest_embeddable_clique with the Klein bottle exception") {
  CHECK(largest_embeddable_clique({2, false}) == 6);
  CHECK(largest_embeddable_clique({2, true}) == 7);
  CHECK(largest_embeddable_clique({1, false}) == 6);
  CHECK(largest_embeddable_clique({1, true}) == 6);
  CHECK(largest_embeddable_clique({9, true}) == 10);
  CHECK(largest_embeddable_clique({9, false}) == 10);
  CHECK_THROWS_AS(largest_embeddable_clique({0, true}), std::invalid_argument);
}

TEST_CASE("edge_bound pinned values") {
  CHECK(edge_bound(5, 1) == 12);
  CHECK(edge_bound(3, 0) == 3);
  CHECK(edge_bound(9, 4) == 33);
  CHECK(edge_bound(8, 2) == 24);
  CHECK_THROWS_AS(edge_bound(2, 1), std::invalid_argument);
}

TEST_CASE("inequality_star pinned values and domain") {
  CHECK(inequality_star(3, 8) == 4);
  CHECK(inequality_star(1, 7) == 0);
  CHECK(inequality_star(9, 12) == 0);
  // n must exceed the Heawood number.
  CHECK_THROWS_AS(inequality_star(1, 6), std::invalid_argument);
  CHECK_THROWS_AS(inequality_star(0, 10), std::invalid_argument);
}

TEST_CASE("inequality_star bound at n = H+1 is nonpositive off the special genera") {
  for (long long eps = 1; eps <= 2000; ++eps) {
    long long h = heawood_number(eps);
    long long bound = inequality_star(eps, h + 1);
    if (genus_window(eps).special)
      CHECK(bound == 4);  // the slack that keeps special genera alive
    else
      CHECK(bound <= 0);
  }
}

TEST_CASE("profile report: K6 on the projective plane is below theorem range") {
  DegreeProfile p;
  p.n = 6;
  p.degree_count[5] = 6;
  p.face_high_count = 0;
  ProfileReport r = check_profile_inequalities(p, 1);
  CHECK(r.heawood == 6);
  CHECK(r.status == ProfileStatus::out_of_theorem_range);
  CHECK_FALSE(r.special);
}

TEST_CASE("profile report: all-degree-5 profiles on Euler genus 2 fail (**)") {
  // At the n = H boundary the failing inequality is visible but the profile
  // is still out of range.
  DegreeProfile boundary;
  boundary.n = 7;
  boundary.degree_count[5] = 7;
  ProfileReport rb = check_profile_inequalities(boundary, 2);
  CHECK(rb.double_star.lhs == 14);
  CHECK(rb.double_star.rhs == 13);
  CHECK_FALSE(rb.double_star.holds);
  CHECK(rb.contradiction);
  CHECK(rb.status == ProfileStatus::out_of_theorem_range);

  // One vertex more and the contradiction is conclusive.
  DegreeProfile p;
  p.n = 8;
  p.degree_count[5] = 8;
  ProfileReport r = check_profile_inequalities(p, 2);
  CHECK(r.double_star.lhs == 16);
  CHECK(r.double_star.rhs == 14);
  CHECK_FALSE(r.double_star.holds);
  CHECK(r.status == ProfileStatus::contradiction_reached);
}

TEST_CASE("profile report: Euler genus 4 two-level profile lands in the dense-pair case") {
  DegreeProfile p;
  p.n = 9;
  p.degree_count[6] = 8;
  p.degree_count[8] = 1;
  p.face_high_count = 0;
  ProfileReport r = check_profile_inequalities(p, 4);
  CHECK(r.heawood == 8);
  CHECK(r.double_star.lhs == 27);
  CHECK(r.double_star.rhs == 27);
  CHECK(r.double_star.holds);
  CHECK(r.star.holds);
  CHECK(r.triple_star.holds);
  CHECK(r.status == ProfileStatus::lemma32_case);
}

TEST_CASE("profile report: projective-plane in-range two-level profile") {
  DegreeProfile p;
  p.n = 7;
  p.degree_count[4] = 7;
  ProfileReport r = check_profile_inequalities(p, 1);
  CHECK(r.heawood == 6);
  CHECK(r.star.holds);
  CHECK(r.double_star.holds);
  CHECK(r.status == ProfileStatus::lemma32_case);
}

TEST_CASE("profile report: special genera do not conclude from (**) alone") {
  DegreeProfile p;
  p.n = 12;
  p.degree_count[8] = 11;
  p.degree_count[11] = 1;
  ProfileReport r = check_profile_inequalities(p, 9);
  CHECK(r.special);
  CHECK(r.star.holds);
  CHECK_FALSE(r.double_star.holds);
  CHECK(r.contradiction);
  // (**) presupposes the non-special cleanup, so the status stays open.
  CHECK(r.status == ProfileStatus::open);

  // The same profile is a hard contradiction once (*) fails too.
  DegreeProfile q;
  q.n = 13;
  q.degree_count[8] = 13;
  ProfileReport rq = check_profile_inequalities(q, 9);
  CHECK_FALSE(rq.star.holds);
  CHECK(rq.status == ProfileStatus::contradiction_reached);
}

TEST_CASE("profile report: epsilon 3 is flagged as the excluded genus") {
  DegreeProfile p;
  p.n = 8;
  p.degree_count[5] = 8;
  ProfileReport r = check_profile_inequalities(p, 3);
  CHECK(r.excluded_eps3);
  CHECK(r.special);
  ProfileReport r9 = check_profile_inequalities(p, 9);
  CHECK_FALSE(r9.excluded_eps3);
}

TEST_CASE("profile validation rejects inconsistent censuses") {
  DegreeProfile p;
  p.n = 5;
  p.degree_count[3] = 4;  // sums to 4, not 5
  CHECK_THROWS_AS(check_profile_inequalities(p, 1), std::invalid_argument);

  DegreeProfile q;
  q.n = 3;
  q.degree_count[2] = 3;
  q.face_high_count = 4;  // more face vertices than vertices
  CHECK_THROWS_AS(check_profile_inequalities(q, 1), std::invalid_argument);

  DegreeProfile neg;
  neg.n = 0;
  neg.degree_count[2] = -1;
  neg.degree_count[3] = 1;
  CHECK_THROWS_AS(check_profile_inequalities(neg, 1), std::invalid_argument);
}
