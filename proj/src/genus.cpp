#include "heawood/genus.hpp"

#include <stdexcept>
#include <string>

namespace heawood {

long long isqrt_floor(long long x) {
  if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  if (x < 2) return x;
  // Newton iteration on integers converges from above once past the root.
  long long r = x;
  long long next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

long long heawood_number(long long epsilon) {
  if (epsilon < 1)
    throw std::invalid_argument("heawood_number: requires epsilon >= 1, got " +
                                std::to_string(epsilon));
  return (7 + isqrt_floor(24 * epsilon + 1)) / 2;
}

CompleteGenus min_genus_complete(long long n) {
  if (n < 3)
    throw std::invalid_argument("min_genus_complete: requires n >= 3, got " +
                                std::to_string(n));
  long long num = (n - 3) * (n - 4);
  CompleteGenus out;
  out.epsilon = (num + 5) / 6;  // ceil(num / 6), num >= 0
  out.klein_exception = (n == 7);
  return out;
}

GenusWindow genus_window(long long epsilon) {
  long long h = heawood_number(epsilon);
  GenusWindow w;
  w.heawood = h;
  w.i = (h - 3) / 3;
  long long i = w.i;
  switch (h % 3) {
    case 0:  // H = 3i + 3
      w.eps_lo = (3 * i * i - i) / 2;
      w.eps_hi = (3 * i * i + i - 2) / 2;
      break;
    case 1:  // H = 3i + 4
      w.eps_lo = (3 * i * i + i) / 2;
      w.eps_hi = (3 * i * i + 3 * i) / 2;
      break;
    default:  // H = 3i + 5
      w.eps_lo = (3 * i * i + 3 * i + 2) / 2;
      w.eps_hi = (3 * i * i + 5 * i) / 2;
      break;
  }
  w.special = (h % 3 == 1) && (epsilon == w.eps_hi);
  return w;
}

long long largest_embeddable_clique(const SurfaceGenus& surface) {
  long long h = heawood_number(surface.epsilon);
  if (surface.epsilon == 2 && !surface.orientable) return 6;  // Klein bottle
  return h;
}

long long edge_bound(long long n, long long epsilon) {
  if (n < 3)
    throw std::invalid_argument("edge_bound: requires n >= 3, got " +
                                std::to_string(n));
  return 3 * n + 3 * (epsilon - 2);
}

long long inequality_star(long long epsilon, long long n) {
  long long h = heawood_number(epsilon);
  if (n < h + 1)
    throw std::invalid_argument(
        "inequality_star: requires n >= H(eps)+1 = " + std::to_string(h + 1) +
        ", got n = " + std::to_string(n));
  return 6 * (epsilon - 1) - (h - 6) * n;
}

long long DegreeProfile::count_of(long long degree) const {
  auto it = degree_count.find(degree);
  return it == degree_count.end() ? 0 : it->second;
}

long long DegreeProfile::count_at_least(long long degree) const {
  long long total = 0;
  for (auto it = degree_count.lower_bound(degree); it != degree_count.end();
       ++it)
    total += it->second;
  return total;
}

void DegreeProfile::validate() const {
  if (n < 0) throw std::invalid_argument("DegreeProfile: negative n");
  long long sum = 0;
  for (const auto& [degree, count] : degree_count) {
    if (degree < 0)
      throw std::invalid_argument("DegreeProfile: negative degree key");
    if (count < 0)
      throw std::invalid_argument("DegreeProfile: negative count for degree " +
                                  std::to_string(degree));
    sum += count;
  }
  if (sum != n)
    throw std::invalid_argument("DegreeProfile: counts sum to " +
                                std::to_string(sum) + ", expected n = " +
                                std::to_string(n));
  if (face_high_count < 0 || face_high_count > n)
    throw std::invalid_argument("DegreeProfile: face_high_count out of range");
}

ProfileReport check_profile_inequalities(const DegreeProfile& profile,
                                         long long epsilon) {
  profile.validate();
  long long h = heawood_number(epsilon);
  GenusWindow window = genus_window(epsilon);

  ProfileReport r;
  r.epsilon = epsilon;
  r.heawood = h;
  r.n = profile.n;
  r.special = window.special;
  r.excluded_eps3 = (epsilon == 3);

  long long n = profile.n;
  long long d_hm2 = profile.count_of(h - 2);
  long long d_hm1 = profile.count_of(h - 1);
  long long d_h = profile.count_of(h);

  r.star.lhs = d_hm1 + 2 * profile.face_high_count;
  r.star.rhs = 6 * (epsilon - 1) - (h - 6) * n;
  r.star.holds = r.star.lhs <= r.star.rhs;

  r.double_star.lhs = (h - 5) * n;
  r.double_star.rhs = 6 * (epsilon - 1) + d_hm2 + d_h;
  r.double_star.holds = r.double_star.lhs <= r.double_star.rhs;

  r.triple_star.lhs =
      (h - 6) * (d_hm2 + d_h) + (h - 5) * profile.count_at_least(h + 1);
  r.triple_star.rhs = 6 * (epsilon - 1);
  r.triple_star.holds = r.triple_star.lhs <= r.triple_star.rhs;

  r.contradiction =
      !r.star.holds || !r.double_star.holds || !r.triple_star.holds;

  // (**) and (***) are only derived after (*) has forced d_{H-1} and
  // d^F_{>=H} to zero, which needs a non-special epsilon; (*) itself is
  // valid for every epsilon >= 1.
  bool conclusive_failure =
      !r.star.holds ||
      (!r.special && (!r.double_star.holds || !r.triple_star.holds));

  if (n <= h)
    r.status = ProfileStatus::out_of_theorem_range;
  else if (conclusive_failure)
    r.status = ProfileStatus::contradiction_reached;
  else if (n == d_hm2 + d_h)
    r.status = ProfileStatus::lemma32_case;
  else
    r.status = ProfileStatus::open;
  return r;
}

}  // namespace heawood
