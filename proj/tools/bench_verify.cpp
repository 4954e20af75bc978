// Benchmark comparing the serial reference driver against the OpenMP
// fan-out across the verification sweeps. Reports wall time per mode, the
// speedup, and whether the two reports agree check for check (they must).

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "heawood/report.hpp"
#include "heawood/verify.hpp"

using namespace heawood;

namespace {

bool same_checks(const RunReport& a, const RunReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    const CheckVerdict& x = a.checks[i];
    const CheckVerdict& y = b.checks[i];
    if (x.key != y.key || x.verdict != y.verdict || x.detail != y.detail)
      return false;
  }
  return true;
}

struct Bench {
  std::string name;
  std::function<RunReport(RunMode)> run;
};

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel mode falls back to serial\n");
#endif

  std::vector<Bench> benches = {
      {"lemma31 eps=1 (7958 checks)",
       [](RunMode mode) {
         VerifyOptions opt;
         opt.mode = mode;
         return verify_lemma31(1, opt);
       }},
      {"lemma31 eps=2 (117142 checks)",
       [](RunMode mode) {
         VerifyOptions opt;
         opt.mode = mode;
         return verify_lemma31(2, opt);
       }},
      {"lemma42 x5000",
       [](RunMode mode) {
         VerifyOptions opt;
         opt.mode = mode;
         opt.instances = 5000;
         opt.seed = 2026;
         return verify_lemma42(opt);
       }},
      {"thm21 n<=6",
       [](RunMode mode) {
         VerifyOptions opt;
         opt.mode = mode;
         opt.max_n = 6;
         return verify_degree_choosability_characterization(opt);
       }},
      {"thm22 n<=8",
       [](RunMode mode) {
         VerifyOptions opt;
         opt.mode = mode;
         opt.max_n = 8;
         return verify_critical_edge_bound(opt);
       }},
      {"section5 n<=9",
       [](RunMode mode) {
         ConstructionParams params;
         params.max_n = 9;
         VerifyOptions opt;
         opt.mode = mode;
         opt.seed = 2026;
         return verify_construction("section5", params, opt);
       }},
  };

  std::printf("%-30s %10s %10s %8s %s\n", "sweep", "serial[s]", "parallel[s]",
              "speedup", "agree");
  bool all_agree = true;
  for (const Bench& bench : benches) {
    bench.run(RunMode::serial);  // warm the enumeration caches untimed
    RunReport serial = bench.run(RunMode::serial);
    RunReport parallel = bench.run(RunMode::parallel);
    bool agree = same_checks(serial, parallel) && serial.all_pass() &&
                 parallel.all_pass();
    all_agree = all_agree && agree;
    std::printf("%-30s %10.3f %10.3f %7.2fx %s\n", bench.name.c_str(),
                serial.wall_seconds, parallel.wall_seconds,
                serial.wall_seconds / std::max(parallel.wall_seconds, 1e-9),
                agree ? "yes" : "NO");
  }
  return all_agree ? 0 : 1;
}
