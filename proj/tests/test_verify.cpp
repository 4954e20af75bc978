#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "heawood/report.hpp"
#include "heawood/verify.hpp"
#include "json.hpp"

using namespace heawood;

namespace {

bool same_checks(const RunReport& a, const RunReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    const CheckVerdict& x = a.checks[i];
    const CheckVerdict& y = b.checks[i];
    if (x.key != y.key || x.verdict != y.verdict || x.claim != y.claim ||
        x.detail != y.detail)
      return false;
  }
  return true;
}

const CheckVerdict* find_check(const RunReport& r, const std::string& key) {
  for (const auto& check : r.checks)
    if (check.key == key) return &check;
  return nullptr;
}

}  // namespace

TEST_CASE("one-face base case sweep, epsilon 1") {
  RunReport r = verify_lemma31(1);
  // All connected classes with n <= 6: 1+1+2+6+21+112, times 2^n subsets.
  CHECK(r.checks.size() == 7958);
  CHECK(r.count(Verdict::fail) == 0);
  CHECK(r.count(Verdict::exempt) == 17);  // subsets carrying a K5
  CHECK(r.all_pass());

  // K5 with every vertex on the face is the canonical exempt instance.
  const CheckVerdict* k5 = find_check(r, "n=5 class=00020 S=0x1f");
  REQUIRE(k5 != nullptr);
  CHECK(k5->verdict == Verdict::exempt);
  CHECK(k5->detail.find("f-bad K5 {0 1 2 3 4}") != std::string::npos);

  // Same graph with one vertex off the face is a genuine pass.
  const CheckVerdict* k5_off = find_check(r, "n=5 class=00020 S=0x0f");
  REQUIRE(k5_off != nullptr);
  CHECK(k5_off->verdict == Verdict::pass);
  CHECK(k5_off->detail.find("no preventing assignment") != std::string::npos);
}

TEST_CASE("one-face base case sweep, epsilon 2 and caps") {
  RunReport r = verify_lemma31(2);
  CHECK(r.checks.size() == 117142);
  CHECK(r.count(Verdict::fail) == 0);
  CHECK(r.count(Verdict::exempt) == 20);  // subsets carrying a K6

  VerifyOptions capped;
  capped.max_n = 4;
  CHECK(verify_lemma31(1, capped).checks.size() == 2 + 4 + 16 + 96);

  capped = {};
  capped.max_classes = 3;
  RunReport small = verify_lemma31(1, capped);
  CHECK(small.checks.size() == 2 + 4 + 8);

  CHECK_THROWS_AS(verify_lemma31(3), std::domain_error);
  CHECK_THROWS_AS(verify_lemma31(0), std::domain_error);

  VerifyOptions palette;
  palette.palette_bound = 5;  // below the off-face list size H = 6
  CHECK_THROWS_AS(verify_lemma31(1, palette), std::domain_error);
  palette.palette_bound = 6;
  CHECK(verify_lemma31(1, palette).all_pass());
}

TEST_CASE("degree-ordered greedy suite is seeded and total") {
  VerifyOptions opt;
  opt.instances = 200;
  opt.seed = 2026;
  RunReport r = verify_lemma42(opt);
  CHECK(r.checks.size() == 200);
  CHECK(r.count(Verdict::pass) == 200);
  for (const auto& check : r.checks) {
    CHECK(check.detail.find("coloring [") != std::string::npos);
    CHECK(check.detail.find("lists") != std::string::npos);
  }

  // Identical seeds reproduce the report; a different seed changes it.
  CHECK(same_checks(r, verify_lemma42(opt)));
  VerifyOptions other = opt;
  other.seed = 1;
  CHECK(!same_checks(r, verify_lemma42(other)));
}

TEST_CASE("degree-choosability characterization sweep at small scale") {
  VerifyOptions opt;
  opt.max_n = 5;
  RunReport r = verify_degree_choosability_characterization(opt);
  CHECK(r.checks.size() == 1 + 1 + 2 + 6 + 21);
  CHECK(r.count(Verdict::fail) == 0);

  // K2 is a Gallai tree, so its verdict embeds preventing degree-lists.
  const CheckVerdict* k2 = find_check(r, "n=2 class=00000");
  REQUIRE(k2 != nullptr);
  CHECK(k2->detail.find("preventing degree-lists") != std::string::npos);
}

TEST_CASE("critical edge bound sweep finds the known census") {
  VerifyOptions opt;
  opt.max_n = 7;
  RunReport r = verify_critical_edge_bound(opt);
  // K4 and K5 are exempt (they contain K_k); W5, the two 4-critical graphs
  // on 7 vertices, and the join of C5 with K2 pass.
  CHECK(r.checks.size() == 6);
  CHECK(r.count(Verdict::pass) == 4);
  CHECK(r.count(Verdict::exempt) == 2);
  CHECK(r.count(Verdict::fail) == 0);

  const CheckVerdict* k4 = find_check(r, "n=4 class=00005 k=4");
  REQUIRE(k4 != nullptr);
  CHECK(k4->verdict == Verdict::exempt);
  CHECK(k4->detail.find("contains K4") != std::string::npos);

  // The full n <= 8 sweep adds the five 4-critical and two 5-critical
  // graphs on 8 vertices.
  VerifyOptions full;
  full.max_n = 8;
  RunReport r8 = verify_critical_edge_bound(full);
  CHECK(r8.checks.size() == 13);
  CHECK(r8.count(Verdict::pass) == 11);
  CHECK(r8.count(Verdict::exempt) == 2);
  CHECK(r8.count(Verdict::fail) == 0);
}

TEST_CASE("construction claims: gallai join") {
  RunReport r = verify_construction("gallai", ConstructionParams{.k = 4});
  CHECK(r.checks.size() == 3);
  CHECK(r.all_pass());
  CHECK(r.count(Verdict::pass) == 3);
  const CheckVerdict* bound = find_check(r, "gallai/edge-bound");
  REQUIRE(bound != nullptr);
  CHECK(bound->detail.find("margin=1") != std::string::npos);  // W5: 2e=20

  CHECK(verify_construction("gallai", ConstructionParams{.k = 7}).all_pass());
  CHECK_THROWS_AS(verify_construction("gallai", ConstructionParams{.k = 3}),
                  std::domain_error);
  CHECK_THROWS_AS(verify_construction("gallai", ConstructionParams{.k = 8}),
                  std::domain_error);
  CHECK_THROWS_AS(verify_construction("nonesuch", ConstructionParams{}),
                  std::domain_error);
}

TEST_CASE("construction claims: complete join family at i = 2") {
  RunReport r = verify_construction("prop12", ConstructionParams{.i = 2});
  CHECK(r.checks.size() == 4);
  CHECK(r.count(Verdict::pass) == 4);
  const CheckVerdict* genus = find_check(r, "prop12/genus-arithmetic");
  REQUIRE(genus != nullptr);
  CHECK(genus->detail == "epsilon=9 H=10 edges=54 bound=54 (special)");

  CHECK_THROWS_AS(verify_construction("prop12", ConstructionParams{.i = 3}),
                  std::domain_error);
}

TEST_CASE("construction claims: polygon identification sweep") {
  ConstructionParams params;
  params.max_n = 9;
  VerifyOptions opt;
  opt.seed = 2026;
  RunReport r = verify_construction("section5", params, opt);
  CHECK(r.checks.size() == 45);
  CHECK(r.count(Verdict::fail) == 0);
  CHECK(r.count(Verdict::exempt) == 2);  // condition-not-met, chi stays 3

  // The family's selling point shows up by n = 9: a quotient with no K4
  // that still defeats 3-lists.
  const CheckVerdict* witness = find_check(r, "summary/k4-free-witness");
  REQUIRE(witness != nullptr);
  CHECK(witness->verdict == Verdict::pass);

  ConstructionParams plain = params;
  plain.twist = 0;
  for (const auto& check : verify_construction("section5", plain, opt).checks)
    if (check.key.rfind("summary", 0) != 0)
      CHECK(check.key.find("twist=0") != std::string::npos);

  ConstructionParams bad = params;
  bad.max_n = 10;
  CHECK_THROWS_AS(verify_construction("section5", bad, opt),
                  std::domain_error);
  bad.max_n = 3;
  CHECK_THROWS_AS(verify_construction("section5", bad, opt),
                  std::domain_error);
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  VerifyOptions serial;
  serial.max_classes = 40;
  VerifyOptions parallel = serial;
  parallel.mode = RunMode::parallel;
  CHECK(same_checks(verify_lemma31(1, serial), verify_lemma31(1, parallel)));

  VerifyOptions s42;
  s42.instances = 64;
  VerifyOptions p42 = s42;
  p42.mode = RunMode::parallel;
  CHECK(same_checks(verify_lemma42(s42), verify_lemma42(p42)));

  ConstructionParams params;
  params.max_n = 8;
  CHECK(same_checks(verify_construction("section5", params, s42),
                    verify_construction("section5", params, p42)));
}

TEST_CASE("report rendering") {
  VerifyOptions opt;
  opt.max_n = 3;
  RunReport r = verify_lemma31(1, opt);

  std::string text = report_to_text(r);
  CHECK(text.find("command: verify-lemma31") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK(text.find("epsilon: 1") != std::string::npos);
  // Pass rows are summarized away unless asked for.
  CHECK(text.find("no preventing assignment") == std::string::npos);
  CHECK(report_to_text(r, true).find("no preventing assignment") !=
        std::string::npos);

  auto doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc["format_version"] == 1);
  CHECK(doc["result"] == "pass");
  CHECK(doc["summary"]["checks"] == r.checks.size());
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["checks"].size() == r.checks.size());
  CHECK(doc["params"]["heawood"] == "6");

  RunMode mode = parse_run_mode("parallel");
  CHECK(to_string(mode) == "parallel");
  CHECK_THROWS_AS(parse_run_mode("fast"), std::invalid_argument);
}
