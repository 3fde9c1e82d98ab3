#include "doctest.h"

#include "chaindex/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <set>

using namespace chaindex;

namespace {

const VerificationReport& report_1_to_3() {
  static const VerificationReport r = run_verification(1, 3, 2);
  return r;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(to_json_name(Status::RoundingMatch) == "rounding_match");
  CHECK(to_csv_name(Status::RoundingMatch) == "RoundingMatch");
  CHECK(parse_status("match") == Status::Match);
  CHECK(parse_status("Mismatch") == Status::Mismatch);
  CHECK_THROWS(parse_status("maybe"));
}

TEST_CASE("closed forms match the oracles for n = 1..3") {
  const auto& r = report_1_to_3();
  for (int n = 1; n <= 3; ++n) {
    for (const char* id : {"Thm3.2", "Thm4.2", "Thm3.4", "Lemma2.1.L", "Lemma2.1.NL", "Lemma3.1", "Lemma4.1"}) {
      CAPTURE(id);
      CAPTURE(n);
      auto rec = r.find(id, n);
      REQUIRE(rec);
      CHECK(rec->status == Status::Match);
    }
  }
  auto w = r.find("Thm3.3.W", 1);
  REQUIRE(w);
  CHECK(w->paper_value == "88");
  CHECK(w->computed_value == "87");
  CHECK(w->status == Status::Mismatch);
}

TEST_CASE("every registry claim appears") {
  const auto& r = report_1_to_3();
  for (int n = 1; n <= 3; ++n) {
    for (const auto& id : claim_registry(n)) {
      CAPTURE(id);
      CHECK(r.find(id, n).has_value());
    }
  }
  std::size_t expected = 0;
  for (int n = 1; n <= 3; ++n) expected += claim_registry(n).size();
  CHECK(r.records.size() == expected);
}

TEST_CASE("n = 6 exercises all sixteen z cases") {
  auto records = verify_n(6);
  std::set<std::string> cases;
  for (const auto& rec : records)
    if (rec.claim_id.rfind("Appendix.Case", 0) == 0) {
      cases.insert(rec.claim_id);
      CHECK(rec.status == Status::Match);
    }
  CHECK(cases.size() == 16);
}

TEST_CASE("summary and serialization") {
  const auto& r = report_1_to_3();
  auto s = r.summary();
  CHECK(s.match + s.mismatch + s.rounding_match == r.records.size());
  auto text = to_json(r);
  CHECK(report_from_json(text) == r);
  auto j = nlohmann::json::parse(text);
  CHECK(j["summary"]["mismatch"] == s.mismatch);
  j["summary"]["match"] = 0;
  CHECK_THROWS(report_from_json(j.dump()));
  auto csv = to_csv(r);
  CHECK(csv.rfind("claim_id,n,paper_value,computed_value,status\n", 0) == 0);
  CHECK(csv.find("Thm3.3.W,1,88,87,Mismatch\n") != std::string::npos);
}

TEST_CASE("parallel and serial runs agree") {
  CHECK(run_verification(1, 3, 1) == report_1_to_3());
  CHECK_THROWS(run_verification(3, 1));
  CHECK_THROWS(run_verification(0, 1));
}

TEST_CASE("thread cap from the environment") {
  setenv("CHAINDEX_THREADS", "1", 1);
  CHECK(default_thread_count() == 1);
  setenv("CHAINDEX_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("CHAINDEX_THREADS");
  CHECK(default_thread_count() >= 1);
}

TEST_CASE("table reproduction") {
  auto t1 = reproduce_table(1, 15);
  REQUIRE(t1.size() == 15);
  CHECK(table_to_csv(t1).find("\n2,156,156.00,156.00,Match\n") != std::string::npos);
  CHECK(t1[9].status == Status::RoundingMatch);
  CHECK(t1[14].exact == "118157/3");

  auto t2 = reproduce_table(2, 15);
  CHECK(t2[11].rendered == "398009.33");
  CHECK(t2[11].printed == "398009.34");
  CHECK(t2[11].status == Status::RoundingMatch);
  CHECK(t2[10].status == Status::Mismatch);  // printed 308316, exact 308346

  auto t3 = reproduce_table(3, 8);
  CHECK(t3[6].exact == "7528977498068181366035447808");
  for (const auto& row : t3) CHECK(row.status == Status::Match);

  auto beyond = reproduce_table(3, 9);
  CHECK_FALSE(beyond[8].printed);
  CHECK_FALSE(beyond[8].status);
  CHECK(printed_table_value(1, 16) == std::nullopt);
  CHECK_THROWS(reproduce_table(4, 3));
  auto js = nlohmann::json::parse(table_to_json(1, t1));
  CHECK(js["rows"][1]["exact"] == "156");
}

TEST_CASE("bench rows") {
  auto rows = run_bench({1, 3, 1000}, {.oracle_max_n = 3});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].exact_equal == true);
  CHECK(rows[1].exact_equal == true);
  CHECK_FALSE(rows[2].oracle_ms);
  CHECK(rows[2].closed_form_ms >= 0);
  auto csv = bench_to_csv(rows);
  CHECK(csv.rfind("n,method,milliseconds,exact_equal\n", 0) == 0);
  CHECK(csv.find("1,oracle,") != std::string::npos);
  CHECK(nlohmann::json::parse(bench_to_json(rows)).is_array());
}
