#include "doctest.h"

#include "chaindex/chaindex.h"

#include "json.hpp"

#include <string>

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { chaindex_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("graph handles") {
  chaindex_graph* g = nullptr;
  REQUIRE(chaindex_graph_create(1, CHAINDEX_KIND_CROSSED, &g) == CHAINDEX_OK);
  size_t order = 0, size = 0;
  CHECK(chaindex_graph_order(g, &order) == CHAINDEX_OK);
  CHECK(chaindex_graph_size(g, &size) == CHAINDEX_OK);
  CHECK(order == 10);
  CHECK(size == 19);

  Owned edges;
  REQUIRE(chaindex_graph_edge_list(g, &edges.p) == CHAINDEX_OK);
  CHECK(edges.str().rfind("crossed-chain n=1\n", 0) == 0);

  chaindex_graph* back = nullptr;
  REQUIRE(chaindex_graph_from_edge_list(edges.p, &back) == CHAINDEX_OK);
  CHECK(chaindex_graph_size(back, &size) == CHAINDEX_OK);
  CHECK(size == 19);
  chaindex_graph_destroy(back);

  Owned r;
  CHECK(chaindex_resistance(g, "1", "1'", &r.p) == CHAINDEX_OK);
  CHECK(r.str() == "1/2");
  Owned bad;
  CHECK(chaindex_resistance(g, "1", "1", &bad.p) == CHAINDEX_ERR_INVALID_ARGUMENT);
  CHECK(bad.p == nullptr);
  CHECK(chaindex_resistance(g, "1", "99", &bad.p) == CHAINDEX_ERR_OUT_OF_RANGE);
  CHECK(std::string(chaindex_last_error()).size() > 0);

  Owned js;
  REQUIRE(chaindex_indices_json(g, &js.p) == CHAINDEX_OK);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["kf"] == "95/3");
  CHECK(j["tau"] == "12288");
  CHECK(j["closed_form"]["wiener_claim"] == "88");
  chaindex_graph_destroy(g);
  chaindex_graph_destroy(nullptr);
}

TEST_CASE("plain chains carry no closed forms") {
  chaindex_graph* g = nullptr;
  REQUIRE(chaindex_graph_create(1, CHAINDEX_KIND_PLAIN, &g) == CHAINDEX_OK);
  Owned js;
  REQUIRE(chaindex_indices_json(g, &js.p) == CHAINDEX_OK);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["kind"] == "plain");
  CHECK_FALSE(j.contains("closed_form"));
  chaindex_graph_destroy(g);
}

TEST_CASE("argument errors map to status codes") {
  chaindex_graph* g = nullptr;
  CHECK(chaindex_graph_create(0, CHAINDEX_KIND_CROSSED, &g) == CHAINDEX_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(chaindex_graph_create(1, CHAINDEX_KIND_CROSSED, nullptr) == CHAINDEX_ERR_INVALID_ARGUMENT);
  CHECK(chaindex_graph_from_edge_list("nonsense", &g) != CHAINDEX_OK);
  Owned out;
  CHECK(chaindex_verify(2, 1, 1, CHAINDEX_FORMAT_JSON, &out.p) != CHAINDEX_OK);
  CHECK(chaindex_table(7, 3, CHAINDEX_FORMAT_CSV, &out.p) != CHAINDEX_OK);
  int ns[] = {0};
  CHECK(chaindex_bench(ns, 1, 1, CHAINDEX_FORMAT_CSV, &out.p) != CHAINDEX_OK);
}

TEST_CASE("verification, tables and bench through the C API") {
  Owned report;
  REQUIRE(chaindex_verify(1, 1, 1, CHAINDEX_FORMAT_CSV, &report.p) == CHAINDEX_OK);
  CHECK(report.str().find("Thm3.3.W,1,88,87,Mismatch") != std::string::npos);

  Owned table;
  REQUIRE(chaindex_table(3, 8, CHAINDEX_FORMAT_CSV, &table.p) == CHAINDEX_OK);
  CHECK(table.str().find("7528977498068181366035447808") != std::string::npos);

  Owned bench;
  int ns[] = {1, 2};
  REQUIRE(chaindex_bench(ns, 2, 2, CHAINDEX_FORMAT_JSON, &bench.p) == CHAINDEX_OK);
  CHECK(nlohmann::json::parse(bench.str()).size() == 2);
  CHECK(std::string(chaindex_version()).size() > 0);
}
