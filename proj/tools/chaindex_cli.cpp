// chaindex: exact resistance and distance indices of octagonal-quadrilateral
// chains, and verification of their closed forms.
//
//   chaindex indices --n 3 --kind crossed
//   chaindex verify --from 1 --to 6 --format csv --out report.csv
//   chaindex table --which 2 --to 15
//   chaindex bench --n 1 --n 20 --n 1000
//   chaindex graph --n 2 --kind plain

#include "chaindex/chaindex.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// Owns a string handed out by the C API.
struct ApiString {
  char* ptr = nullptr;
  ApiString() = default;
  ApiString(const ApiString&) = delete;
  ApiString& operator=(const ApiString&) = delete;
  ~ApiString() { chaindex_string_free(ptr); }
};

struct GraphHandle {
  chaindex_graph* ptr = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { chaindex_graph_destroy(ptr); }
};

int report_error(chaindex_status status) {
  std::cerr << "chaindex: error " << static_cast<int>(status) << ": " << chaindex_last_error() << '\n';
  return 2;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "chaindex: cannot write " << out_path << '\n';
    return 2;
  }
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
  return 0;
}

chaindex_kind kind_of(const std::string& s) { return s == "plain" ? CHAINDEX_KIND_PLAIN : CHAINDEX_KIND_CROSSED; }
chaindex_format format_of(const std::string& s) { return s == "csv" ? CHAINDEX_FORMAT_CSV : CHAINDEX_FORMAT_JSON; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kirchhoff-type indices of linear octagonal-quadrilateral chains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(chaindex_version()));

  std::string out_path;
  std::string format = "json";
  std::string kind = "crossed";
  int n = 1;
  int from = 1;
  int to = 6;
  int which = 1;
  std::vector<int> bench_ns;
  int oracle_max = 20;
  std::string u_token, v_token;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write output to a file"); };

  auto* indices = app.add_subcommand("indices", "Oracle index bundle of one chain (JSON)");
  indices->add_option("--n", n, "Number of octagons (>= 1)")->required();
  indices->add_option("--kind", kind, "Chain kind")->check(CLI::IsMember({"crossed", "plain"}))->capture_default_str();
  add_out(indices);

  auto* verify = app.add_subcommand("verify", "Check every closed form and identity over a range of n");
  verify->add_option("--from", from, "First n")->capture_default_str();
  verify->add_option("--to", to, "Last n")->capture_default_str();
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_out(verify);

  auto* table = app.add_subcommand("table", "Reproduce a printed table (1: Kf, 2: Kf*, 3: spanning trees)");
  table->add_option("--which", which, "Table id")->check(CLI::Range(1, 3))->required();
  table->add_option("--to", to, "Largest n (default: the printed range)");
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  add_out(table);

  auto* bench = app.add_subcommand("bench", "Time closed forms against the oracles");
  bench->add_option("--n", bench_ns, "Chain sizes (repeatable)")->required();
  bench->add_option("--oracle-max", oracle_max, "Largest n to run the oracle for")->capture_default_str();
  bench->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  add_out(bench);

  auto* graph = app.add_subcommand("graph", "Export a chain as an edge list");
  graph->add_option("--n", n, "Number of octagons (>= 1)")->required();
  graph->add_option("--kind", kind, "Chain kind")->check(CLI::IsMember({"crossed", "plain"}))->capture_default_str();
  add_out(graph);

  auto* resist = app.add_subcommand("resistance", "Effective resistance between two vertices");
  resist->add_option("--n", n, "Number of octagons (>= 1)")->required();
  resist->add_option("--kind", kind, "Chain kind")->check(CLI::IsMember({"crossed", "plain"}))->capture_default_str();
  resist->add_option("u", u_token, "Vertex such as 3 or 3'")->required();
  resist->add_option("v", v_token, "Vertex such as 3 or 3'")->required();

  CLI11_PARSE(app, argc, argv);

  ApiString text;
  chaindex_status status = CHAINDEX_OK;

  if (*indices || *graph || *resist) {
    GraphHandle g;
    status = chaindex_graph_create(n, kind_of(kind), &g.ptr);
    if (status != CHAINDEX_OK) return report_error(status);
    if (*indices) status = chaindex_indices_json(g.ptr, &text.ptr);
    else if (*graph) status = chaindex_graph_edge_list(g.ptr, &text.ptr);
    else status = chaindex_resistance(g.ptr, u_token.c_str(), v_token.c_str(), &text.ptr);
  } else if (*verify) {
    status = chaindex_verify(from, to, 0, format_of(format), &text.ptr);
  } else if (*table) {
    const int n_max = table->count("--to") ? to : (which == 3 ? 8 : 15);
    const std::string fmt = table->count("--format") ? format : "csv";
    status = chaindex_table(which, n_max, format_of(fmt), &text.ptr);
  } else if (*bench) {
    const std::string fmt = bench->count("--format") ? format : "csv";
    status = chaindex_bench(bench_ns.data(), bench_ns.size(), oracle_max, format_of(fmt), &text.ptr);
  }
  if (status != CHAINDEX_OK) return report_error(status);
  return emit(text.ptr, out_path);
}
