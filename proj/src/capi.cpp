#include "chaindex/chaindex.h"

#include "chaindex/chain_graph.hpp"
#include "chaindex/closed_forms.hpp"
#include "chaindex/linalg.hpp"
#include "chaindex/oracles.hpp"
#include "chaindex/verify.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

struct chaindex_graph {
  chaindex::ChainGraph chain;
};

namespace {

thread_local std::string last_error;

chaindex_status fail(chaindex_status code, const char* what) {
  last_error = what;
  return code;
}

// Runs f, translating exceptions into status codes.
template <class F>
chaindex_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return CHAINDEX_OK;
  } catch (const chaindex::DisconnectedGraphError& e) {
    return fail(CHAINDEX_ERR_DISCONNECTED, e.what());
  } catch (const chaindex::SingularMatrixError& e) {
    return fail(CHAINDEX_ERR_SINGULAR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CHAINDEX_ERR_PARSE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(CHAINDEX_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CHAINDEX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(CHAINDEX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CHAINDEX_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

chaindex::ChainKind to_kind(chaindex_kind k) {
  switch (k) {
    case CHAINDEX_KIND_CROSSED: return chaindex::ChainKind::Crossed;
    case CHAINDEX_KIND_PLAIN: return chaindex::ChainKind::Plain;
  }
  throw std::invalid_argument("unknown chain kind");
}

void require_out(const void* p) {
  if (p == nullptr) throw std::invalid_argument("null argument");
}

std::string indices_json(const chaindex::ChainGraph& chain) {
  using namespace chaindex;
  const IndexBundle bundle = compute_index_bundle(chain);
  auto j = nlohmann::ordered_json::parse(to_json(bundle));
  if (chain.kind() == ChainKind::Crossed) {
    const ClosedFormSet c = closed_form_set(chain.n());
    j["closed_form"] = {{"kf", to_string(c.kf)},
                        {"kf_star", to_string(c.kf_star)},
                        {"tau", to_string(c.tau)},
                        {"wiener_claim", to_string(c.wiener_claim)},
                        {"gutman_claim", to_string(c.gutman_claim)}};
  }
  return j.dump(2);
}

}  // namespace

extern "C" {

const char* chaindex_version(void) { return "1.0.0"; }

const char* chaindex_last_error(void) { return last_error.c_str(); }

void chaindex_string_free(char* s) { std::free(s); }

chaindex_status chaindex_graph_create(int n, chaindex_kind kind, chaindex_graph** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = new chaindex_graph{chaindex::build_chain(n, to_kind(kind))};
  });
}

void chaindex_graph_destroy(chaindex_graph* g) { delete g; }

chaindex_status chaindex_graph_order(const chaindex_graph* g, size_t* out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = g->chain.graph().order();
  });
}

chaindex_status chaindex_graph_size(const chaindex_graph* g, size_t* out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = g->chain.graph().size();
  });
}

chaindex_status chaindex_graph_edge_list(const chaindex_graph* g, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = dup_string(chaindex::to_edge_list(g->chain));
  });
}

chaindex_status chaindex_graph_from_edge_list(const char* text, chaindex_graph** out) {
  return guarded([&] {
    require_out(text);
    require_out(out);
    *out = nullptr;
    *out = new chaindex_graph{chaindex::parse_edge_list(text)};
  });
}

chaindex_status chaindex_resistance(const chaindex_graph* g, const char* u, const char* v, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(u);
    require_out(v);
    require_out(out);
    const auto r = chaindex::resistance(g->chain, chaindex::parse_vertex(u), chaindex::parse_vertex(v));
    *out = dup_string(chaindex::to_string(r));
  });
}

chaindex_status chaindex_indices_json(const chaindex_graph* g, char** out) {
  return guarded([&] {
    require_out(g);
    require_out(out);
    *out = dup_string(indices_json(g->chain));
  });
}

chaindex_status chaindex_verify(int n_from, int n_to, unsigned threads, chaindex_format format, char** out) {
  return guarded([&] {
    require_out(out);
    const auto report = chaindex::run_verification(n_from, n_to, threads);
    *out = dup_string(format == CHAINDEX_FORMAT_CSV ? chaindex::to_csv(report) : chaindex::to_json(report));
  });
}

chaindex_status chaindex_table(int which, int n_max, chaindex_format format, char** out) {
  return guarded([&] {
    require_out(out);
    const auto rows = chaindex::reproduce_table(which, n_max);
    *out = dup_string(format == CHAINDEX_FORMAT_JSON ? chaindex::table_to_json(which, rows)
                                                     : chaindex::table_to_csv(rows));
  });
}

chaindex_status chaindex_bench(const int* ns, size_t count, int oracle_max_n, chaindex_format format, char** out) {
  return guarded([&] {
    require_out(out);
    if (count > 0) require_out(ns);
    const std::vector<int> list(ns, ns + count);
    chaindex::BenchOptions options;
    options.oracle_max_n = oracle_max_n;
    const auto rows = chaindex::run_bench(list, options);
    *out = dup_string(format == CHAINDEX_FORMAT_CSV ? chaindex::bench_to_csv(rows) : chaindex::bench_to_json(rows));
  });
}

}  // extern "C"
