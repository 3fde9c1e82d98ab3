#include "chaindex/oracles.hpp"

#include "chaindex/linalg.hpp"

#include "json.hpp"

#include <queue>

namespace chaindex {

namespace {

void require_connected(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("graph needs at least two vertices");
  if (!g.connected()) throw DisconnectedGraphError("graph is disconnected");
}

}  // namespace

Rational resistance(const Graph& g, std::size_t u, std::size_t v) {
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("resistance needs two distinct vertices");
  require_connected(g);
  const std::size_t drop[] = {v};
  const RationalMatrix grounded = laplacian(g).without(drop);
  std::vector<Rational> current(grounded.rows());
  const std::size_t source = u < v ? u : u - 1;
  current[source] = 1;
  const std::vector<Rational> potential = solve(grounded, current);
  return potential[source];
}

Rational resistance(const ChainGraph& g, const VertexId& u, const VertexId& v) {
  return resistance(g.graph(), g.position(u), g.position(v));
}

ResistanceTable::ResistanceTable(const Graph& g) : order_(g.order()) {
  require_connected(g);
  const std::size_t ground = order_ - 1;
  const std::size_t drop[] = {ground};
  Adjugate inv = adjugate_fraction_free(laplacian(g).without(drop));
  det_ = std::move(inv.det);
  adj_ = std::move(inv.adj);
}

BigInt ResistanceTable::scaled(std::size_t u, std::size_t v) const {
  if (u >= order_ || v >= order_) throw std::out_of_range("vertex out of range");
  const std::size_t dim = order_ - 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigInt {
    if (r == dim || c == dim) return 0;
    return adj_[r * dim + c];
  };
  return at(u, u) + at(v, v) - 2 * at(u, v);
}

Rational ResistanceTable::operator()(std::size_t u, std::size_t v) const {
  if (u >= order_ || v >= order_) throw std::out_of_range("vertex out of range");
  if (u == v) return 0;
  return make_rational(scaled(u, v), det_);
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          frontier.push(w);
        }
      }
    }
  }
  return dist;
}

namespace {

// order * next/low of the Laplacian-like matrix's characteristic polynomial.
Rational reciprocal_eigen_sum(const RationalMatrix& m) {
  const TrailingPair t = trailing_pair(char_poly(m));
  return t.next / t.low;
}

}  // namespace

DualRoute kirchhoff_routes(const Graph& g, bool spectral_check) {
  require_connected(g);
  const ResistanceTable r(g);
  BigInt total = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) total += r.scaled(u, v);
  }
  DualRoute out{make_rational(total, r.tree_count()), std::nullopt};
  if (spectral_check) {
    out.spectral = static_cast<long>(g.order()) * reciprocal_eigen_sum(laplacian(g));
  }
  return out;
}

DualRoute degree_kirchhoff_routes(const Graph& g, bool spectral_check) {
  require_connected(g);
  const ResistanceTable r(g);
  BigInt total = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto du = static_cast<long>(g.degree(u));
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      total += du * static_cast<long>(g.degree(v)) * r.scaled(u, v);
    }
  }
  DualRoute out{make_rational(total, r.tree_count()), std::nullopt};
  if (spectral_check) {
    const long two_m = 2 * static_cast<long>(g.size());
    out.spectral = two_m * reciprocal_eigen_sum(normalized_similarity(g));
  }
  return out;
}

Rational kirchhoff_oracle(const Graph& g) {
  const DualRoute d = kirchhoff_routes(g);
  if (!d.agree()) {
    throw std::logic_error("Kirchhoff routes disagree: pairwise " + to_string(d.pairwise) + ", spectral " +
                           to_string(*d.spectral));
  }
  return d.pairwise;
}

Rational degree_kirchhoff_oracle(const Graph& g) {
  const DualRoute d = degree_kirchhoff_routes(g);
  if (!d.agree()) {
    throw std::logic_error("degree-Kirchhoff routes disagree: pairwise " + to_string(d.pairwise) +
                           ", spectral " + to_string(*d.spectral));
  }
  return d.pairwise;
}

BigInt spanning_trees_oracle(const Graph& g, std::size_t deleted) {
  if (deleted >= g.order()) throw std::out_of_range("deleted vertex out of range");
  const std::size_t drop[] = {deleted};
  const BigInt count = det_fraction_free(laplacian(g).without(drop));
  if (count == 0) throw DisconnectedGraphError("graph is disconnected (reduced Laplacian is singular)");
  return count;
}

BigInt wiener_row_sum(const Graph& g, const std::vector<std::vector<int>>& dist,
                      const std::vector<std::size_t>& rows) {
  BigInt total = 0;
  for (std::size_t u : rows) {
    long row = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dist[u][v] < 0) throw DisconnectedGraphError("graph is disconnected");
      row += dist[u][v];
    }
    total += row;
  }
  return total;
}

BigInt gutman_row_sum(const Graph& g, const std::vector<std::vector<int>>& dist,
                      const std::vector<std::size_t>& rows) {
  BigInt total = 0;
  for (std::size_t u : rows) {
    long row = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dist[u][v] < 0) throw DisconnectedGraphError("graph is disconnected");
      row += static_cast<long>(g.degree(v)) * dist[u][v];
    }
    total += static_cast<long>(g.degree(u)) * BigInt(row);
  }
  return total;
}

namespace {

std::vector<std::size_t> all_vertices(const Graph& g) {
  std::vector<std::size_t> v(g.order());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

// Each unordered pair appears twice in the full row sums.
BigInt wiener_oracle(const Graph& g) {
  require_connected(g);
  return wiener_row_sum(g, distance_matrix(g), all_vertices(g)) / 2;
}

BigInt gutman_oracle(const Graph& g) {
  require_connected(g);
  return gutman_row_sum(g, distance_matrix(g), all_vertices(g)) / 2;
}

IndexBundle compute_index_bundle(const ChainGraph& g, BundleOptions options) {
  const Graph& graph = g.graph();
  IndexBundle b;
  b.n = g.n();
  b.kind = g.kind();
  b.order = graph.order();
  b.size = graph.size();

  const DualRoute kf = kirchhoff_routes(graph, options.spectral_check);
  if (!kf.agree()) throw std::logic_error("Kirchhoff routes disagree");
  const DualRoute kfs = degree_kirchhoff_routes(graph, options.spectral_check);
  if (!kfs.agree()) throw std::logic_error("degree-Kirchhoff routes disagree");
  b.kf = kf.pairwise;
  b.kf_star = kfs.pairwise;
  b.tau = spanning_trees_oracle(graph);
  const auto dist = distance_matrix(graph);
  const auto everyone = all_vertices(graph);
  b.wiener = wiener_row_sum(graph, dist, everyone) / 2;
  b.gutman = gutman_row_sum(graph, dist, everyone) / 2;
  return b;
}

std::string to_json(const IndexBundle& b) {
  nlohmann::ordered_json j;
  j["n"] = b.n;
  j["kind"] = to_string(b.kind);
  j["order"] = b.order;
  j["size"] = b.size;
  j["kf"] = to_string(b.kf);
  j["kf_star"] = to_string(b.kf_star);
  j["tau"] = to_string(b.tau);
  j["wiener"] = to_string(b.wiener);
  j["gutman"] = to_string(b.gutman);
  return j.dump();
}

IndexBundle index_bundle_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  IndexBundle b;
  b.n = j.at("n").get<int>();
  b.kind = parse_kind(j.at("kind").get<std::string>());
  b.order = j.at("order").get<std::size_t>();
  b.size = j.at("size").get<std::size_t>();
  b.kf = parse_rational(j.at("kf").get<std::string>());
  b.kf_star = parse_rational(j.at("kf_star").get<std::string>());
  b.tau = parse_bigint(j.at("tau").get<std::string>());
  b.wiener = parse_bigint(j.at("wiener").get<std::string>());
  b.gutman = parse_bigint(j.at("gutman").get<std::string>());
  return b;
}

}  // namespace chaindex
