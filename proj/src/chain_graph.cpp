#include "chaindex/chain_graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chaindex {

Graph::Graph(std::size_t order) : adjacency_(order) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nu = adjacency_.at(u);
  return std::find(nu.begin(), nu.end(), v) != nu.end();
}

bool Graph::connected() const {
  if (order() == 0) return true;
  std::vector<bool> seen(order(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == order();
}

Graph make_path(std::size_t order) {
  Graph g(order);
  for (std::size_t v = 1; v < order; ++v) g.add_edge(v - 1, v);
  return g;
}

std::string to_string(const VertexId& v) {
  return std::to_string(v.index) + (v.side == Side::Primed ? "'" : "");
}

VertexId parse_vertex(std::string_view token) {
  VertexId v;
  if (!token.empty() && token.back() == '\'') {
    v.side = Side::Primed;
    token.remove_suffix(1);
  }
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v.index);
  if (token.empty() || ec != std::errc{} || ptr != end || v.index < 1) {
    throw std::invalid_argument("bad vertex token '" + std::string(token) + "'");
  }
  return v;
}

std::string to_string(ChainKind kind) { return kind == ChainKind::Crossed ? "crossed" : "plain"; }

ChainKind parse_kind(std::string_view text) {
  if (text == "crossed") return ChainKind::Crossed;
  if (text == "plain") return ChainKind::Plain;
  throw std::invalid_argument("unknown chain kind '" + std::string(text) + "'");
}

bool has_rung(int n, int index) {
  if (index < 1 || index > 4 * n + 1) return false;
  return index == 1 || index % 4 == 0 || index % 4 == 1;
}

ChainGraph::ChainGraph(int n, ChainKind kind)
    : n_(n), kind_(kind), graph_(static_cast<std::size_t>(8 * n + 2)) {}

std::size_t ChainGraph::position(const VertexId& v) const {
  if (v.index < 1 || v.index > path_length()) {
    throw std::out_of_range("vertex " + to_string(v) + " not in chain with n=" + std::to_string(n_));
  }
  const auto offset = static_cast<std::size_t>(v.index - 1);
  return v.side == Side::Unprimed ? offset : offset + static_cast<std::size_t>(path_length());
}

VertexId ChainGraph::vertex_at(std::size_t position) const {
  const auto len = static_cast<std::size_t>(path_length());
  if (position >= 2 * len) throw std::out_of_range("vertex position out of range");
  if (position < len) return {Side::Unprimed, static_cast<int>(position) + 1};
  return {Side::Primed, static_cast<int>(position - len) + 1};
}

ChainGraph build_chain(int n, ChainKind kind) {
  if (n < 1) throw std::invalid_argument("chain length n must be >= 1, got " + std::to_string(n));
  ChainGraph g(n, kind);
  const int len = g.path_length();
  auto at = [&](Side s, int i) { return g.position({s, i}); };
  for (int i = 1; i < len; ++i) {
    g.graph_.add_edge(at(Side::Unprimed, i), at(Side::Unprimed, i + 1));
    g.graph_.add_edge(at(Side::Primed, i), at(Side::Primed, i + 1));
  }
  if (kind == ChainKind::Crossed) {
    for (int i = 1; i < len; ++i) {
      g.graph_.add_edge(at(Side::Unprimed, i), at(Side::Primed, i + 1));
      g.graph_.add_edge(at(Side::Primed, i), at(Side::Unprimed, i + 1));
    }
  }
  for (int i = 1; i <= len; ++i) {
    if (has_rung(n, i)) g.graph_.add_edge(at(Side::Unprimed, i), at(Side::Primed, i));
  }
  return g;
}

bool mirror_is_automorphism(const ChainGraph& g) {
  const auto len = static_cast<std::size_t>(g.path_length());
  auto swap = [len](std::size_t p) { return p < len ? p + len : p - len; };
  for (const auto& [u, v] : g.graph().edges()) {
    if (!g.graph().has_edge(swap(u), swap(v))) return false;
  }
  return true;
}

MirrorPartition mirror_partition(const ChainGraph& g) {
  if (!mirror_is_automorphism(g)) throw std::logic_error("side swap is not an automorphism");
  MirrorPartition part;
  for (int i = 1; i <= g.path_length(); ++i) {
    part.v1.push_back({Side::Unprimed, i});
    part.v2.push_back({Side::Primed, i});
  }
  return part;
}

std::string to_edge_list(const ChainGraph& g) {
  std::ostringstream out;
  out << to_string(g.kind()) << "-chain n=" << g.n() << '\n';
  for (const auto& [u, v] : g.graph().edges()) {
    out << to_string(g.vertex_at(u)) << ' ' << to_string(g.vertex_at(v)) << '\n';
  }
  return out.str();
}

ChainGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("empty edge list");
  const auto dash = header.find("-chain n=");
  if (dash == std::string::npos) throw std::invalid_argument("bad edge-list header '" + header + "'");
  const ChainKind kind = parse_kind(header.substr(0, dash));
  const std::string n_text = header.substr(dash + 9);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  if (ec != std::errc{} || ptr != n_text.data() + n_text.size()) {
    throw std::invalid_argument("bad n in header '" + header + "'");
  }
  ChainGraph expected = build_chain(n, kind);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw std::invalid_argument("bad edge line '" + line + "'");
    const std::size_t u = expected.position(parse_vertex(a));
    const std::size_t v = expected.position(parse_vertex(b));
    if (!expected.graph().has_edge(u, v)) {
      throw std::invalid_argument("edge " + a + " " + b + " is not in the " + to_string(kind) + " chain");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw std::invalid_argument("duplicate edge " + a + " " + b);
    }
  }
  if (seen.size() != expected.graph().size()) {
    throw std::invalid_argument("edge list has " + std::to_string(seen.size()) + " edges, expected " +
                                std::to_string(expected.graph().size()));
  }
  return expected;
}

}  // namespace chaindex
