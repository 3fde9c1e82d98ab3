#pragma once

// Linear octagonal-quadrilateral chains.
//
// Both chains have two mirrored paths 1..4n+1 and 1'..(4n+1)'. The plain
// chain L_n joins them by rungs i-i' at i = 1 and every i = 0,1 (mod 4); the
// crossed chain Q_n additionally joins i-(i+1)' and i'-(i+1) for 1 <= i <= 4n.
// Matrix layout throughout the library is unprimed vertices by index, then
// primed vertices by index.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chaindex {

/// Simple undirected graph on vertices 0..order-1.
class Graph {
 public:
  explicit Graph(std::size_t order);

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ends.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool has_edge(std::size_t u, std::size_t v) const;
  /// Each edge once, as (min, max), in insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool connected() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

Graph make_path(std::size_t order);

enum class Side { Unprimed, Primed };
enum class ChainKind { Crossed, Plain };

struct VertexId {
  Side side = Side::Unprimed;
  int index = 1;  // 1..4n+1

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// "k" or "k'".
std::string to_string(const VertexId& v);
VertexId parse_vertex(std::string_view token);

std::string to_string(ChainKind kind);
ChainKind parse_kind(std::string_view text);

class ChainGraph {
 public:
  int n() const { return n_; }
  ChainKind kind() const { return kind_; }
  /// Vertices per side, 4n+1.
  int path_length() const { return 4 * n_ + 1; }
  const Graph& graph() const { return graph_; }

  std::size_t position(const VertexId& v) const;
  VertexId vertex_at(std::size_t position) const;

  friend ChainGraph build_chain(int n, ChainKind kind);

 private:
  ChainGraph(int n, ChainKind kind);

  int n_;
  ChainKind kind_;
  Graph graph_;
};

/// True where the chain has a rung i-i'.
bool has_rung(int n, int index);

ChainGraph build_chain(int n, ChainKind kind);
inline ChainGraph build_crossed_chain(int n) { return build_chain(n, ChainKind::Crossed); }
inline ChainGraph build_plain_chain(int n) { return build_chain(n, ChainKind::Plain); }

struct MirrorPartition {
  std::vector<VertexId> v1;
  std::vector<VertexId> v2;
};

/// V1 = unprimed by index, V2 = primed by index. Throws std::logic_error if
/// swapping the two sides does not preserve adjacency.
MirrorPartition mirror_partition(const ChainGraph& g);

/// True when the side swap maps the edge set onto itself.
bool mirror_is_automorphism(const ChainGraph& g);

/// Text export: header "crossed-chain n=<n>" (or "plain-chain"), then one
/// "u v" line per edge.
std::string to_edge_list(const ChainGraph& g);
/// Parses to_edge_list output and checks the edges against the generator.
ChainGraph parse_edge_list(std::string_view text);

}  // namespace chaindex
