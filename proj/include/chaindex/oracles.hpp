#pragma once

// Definition-level computation of the distance and resistance invariants.
// These are the ground truth that the closed forms are checked against.

#include "chaindex/chain_graph.hpp"
#include "chaindex/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chaindex {

class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Effective resistance between u and v with unit resistors on every edge:
/// ground v, inject unit current at u, read the potential at u.
Rational resistance(const Graph& g, std::size_t u, std::size_t v);
Rational resistance(const ChainGraph& g, const VertexId& u, const VertexId& v);

/// All-pairs resistance from one fraction-free inverse of the grounded
/// Laplacian: r_uv = (G_uu + G_vv - 2 G_uv), G grounded at the last vertex.
class ResistanceTable {
 public:
  explicit ResistanceTable(const Graph& g);
  std::size_t order() const { return order_; }
  Rational operator()(std::size_t u, std::size_t v) const;
  /// r_uv * tree_count(), always an integer.
  BigInt scaled(std::size_t u, std::size_t v) const;
  /// Number of spanning trees; the grounded Laplacian determinant.
  const BigInt& tree_count() const { return det_; }

 private:
  std::size_t order_;
  BigInt det_;
  std::vector<BigInt> adj_;  // (order-1)^2
};

/// All-pairs BFS distances.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Both routes of the Kirchhoff index: the pairwise resistance sum and
/// order * (sum of reciprocal nonzero Laplacian eigenvalues), the latter from
/// the two trailing coefficients of the Laplacian characteristic polynomial.
struct DualRoute {
  Rational pairwise;
  std::optional<Rational> spectral;  // absent when the cross-check was skipped
  bool agree() const { return !spectral || *spectral == pairwise; }
};

DualRoute kirchhoff_routes(const Graph& g, bool spectral_check = true);
DualRoute degree_kirchhoff_routes(const Graph& g, bool spectral_check = true);

/// Throw std::logic_error when the two routes disagree.
Rational kirchhoff_oracle(const Graph& g);
Rational degree_kirchhoff_oracle(const Graph& g);

/// Matrix-tree count from the reduced Laplacian with `deleted` removed.
BigInt spanning_trees_oracle(const Graph& g, std::size_t deleted = 0);

BigInt wiener_oracle(const Graph& g);
BigInt gutman_oracle(const Graph& g);

/// Row sums of the distance matrix restricted to `rows`: sum_{i in U} sum_j d_ij,
/// and the degree-weighted analogue.
BigInt wiener_row_sum(const Graph& g, const std::vector<std::vector<int>>& dist,
                      const std::vector<std::size_t>& rows);
BigInt gutman_row_sum(const Graph& g, const std::vector<std::vector<int>>& dist,
                      const std::vector<std::size_t>& rows);

struct IndexBundle {
  int n = 0;
  ChainKind kind = ChainKind::Crossed;
  std::size_t order = 0;
  std::size_t size = 0;
  Rational kf;
  Rational kf_star;
  BigInt tau;
  BigInt wiener;
  BigInt gutman;

  friend bool operator==(const IndexBundle&, const IndexBundle&) = default;
};

struct BundleOptions {
  /// Also run the characteristic-polynomial routes for Kf and Kf*.
  bool spectral_check = true;
};

/// Every oracle on one chain. Throws std::logic_error if a dual route
/// disagrees.
IndexBundle compute_index_bundle(const ChainGraph& g, BundleOptions options = {});

std::string to_json(const IndexBundle& b);
IndexBundle index_bundle_from_json(const std::string& text);

}  // namespace chaindex
