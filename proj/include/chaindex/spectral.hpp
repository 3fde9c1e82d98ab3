#pragma once

// Mirror-block decomposition of the crossed chain and the exact sequence,
// minor and coefficient identities that make the Kirchhoff indices O(1).
//
// Indices in this header are 1-based to line up with vertex labels.

#include "chaindex/exact.hpp"
#include "chaindex/linalg.hpp"

#include <initializer_list>
#include <vector>

namespace chaindex {

/// Real symmetric tridiagonal matrix stored as its diagonal and the squares
/// of its off-diagonal. Determinants of tridiagonal matrices only see the
/// squares, so matrices with off-diagonals like -1/sqrt(3) stay exact.
class TriDiagSym {
 public:
  TriDiagSym() = default;
  TriDiagSym(std::vector<Rational> diag, std::vector<Rational> offdiag_sq);

  std::size_t dim() const { return diag_.size(); }
  const std::vector<Rational>& diag() const { return diag_; }
  /// offdiag_sq()[k] couples rows k+1 and k+2 (1-based).
  const std::vector<Rational>& offdiag_sq() const { return offdiag_sq_; }

  /// Determinant of the principal block on rows first..last (1-based,
  /// inclusive); 1 when the block is empty.
  Rational block_det(std::size_t first, std::size_t last) const;
  /// Principal minor with rows `skip` (ascending, 1-based) deleted.
  Rational det_without(std::initializer_list<std::size_t> skip) const;
  /// m[i] = det of leading i x i block, i = 0..dim.
  std::vector<Rational> leading_minors() const;
  /// m[i] = det of trailing i x i block, i = 0..dim.
  std::vector<Rational> trailing_minors() const;
  /// det(xI - T) by the three-term continuant.
  Polynomial char_poly() const;

  friend bool operator==(const TriDiagSym&, const TriDiagSym&) = default;

 private:
  std::vector<Rational> diag_;
  std::vector<Rational> offdiag_sq_;
};

/// The two diagonal blocks of T L T' (and T 𝓛 T') for the crossed chain,
/// read off the actual Laplacian blocks L_{V1V1} +/- L_{V1V2}.
struct BlockSplit {
  int n = 0;
  RationalMatrix l_a_matrix;
  TriDiagSym l_a;
  std::vector<Rational> l_s;
  TriDiagSym nl_a;
  std::vector<Rational> nl_s;
  /// Degrees of V1 in index order.
  std::vector<long> degrees;
};

BlockSplit block_split(int n);

/// The block entries as displayed for general n: L_A = tridiag(-2; 2,4,..,4,2),
/// L_S = diag(4,4,4,6,6,4,..,4,4,6,4), and the normalized analogues. Only the
/// TriDiagSym and diagonal fields are filled.
BlockSplit displayed_block_split(int n);

struct FactorizationCheck {
  bool laplacian = false;
  bool normalized = false;
};

/// Compares det(xI - L(Q_n)) with the product of the block polynomials, for
/// L and for D^{-1}L against the normalized blocks.
FactorizationCheck verify_factorization(int n);
FactorizationCheck verify_factorization(const BlockSplit& split);

// --- Laplacian block sequences ---

struct WunSequences {
  std::vector<Rational> w;   // 0..4n, leading minors of L_A by recurrence
  std::vector<Rational> u;   // 0..4n, trailing minors of L_A by recurrence
  std::vector<Rational> nn;  // 0..4n-1, det of tridiag(-2, 4, -2) by recurrence
};

WunSequences wun_sequences(int n);
Rational w_closed(int i);
Rational nn_closed(int i);

/// Determinant of the i x i matrix tridiag(-2, 4, -2).
Rational nn_minor(int i);

/// Trailing coefficient magnitudes of a block characteristic polynomial:
/// low at degree 1, next at degree 2.
struct CoeffPair {
  Rational low;
  Rational next;
  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

CoeffPair coeff_a(int n);
/// (4n+1)-term and pair convolutions of the w/u/n closed forms.
CoeffPair coeff_a_by_sequences(int n);
/// Sum of principal minors of L_A by direct fraction-free determinants.
CoeffPair coeff_a_by_minors(int n);
CoeffPair coeff_a_by_char_poly(int n);

Rational sum_recip_rho(int n);
Rational sum_recip_sigma(int n);

// --- normalized block sequences ---

struct XYSequences {
  std::vector<Rational> x;  // 0..4n
  std::vector<Rational> y;  // 0..4n
};

/// Four-phase recurrences from the printed base values.
XYSequences xy_sequences(int n);
/// Closed forms, i >= 1 (x_0 = y_0 = 1 by convention).
Rational x_closed(int i);
Rational y_closed(int i);

struct ZValue {
  int case_number = 0;  // 1..16; 0 for the j = i + 1 convention
  Rational value;
};

/// The 16-case table keyed on (i mod 4, j mod 4). Requires 1 <= i < j; the
/// overload with n also requires j <= 4n+1.
ZValue z_closed(int i, int j);
ZValue z_closed(int i, int j, int n);

/// Interior block determinant det 𝓛_A[i+1..j-1] by continuant.
Rational z_oracle(int i, int j, int n);
Rational z_oracle(const BlockSplit& split, int i, int j);

/// Case number for an index pair, 1..16 (residue classes of i and j).
int z_case_number(int i, int j);

/// K_{p,q}: sum of det 𝓛_A[i,j] over i = p, j = q (mod 4), 1 <= i < j <= 4n+1.
Rational k_sum_closed(int p, int q, int n);
Rational k_sum_oracle(int p, int q, int n);
Rational k_sum_oracle(const BlockSplit& split, int p, int q);

CoeffPair coeff_b(int n);
/// low by the four-sum x/y convolution, next by the 16 closed K sums.
CoeffPair coeff_b_by_sequences(int n);
CoeffPair coeff_b_by_char_poly(int n);
CoeffPair coeff_b_by_char_poly(const BlockSplit& split);
/// Principal minors of 𝓛_A as det(L_A[S]) / prod_{k in S} d_k.
CoeffPair coeff_b_by_minors(const BlockSplit& split);

Rational sum_recip_lambda(int n);
Rational sum_recip_phi(int n);

}  // namespace chaindex
