#pragma once

// Dense exact matrices and polynomials.

#include "chaindex/chain_graph.hpp"
#include "chaindex/exact.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace chaindex {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t dim);
  static RationalMatrix diagonal(std::span<const Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool symmetric() const;
  bool all_integer() const;
  Rational trace() const;

  /// Principal submatrix keeping the listed indices, in the given order.
  RationalMatrix principal(std::span<const std::size_t> keep) const;
  /// Principal submatrix with the listed (distinct) indices removed.
  RationalMatrix without(std::span<const std::size_t> drop) const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  std::vector<Rational> apply(std::span<const Rational> x) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  /// x - root
  static Polynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational operator()(const Rational& x) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RationalMatrix laplacian(const Graph& g);
/// D^{-1} L, a rational matrix similar to the normalized Laplacian
/// D^{-1/2} L D^{-1/2}. Throws std::domain_error on an isolated vertex.
RationalMatrix normalized_similarity(const Graph& g);

/// det(xI - M). The matrix is scaled to integers and expanded by Berkowitz's
/// division-free algorithm, then rescaled.
Polynomial char_poly(const RationalMatrix& m);

/// Bareiss elimination; entries must be integers.
BigInt det_fraction_free(const RationalMatrix& m);

/// Exact determinant of any square rational matrix (Gaussian elimination).
Rational det(const RationalMatrix& m);

/// Exact solve of Mx = b. Throws DimensionError or SingularMatrixError.
std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> b);

/// Fraction-free Gauss-Jordan on an integer matrix A: returns det(A) and
/// adj(A) = det(A) A^{-1}, both integral. Throws SingularMatrixError.
struct Adjugate {
  BigInt det;
  std::vector<BigInt> adj;  // row-major
  std::size_t dim = 0;
  const BigInt& operator()(std::size_t r, std::size_t c) const { return adj[r * dim + c]; }
};
Adjugate adjugate_fraction_free(const RationalMatrix& m);

/// Lowest nonzero pair of trailing coefficients, sign-normalized for a
/// positive semidefinite matrix with a one-dimensional kernel: for
/// det(xI - M) = x * prod(x - r_i), `low` = prod r_i and `next` =
/// e_{k-1}(r), so next/low = sum 1/r_i.
struct TrailingPair {
  Rational low;
  Rational next;
};
TrailingPair trailing_pair(const Polynomial& char_poly_with_zero_root);

}  // namespace chaindex
