#include "chaindex/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace chaindex {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t dim) {
  RationalMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool RationalMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool RationalMatrix::all_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational RationalMatrix::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::principal(std::span<const std::size_t> keep) const {
  if (!square()) throw DimensionError("principal submatrix of a non-square matrix");
  RationalMatrix out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = (*this)(keep[r], keep[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::without(std::span<const std::size_t> drop) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  return principal(keep);
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionError("block out of range");
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

// --- Polynomial ---

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(out));
}

// --- graph matrices ---

RationalMatrix laplacian(const Graph& g) {
  RationalMatrix l(g.order(), g.order());
  for (std::size_t v = 0; v < g.order(); ++v) l(v, v) = static_cast<long>(g.degree(v));
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
  }
  return l;
}

RationalMatrix normalized_similarity(const Graph& g) {
  RationalMatrix m = laplacian(g);
  for (std::size_t r = 0; r < g.order(); ++r) {
    const auto d = static_cast<long>(g.degree(r));
    if (d == 0) throw std::domain_error("isolated vertex " + std::to_string(r) + " has degree 0");
    for (std::size_t c = 0; c < g.order(); ++c) {
      if (m(r, c) != 0) m(r, c) /= d;
    }
  }
  return m;
}

// --- characteristic polynomial ---

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Coefficients of det(xI - A), descending, for an integer matrix.
std::vector<BigInt> berkowitz(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> v{BigInt(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // A_r = [[A_{r-1}, C], [R, a_rr]] with A_{r-1} the leading r x r block.
    std::vector<BigInt> q(r + 2);
    q[0] = 1;
    q[1] = -a[r][r];
    std::vector<BigInt> w(r), next(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * w[i];
      q[k + 2] = -dot;
      if (k + 1 == r) break;
      for (std::size_t i = 0; i < r; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < r; ++j) {
          if (a[i][j] != 0) acc += a[i][j] * w[j];
        }
        next[i] = std::move(acc);
      }
      std::swap(w, next);
    }
    std::vector<BigInt> out(r + 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < v.size() && j <= i; ++j) out[i] += q[i - j] * v[j];
    }
    v = std::move(out);
  }
  return v;
}

}  // namespace

Polynomial char_poly(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
  }
  IntMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational scaled = m(r, c) * scale;
      a[r][c] = scaled.get_num();
    }
  }
  const std::vector<BigInt> desc = berkowitz(a);
  // det(xI - M) = scale^{-n} det(scale*x I - A): coefficient of x^k is b_k / scale^{n-k}.
  std::vector<Rational> asc(n + 1);
  BigInt power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    asc[k] = make_rational(desc[n - k], power);
    power *= scale;
  }
  return Polynomial(std::move(asc));
}

// --- determinants and solves ---

BigInt det_fraction_free(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  if (!m.all_integer()) throw std::invalid_argument("fraction-free determinant needs integer entries");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num();
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
    }
  }
  return result;
}

std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (!m.square()) throw DimensionError("solve needs a square matrix");
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  std::vector<Rational> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(p, c));
      std::swap(x[k], x[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = x[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  return x;
}

Adjugate adjugate_fraction_free(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("adjugate of a non-square matrix");
  if (!m.all_integer()) throw std::invalid_argument("fraction-free adjugate needs integer entries");
  const std::size_t n = m.rows();
  const std::size_t width = 2 * n;
  // Augmented [A | I]; rows are reduced to [f I | f A^{-1}].
  IntMatrix a(n, std::vector<BigInt>(width));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num();
    a[r][n + r] = 1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) throw SingularMatrixError("matrix is singular");
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    const BigInt& pivot = a[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = a[i][k];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        a[i][j] = pivot * a[i][j] - factor * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  Adjugate out;
  out.dim = n;
  out.det = sign * prev;
  out.adj.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.adj[r * n + c] = sign * a[r][n + c];
  }
  if (n == 0) out.det = 1;
  return out;
}

TrailingPair trailing_pair(const Polynomial& p) {
  if (p.degree() < 2) throw std::invalid_argument("need degree >= 2 for a trailing pair");
  if (p.coeff(0) != 0) throw std::invalid_argument("polynomial has no zero root");
  if (p.coeff(1) == 0) throw std::domain_error("zero root has multiplicity > 1");
  const long n = p.degree();
  const int sign_low = ((n - 1) % 2 == 0) ? 1 : -1;
  const int sign_next = (n % 2 == 0) ? 1 : -1;
  return {sign_low * p.coeff(1), sign_next * p.coeff(2)};
}

}  // namespace chaindex
