#include "chaindex/spectral.hpp"

#include "chaindex/chain_graph.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace chaindex {

namespace {

const Rational kQuarter = make_rational(1, 25);  // the per-period decay 1/25

Rational decay(long k) { return rational_pow(kQuarter, k); }

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

}  // namespace

// --- TriDiagSym ---

TriDiagSym::TriDiagSym(std::vector<Rational> diag, std::vector<Rational> offdiag_sq)
    : diag_(std::move(diag)), offdiag_sq_(std::move(offdiag_sq)) {
  if (!diag_.empty() && offdiag_sq_.size() + 1 != diag_.size()) {
    throw DimensionError("tridiagonal: need dim-1 off-diagonal entries");
  }
  if (diag_.empty() && !offdiag_sq_.empty()) throw DimensionError("tridiagonal: empty diagonal");
  for (const auto& e : offdiag_sq_) {
    if (sgn(e) < 0) throw std::invalid_argument("tridiagonal: squared off-diagonal is negative");
  }
}

Rational TriDiagSym::block_det(std::size_t first, std::size_t last) const {
  if (last < first) return 1;
  if (first < 1 || last > dim()) throw std::out_of_range("tridiagonal block out of range");
  Rational prev = 1;
  Rational cur = diag_[first - 1];
  for (std::size_t k = first + 1; k <= last; ++k) {
    Rational next = diag_[k - 1] * cur - offdiag_sq_[k - 2] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational TriDiagSym::det_without(std::initializer_list<std::size_t> skip) const {
  Rational result = 1;
  std::size_t start = 1;
  for (std::size_t s : skip) {
    if (s < start || s > dim()) throw std::out_of_range("deleted rows must be ascending and in range");
    result *= block_det(start, s - 1);
    start = s + 1;
  }
  return result * block_det(start, dim());
}

std::vector<Rational> TriDiagSym::leading_minors() const {
  std::vector<Rational> m(dim() + 1);
  m[0] = 1;
  if (dim() == 0) return m;
  m[1] = diag_[0];
  for (std::size_t k = 2; k <= dim(); ++k) m[k] = diag_[k - 1] * m[k - 1] - offdiag_sq_[k - 2] * m[k - 2];
  return m;
}

std::vector<Rational> TriDiagSym::trailing_minors() const {
  std::vector<Rational> m(dim() + 1);
  m[0] = 1;
  if (dim() == 0) return m;
  const std::size_t n = dim();
  m[1] = diag_[n - 1];
  for (std::size_t k = 2; k <= n; ++k) {
    // new top row is n-k+1 (1-based); its coupling to the row below is offdiag_sq_[n-k]
    m[k] = diag_[n - k] * m[k - 1] - offdiag_sq_[n - k] * m[k - 2];
  }
  return m;
}

Polynomial TriDiagSym::char_poly() const {
  Polynomial prev({Rational(1)});
  if (dim() == 0) return prev;
  Polynomial cur = Polynomial::linear_factor(diag_[0]);
  for (std::size_t k = 2; k <= dim(); ++k) {
    Polynomial next = Polynomial::linear_factor(diag_[k - 1]) * cur - Polynomial({offdiag_sq_[k - 2]}) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// --- block split ---

BlockSplit block_split(int n) {
  require_n(n);
  const ChainGraph g = build_crossed_chain(n);
  const RationalMatrix l = laplacian(g.graph());
  const auto len = static_cast<std::size_t>(g.path_length());
  const RationalMatrix v1v1 = l.block(0, 0, len, len);
  const RationalMatrix v1v2 = l.block(0, len, len, len);
  if (v1v1 != l.block(len, len, len, len) || v1v2 != l.block(len, 0, len, len)) {
    throw std::logic_error("Laplacian blocks are not mirror-symmetric");
  }
  const RationalMatrix sum = v1v1 + v1v2;
  const RationalMatrix diff = v1v1 - v1v2;

  BlockSplit s;
  s.n = n;
  s.l_a_matrix = sum;
  for (std::size_t i = 0; i < len; ++i) s.degrees.push_back(static_cast<long>(g.graph().degree(i)));

  std::vector<Rational> diag(len), off(len - 1), ndiag(len), noff(len - 1);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t c = 0; c < len; ++c) {
      const bool band = r == c || r + 1 == c || c + 1 == r;
      if (!band && sum(r, c) != 0) throw std::logic_error("L_A is not tridiagonal");
      if (r != c && diff(r, c) != 0) throw std::logic_error("L_S is not diagonal");
    }
    diag[r] = sum(r, r);
    ndiag[r] = sum(r, r) / s.degrees[r];
    s.l_s.push_back(diff(r, r));
    s.nl_s.push_back(diff(r, r) / s.degrees[r]);
    if (r + 1 < len) {
      const Rational e = sum(r, r + 1);
      off[r] = e * e;
      noff[r] = e * e / (s.degrees[r] * s.degrees[r + 1]);
    }
  }
  s.l_a = TriDiagSym(std::move(diag), std::move(off));
  s.nl_a = TriDiagSym(std::move(ndiag), std::move(noff));
  return s;
}

BlockSplit displayed_block_split(int n) {
  require_n(n);
  const int len = 4 * n + 1;
  // interior vertices at i = 0,1 (mod 4) carry a rung and have degree 5
  auto heavy = [len](int i) { return i != 1 && i != len && (i % 4 == 0 || i % 4 == 1); };
  BlockSplit s;
  s.n = n;
  std::vector<Rational> diag, off, ndiag, noff;
  for (int i = 1; i <= len; ++i) {
    const bool end = i == 1 || i == len;
    diag.emplace_back(end ? 2 : 4);
    s.l_s.emplace_back(heavy(i) ? 6 : 4);
    ndiag.push_back(end ? make_rational(2, 3) : heavy(i) ? make_rational(4, 5) : Rational(1));
    s.nl_s.push_back(end ? make_rational(4, 3) : heavy(i) ? make_rational(6, 5) : Rational(1));
    if (i < len) {
      off.emplace_back(4);
      Rational e;
      if (i == 1) e = make_rational(1, 3);
      else if (i + 1 == len) e = make_rational(4, 15);
      else if (heavy(i) && heavy(i + 1)) e = make_rational(4, 25);
      else if (i % 4 == 2) e = make_rational(1, 4);
      else e = make_rational(1, 5);
      noff.push_back(e);
    }
  }
  s.l_a = TriDiagSym(std::move(diag), std::move(off));
  s.nl_a = TriDiagSym(std::move(ndiag), std::move(noff));
  return s;
}

namespace {

Polynomial diagonal_char_poly(const std::vector<Rational>& d) {
  Polynomial p({Rational(1)});
  for (const auto& v : d) p = p * Polynomial::linear_factor(v);
  return p;
}

}  // namespace

FactorizationCheck verify_factorization(const BlockSplit& split) {
  const ChainGraph g = build_crossed_chain(split.n);
  FactorizationCheck out;
  out.laplacian = char_poly(laplacian(g.graph())) == char_poly(split.l_a_matrix) * diagonal_char_poly(split.l_s);
  out.normalized =
      char_poly(normalized_similarity(g.graph())) == split.nl_a.char_poly() * diagonal_char_poly(split.nl_s);
  return out;
}

FactorizationCheck verify_factorization(int n) { return verify_factorization(block_split(n)); }

// --- w, u, n ---

WunSequences wun_sequences(int n) {
  require_n(n);
  const int top = 4 * n;
  WunSequences s;
  s.w.resize(top + 1);
  s.w[0] = 1;
  s.w[1] = 2;
  if (top >= 2) s.w[2] = 4;
  for (int i = 3; i <= top; ++i) s.w[i] = 4 * s.w[i - 1] - 4 * s.w[i - 2];
  // L_A reads the same from either end.
  s.u = s.w;
  s.nn.resize(top);
  s.nn[0] = 1;
  if (top >= 2) s.nn[1] = 4;
  for (int i = 2; i < top; ++i) s.nn[i] = 4 * s.nn[i - 1] - 4 * s.nn[i - 2];
  return s;
}

Rational w_closed(int i) { return rational_pow(2, i); }
Rational nn_closed(int i) { return (i + 1) * rational_pow(2, i); }

Rational nn_minor(int i) {
  if (i < 0) throw std::invalid_argument("negative order");
  RationalMatrix m(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  for (int r = 0; r < i; ++r) {
    m(r, r) = 4;
    if (r + 1 < i) {
      m(r, r + 1) = -2;
      m(r + 1, r) = -2;
    }
  }
  return Rational(det_fraction_free(m));
}

// --- trailing coefficients of L_A ---

CoeffPair coeff_a(int n) {
  require_n(n);
  const long m = 4L * n;
  return {(m + 1) * rational_pow(2, m), Rational(m * (m + 1) * (m + 2)) * rational_pow(2, m - 2) / 3};
}

CoeffPair coeff_a_by_sequences(int n) {
  require_n(n);
  const int len = 4 * n + 1;
  CoeffPair out{0, 0};
  for (int i = 1; i <= len; ++i) out.low += w_closed(i - 1) * w_closed(len - i);
  for (int i = 1; i <= len; ++i) {
    for (int j = i + 1; j <= len; ++j) out.next += nn_closed(j - i - 1) * w_closed(i - 1) * w_closed(len - j);
  }
  return out;
}

CoeffPair coeff_a_by_minors(int n) {
  const BlockSplit s = block_split(n);
  const std::size_t len = s.l_a_matrix.rows();
  CoeffPair out{0, 0};
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t drop[] = {i};
    out.low += Rational(det_fraction_free(s.l_a_matrix.without(drop)));
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t drop2[] = {i, j};
      out.next += Rational(det_fraction_free(s.l_a_matrix.without(drop2)));
    }
  }
  return out;
}

CoeffPair coeff_a_by_char_poly(int n) {
  const TrailingPair t = trailing_pair(char_poly(block_split(n).l_a_matrix));
  return {t.low, t.next};
}

Rational sum_recip_rho(int n) {
  require_n(n);
  return make_rational(static_cast<std::int64_t>(n) * (4L * n + 2), 3);
}

Rational sum_recip_sigma(int n) {
  require_n(n);
  return make_rational(5L * n + 2, 6);
}

// --- x, y ---

XYSequences xy_sequences(int n) {
  require_n(n);
  const int top = 4 * n;
  XYSequences s;
  auto& x = s.x;
  auto& y = s.y;
  x.resize(top + 1);
  y.resize(top + 1);
  x[0] = y[0] = 1;
  x[1] = make_rational(2, 3);
  x[2] = make_rational(1, 3);
  x[3] = make_rational(1, 6);
  y[1] = make_rational(2, 3);
  y[2] = make_rational(4, 15);
  y[3] = make_rational(2, 15);
  const Rational four_fifths = make_rational(4, 5);
  const Rational fifth = make_rational(1, 5);
  const Rational quarter = make_rational(1, 4);
  const Rational four_25 = make_rational(4, 25);
  for (int k = 1; k <= n; ++k) {
    x[4 * k] = four_fifths * x[4 * k - 1] - fifth * x[4 * k - 2];
    y[4 * k] = y[4 * k - 1] - quarter * y[4 * k - 2];
    if (k == n) break;
    x[4 * k + 1] = four_fifths * x[4 * k] - four_25 * x[4 * k - 1];
    x[4 * k + 2] = x[4 * k + 1] - fifth * x[4 * k];
    x[4 * k + 3] = x[4 * k + 2] - quarter * x[4 * k + 1];
    y[4 * k + 1] = four_fifths * y[4 * k] - fifth * y[4 * k - 1];
    y[4 * k + 2] = four_fifths * y[4 * k + 1] - four_25 * y[4 * k];
    y[4 * k + 3] = y[4 * k + 2] - fifth * y[4 * k + 1];
  }
  return s;
}

Rational x_closed(int i) {
  if (i < 1) throw std::invalid_argument("x closed form needs i >= 1");
  static const std::array<Rational, 4> lead{make_rational(5, 3), make_rational(2, 3), make_rational(1, 3),
                                            make_rational(1, 6)};
  return lead[i % 4] * decay(i / 4);
}

Rational y_closed(int i) {
  if (i < 1) throw std::invalid_argument("y closed form needs i >= 1");
  static const std::array<Rational, 4> lead{make_rational(5, 3), make_rational(2, 3), make_rational(4, 15),
                                            make_rational(2, 15)};
  return lead[i % 4] * decay(i / 4);
}

// --- z_{i,j} ---

int z_case_number(int i, int j) {
  if (i < 1 || j <= i) throw std::out_of_range("need 1 <= i < j");
  return 4 * (i % 4) + (j % 4) + 1;
}

ZValue z_closed(int i, int j) {
  if (i < 1 || j <= i) {
    throw std::out_of_range("z needs 1 <= i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  const int p = i % 4;
  const int q = j % 4;
  const long a = i / 4;
  const long b = j / 4;
  const long d = b - a;
  ZValue z;
  z.case_number = 4 * p + q + 1;
  if (j == i + 1) {
    z.case_number = 0;
    z.value = 1;
    return z;
  }
  auto r = [](long num, long den) { return make_rational(num, den); };
  switch (z.case_number) {
    case 1: z.value = r(2, 5) * d * decay(d - 1); break;
    case 2: z.value = (4 * d + 1) * decay(d); break;
    case 3: z.value = r(2, 5) * (4 * d + 2) * decay(d); break;
    case 4: z.value = r(1, 5) * (4 * d + 3) * decay(d); break;
    case 5: z.value = r(1, 4) * (4 * d - 1) * decay(d - 1); break;
    case 6: z.value = r(2, 5) * d * decay(d - 1); break;
    case 7: z.value = (4 * d + 1) * decay(d); break;
    case 8: z.value = (2 * d + 1) * decay(d); break;
    case 9: z.value = (2 * d - 1) * decay(d - 1); break;
    case 10: z.value = r(1, 5) * (4 * d - 1) * decay(d - 1); break;
    case 11: z.value = r(2, 25) * (4 * d) * decay(d - 1); break;
    case 12: z.value = (4 * d + 1) * decay(d); break;
    case 13: z.value = (4 * d - 3) * decay(d - 1); break;
    case 14: z.value = r(2, 5) * (4 * d - 2) * decay(d - 1); break;
    case 15: z.value = r(4, 25) * (4 * d - 1) * decay(d - 1); break;
    case 16: z.value = r(2, 25) * (4 * d) * decay(d - 1); break;
    default: throw std::logic_error("unreachable z case");
  }
  return z;
}

ZValue z_closed(int i, int j, int n) {
  require_n(n);
  if (j > 4 * n + 1) throw std::out_of_range("z needs j <= 4n+1");
  return z_closed(i, j);
}

Rational z_oracle(const BlockSplit& split, int i, int j) {
  if (i < 1 || j <= i || j > 4 * split.n + 1) throw std::out_of_range("z needs 1 <= i < j <= 4n+1");
  return split.nl_a.block_det(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) - 1);
}

Rational z_oracle(int i, int j, int n) { return z_oracle(block_split(n), i, j); }

// --- K_{p,q} ---

Rational k_sum_closed(int p, int q, int n) {
  require_n(n);
  if (p < 0 || p > 3 || q < 0 || q > 3) throw std::out_of_range("K class needs 0 <= p, q <= 3");
  const long n1 = n, n2 = n1 * n1, n3 = n2 * n1;
  long num = 0, den = 1;
  switch (4 * p + q) {
    case 0: num = 5 * (n3 - n1); den = 27; break;
    case 1: num = 20 * n3 - 9 * n2 + 7 * n1; den = 108; break;
    case 2: num = 2 * (2 * n3 - 3 * n2 + n1); den = 27; break;
    case 3: num = 4 * n3 - 3 * n2 - n1; den = 27; break;
    case 4: num = 20 * n3 + 21 * n2 + 13 * n1; den = 108; break;
    case 5: num = 25 * n3 + 15 * n2 + 14 * n1; den = 135; break;
    case 6: num = 20 * n3 - 9 * n2 + 7 * n1; den = 135; break;
    case 7: num = 20 * n3 + 6 * n2 + 10 * n1; den = 135; break;
    case 8: num = 2 * (2 * n3 + 3 * n2 + n1); den = 27; break;
    case 9: num = 20 * n3 + 21 * n2 + 13 * n1; den = 135; break;
    case 10: num = 16 * (n3 - n1); den = 135; break;
    case 11: num = 4 * (4 * n3 + 3 * n2 - n1); den = 135; break;
    case 12: num = 4 * n3 + 3 * n2 - n1; den = 27; break;
    case 13: num = 20 * n3 + 6 * n2 + 10 * n1; den = 135; break;
    case 14: num = 4 * (4 * n3 - 3 * n2 - n1); den = 135; break;
    case 15: num = 16 * (n3 - n1); den = 135; break;
  }
  return make_rational(num, den) * decay(n1 - 1);
}

Rational k_sum_oracle(const BlockSplit& split, int p, int q) {
  if (p < 0 || p > 3 || q < 0 || q > 3) throw std::out_of_range("K class needs 0 <= p, q <= 3");
  const int len = 4 * split.n + 1;
  const auto x = split.nl_a.leading_minors();
  const auto y = split.nl_a.trailing_minors();
  Rational total = 0;
  for (int i = 1; i <= len; ++i) {
    if (i % 4 != p) continue;
    for (int j = i + 1; j <= len; ++j) {
      if (j % 4 != q) continue;
      total += x[i - 1] * y[len - j] * z_oracle(split, i, j);
    }
  }
  return total;
}

Rational k_sum_oracle(int p, int q, int n) { return k_sum_oracle(block_split(n), p, q); }

// --- trailing coefficients of the normalized block ---

CoeffPair coeff_b(int n) {
  require_n(n);
  const long n1 = n;
  const Rational scale = decay(n1 - 1);
  return {make_rational(18 * n1 + 1, 45) * scale, make_rational(2 * n1 * (54 * n1 * n1 + 9 * n1 + 4), 45) * scale};
}

CoeffPair coeff_b_by_sequences(int n) {
  require_n(n);
  CoeffPair out{0, 0};
  out.low = x_closed(4 * n) + y_closed(4 * n);
  for (int k = 1; k <= n; ++k) out.low += x_closed(4 * (k - 1) + 3) * y_closed(4 * (n - k) + 1);
  for (int k = 1; k <= n - 1; ++k) out.low += x_closed(4 * k) * y_closed(4 * (n - k));
  for (int k = 0; k <= n - 1; ++k) {
    out.low += x_closed(4 * k + 1) * y_closed(4 * (n - k - 1) + 3);
    out.low += x_closed(4 * k + 2) * y_closed(4 * (n - k - 1) + 2);
  }
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) out.next += k_sum_closed(p, q, n);
  }
  return out;
}

CoeffPair coeff_b_by_char_poly(const BlockSplit& split) {
  const TrailingPair t = trailing_pair(split.nl_a.char_poly());
  return {t.low, t.next};
}

CoeffPair coeff_b_by_char_poly(int n) { return coeff_b_by_char_poly(block_split(n)); }

CoeffPair coeff_b_by_minors(const BlockSplit& split) {
  const std::size_t len = split.l_a_matrix.rows();
  Rational degree_product = 1;
  for (long d : split.degrees) degree_product *= d;
  CoeffPair out{0, 0};
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t drop[] = {i};
    out.low += Rational(det_fraction_free(split.l_a_matrix.without(drop))) * split.degrees[i] / degree_product;
    for (std::size_t j = i + 1; j < len; ++j) {
      const std::size_t drop2[] = {i, j};
      out.next += Rational(det_fraction_free(split.l_a_matrix.without(drop2))) * split.degrees[i] *
                  split.degrees[j] / degree_product;
    }
  }
  return out;
}

Rational sum_recip_lambda(int n) {
  require_n(n);
  const long n1 = n;
  return make_rational(2 * n1 * (54 * n1 * n1 + 9 * n1 + 4), 18 * n1 + 1);
}

Rational sum_recip_phi(int n) {
  require_n(n);
  return make_rational(11L * n + 2, 3);
}

}  // namespace chaindex
