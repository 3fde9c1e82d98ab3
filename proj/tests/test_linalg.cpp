#include "doctest.h"

#include "chaindex/chain_graph.hpp"
#include "chaindex/linalg.hpp"

#include <random>

using namespace chaindex;

namespace {

RationalMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (auto row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t dim, bool integer) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  RationalMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = make_rational(num(rng), integer ? 1 : den(rng));
  return m;
}

}  // namespace

TEST_CASE("laplacian of Q_1") {
  auto q = build_crossed_chain(1);
  auto L = laplacian(q.graph());
  CHECK(L.symmetric());
  CHECK(L.all_integer());
  CHECK(L.trace() == 38);
  for (std::size_t r = 0; r < L.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < L.cols(); ++c) sum += L(r, c);
    CHECK(sum == 0);
  }
  std::size_t v1 = q.position(parse_vertex("1"));
  CHECK(L(v1, v1) == 3);
  for (const char* t : {"2", "1'", "2'"}) CHECK(L(v1, q.position(parse_vertex(t))) == -1);
  CHECK(L(v1, q.position(parse_vertex("3"))) == 0);
}

TEST_CASE("normalized similarity") {
  auto q = build_crossed_chain(1);
  auto M = normalized_similarity(q.graph());
  std::size_t v1 = q.position(parse_vertex("1"));
  for (const char* t : {"2", "1'", "2'"}) CHECK(M(v1, q.position(parse_vertex(t))) == make_rational(-1, 3));
  for (std::size_t i = 0; i < M.rows(); ++i) CHECK(M(i, i) == 1);
  std::vector<Rational> ones(M.cols(), Rational(1));
  for (const auto& v : M.apply(ones)) CHECK(v == 0);
  auto p = char_poly(M);
  CHECK(p.coeff(0) == 0);
  CHECK(p.coeff(1) != 0);
  CHECK_THROWS_AS(normalized_similarity(Graph(2)), std::domain_error);
}

TEST_CASE("characteristic polynomial") {
  RationalMatrix one(1, 1);
  one(0, 0) = make_rational(7, 2);
  CHECK(char_poly(one) == Polynomial::linear_factor(make_rational(7, 2)));
  auto d = from_ints({{4, 0}, {0, 6}});
  CHECK(char_poly(d) == Polynomial::linear_factor(4) * Polynomial::linear_factor(6));
  CHECK(char_poly(RationalMatrix(0, 0)) == Polynomial({Rational(1)}));
  CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3)), DimensionError);

  // L_A for one octagon
  auto la = from_ints({{2, -2, 0, 0, 0}, {-2, 4, -2, 0, 0}, {0, -2, 4, -2, 0}, {0, 0, -2, 4, -2}, {0, 0, 0, -2, 2}});
  auto p = char_poly(la);
  CHECK(p.degree() == 5);
  auto tp = trailing_pair(p);
  CHECK(tp.low == 80);
  CHECK(tp.next == 160);
}

TEST_CASE("char_poly agrees with det(xI - M)") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t dim = 1 + trial % 6;
    auto m = random_matrix(rng, dim, false);
    auto p = char_poly(m);
    CHECK(p.degree() == static_cast<long>(dim));
    for (long x : {-3L, 0L, 2L, 5L}) {
      Rational xr = make_rational(x, 1 + trial % 3);
      auto shifted = RationalMatrix::identity(dim);
      for (std::size_t i = 0; i < dim; ++i) shifted(i, i) = xr;
      CHECK(p(xr) == det(shifted - m));
    }
  }
}

TEST_CASE("fraction-free determinant") {
  CHECK(det_fraction_free(RationalMatrix::identity(3)) == 1);
  CHECK(det_fraction_free(from_ints({{2, -2}, {-2, 4}})) == 4);
  CHECK(det_fraction_free(from_ints({{0, 1}, {1, 0}})) == -1);
  CHECK(det_fraction_free(from_ints({{1, 2}, {2, 4}})) == 0);
  auto L = laplacian(build_crossed_chain(1).graph());
  std::size_t drop[] = {0};
  CHECK(det_fraction_free(L.without(drop)) == 12288);
  RationalMatrix frac(1, 1);
  frac(0, 0) = make_rational(1, 2);
  CHECK_THROWS_AS(det_fraction_free(frac), std::invalid_argument);
  CHECK_THROWS_AS(det_fraction_free(RationalMatrix(2, 1)), DimensionError);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(rng, 1 + trial % 5, true);
    CHECK(Rational(det_fraction_free(m)) == det(m));
  }
}

TEST_CASE("linear solve") {
  std::vector<Rational> b{1, 1};
  CHECK(solve(RationalMatrix::identity(2), b) == b);
  auto x = solve(from_ints({{2, 0}, {0, 4}}), b);
  CHECK(x == std::vector<Rational>{make_rational(1, 2), make_rational(1, 4)});
  CHECK_THROWS_AS(solve(from_ints({{1, 2}, {2, 4}}), b), SingularMatrixError);
  std::vector<Rational> b3{1, 1, 1};
  CHECK_THROWS_AS(solve(from_ints({{2, 0}, {0, 4}}), b3), DimensionError);
  CHECK_THROWS_AS(solve(RationalMatrix(2, 3), b), DimensionError);

  // grounded Q_1 with unit current in at vertex 2 (vertex 1 grounded)
  auto L = laplacian(build_crossed_chain(1).graph());
  std::size_t drop[] = {0};
  auto grounded = L.without(drop);
  std::vector<Rational> current(grounded.rows(), Rational(0));
  current[0] = 1;
  auto phi = solve(grounded, current);
  CHECK(phi[0] > 0);
  CHECK(phi[0] < 1);
  CHECK(grounded.apply(phi) == current);
}

TEST_CASE("fraction-free adjugate") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t dim = 1 + trial % 5;
    auto m = random_matrix(rng, dim, true);
    if (det(m) == 0) continue;
    auto a = adjugate_fraction_free(m);
    CHECK(Rational(a.det) == det(m));
    // M · adj(M) = det(M) I
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        Rational s = 0;
        for (std::size_t k = 0; k < dim; ++k) s += m(r, k) * Rational(a(k, c));
        CHECK(s == (r == c ? Rational(a.det) : Rational(0)));
      }
  }
  auto singular = from_ints({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(adjugate_fraction_free(singular), SingularMatrixError);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial p({Rational(0), Rational(0), Rational(0)});
  CHECK(p.is_zero());
  auto q = Polynomial::linear_factor(1) * Polynomial::linear_factor(-1);
  CHECK(q == Polynomial({Rational(-1), Rational(0), Rational(1)}));
  CHECK((q - q).is_zero());
  CHECK(q(3) == 8);
  CHECK(q.coeff(9) == 0);
  CHECK_THROWS(trailing_pair(q));
}

TEST_CASE("matrix helpers") {
  auto m = from_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::size_t keep[] = {2, 0};
  auto p = m.principal(keep);
  CHECK(p == from_ints({{9, 7}, {3, 1}}));
  std::size_t drop[] = {1};
  CHECK(m.without(drop) == from_ints({{1, 3}, {7, 9}}));
  CHECK(m.block(1, 1, 2, 2) == from_ints({{5, 6}, {8, 9}}));
  CHECK_FALSE(m.symmetric());
  CHECK(m.trace() == 15);
  CHECK_THROWS_AS(m + RationalMatrix(2, 2), DimensionError);
}
