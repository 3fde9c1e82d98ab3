#include "doctest.h"

#include "chaindex/chain_graph.hpp"
#include "chaindex/spectral.hpp"

#include <algorithm>
#include <map>

using namespace chaindex;

namespace {

std::map<Rational, int> multiset(const std::vector<Rational>& v) {
  std::map<Rational, int> m;
  for (const auto& x : v) ++m[x];
  return m;
}

}  // namespace

TEST_CASE("TriDiagSym continuants") {
  TriDiagSym t({Rational(2), Rational(4), Rational(2)}, {Rational(4), Rational(4)});
  CHECK(t.block_det(1, 3) == 0);  // singular like every Laplacian block
  CHECK(t.block_det(1, 2) == 4);
  CHECK(t.block_det(2, 1) == 1);
  CHECK(t.det_without({2}) == 4);
  CHECK(t.leading_minors() == std::vector<Rational>{1, 2, 4, 0});
  CHECK(t.trailing_minors() == std::vector<Rational>{1, 2, 4, 0});
  CHECK(t.char_poly().coeff(0) == 0);
  CHECK_THROWS(TriDiagSym({Rational(1), Rational(1)}, {}));
  CHECK_THROWS(TriDiagSym({Rational(1), Rational(1)}, {Rational(-1)}));
  CHECK_THROWS_AS(t.block_det(1, 4), std::out_of_range);
}

TEST_CASE("block split for one octagon") {
  auto s = block_split(1);
  CHECK(s.l_a.diag() == std::vector<Rational>{2, 4, 4, 4, 2});
  CHECK(s.l_a.offdiag_sq() == std::vector<Rational>{4, 4, 4, 4});
  CHECK(multiset(s.l_s) == std::map<Rational, int>{{Rational(4), 4}, {Rational(6), 1}});
  CHECK(s.nl_a.offdiag_sq().back() == make_rational(4, 15));
  CHECK(s.nl_a.diag().front() == make_rational(2, 3));
  CHECK_THROWS_AS(block_split(0), std::invalid_argument);
}

TEST_CASE("block split matches the displayed patterns") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    auto s = block_split(n);
    auto shown = displayed_block_split(n);
    CHECK(s.l_a == shown.l_a);
    CHECK(s.l_s == shown.l_s);
    CHECK(s.nl_a == shown.nl_a);
    CHECK(s.nl_s == shown.nl_s);
    CHECK(multiset(s.l_s) == std::map<Rational, int>{{Rational(4), 2 * n + 2}, {Rational(6), 2 * n - 1}});
    auto phi = multiset(s.nl_s);
    CHECK(phi[make_rational(4, 3)] == 2);
    CHECK(phi[make_rational(6, 5)] == 2 * n - 1);
    CHECK(phi[Rational(1)] == 2 * n);
  }
}

TEST_CASE("factorization holds for both families") {
  for (int n = 1; n <= 3; ++n) {
    auto f = verify_factorization(n);
    CHECK(f.laplacian);
    CHECK(f.normalized);
  }
}

TEST_CASE("w, u and n sequences") {
  CHECK(w_closed(3) == 8);
  CHECK(nn_closed(2) == 12);
  for (int n = 1; n <= 4; ++n) {
    auto s = wun_sequences(n);
    auto split = block_split(n);
    auto lead = split.l_a.leading_minors();
    CHECK(s.w[0] == 1);
    CHECK(s.nn[0] == 1);
    for (int i = 0; i <= 4 * n; ++i) {
      CHECK(s.w[i] == w_closed(i));
      CHECK(s.u[i] == s.w[i]);
      CHECK(lead[i] == s.w[i]);
    }
    for (int i = 0; i < 4 * n; ++i) {
      CHECK(s.nn[i] == nn_closed(i));
      CHECK(nn_minor(i) == nn_closed(i));
    }
  }
}

TEST_CASE("coefficients of L_A") {
  CHECK(coeff_a(1) == CoeffPair{80, 160});
  CHECK(coeff_a(2).low == 2304);
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(coeff_a_by_char_poly(n) == coeff_a(n));
    CHECK(coeff_a_by_minors(n) == coeff_a(n));
    CHECK(coeff_a_by_sequences(n) == coeff_a(n));
    CHECK(coeff_a(n).next / coeff_a(n).low == sum_recip_rho(n));
    Rational sigma = 0;
    for (const auto& v : block_split(n).l_s) sigma += 1 / v;
    CHECK(sigma == sum_recip_sigma(n));
  }
  CHECK(sum_recip_rho(1) == 2);
  CHECK(sum_recip_sigma(1) == make_rational(7, 6));
  CHECK(sum_recip_sigma(2) == 2);
}

TEST_CASE("x and y sequences") {
  CHECK(x_closed(4) == make_rational(1, 15));
  CHECK(y_closed(6) == make_rational(4, 375));
  CHECK_THROWS(x_closed(0));
  for (int n = 1; n <= 4; ++n) {
    auto s = xy_sequences(n);
    auto split = block_split(n);
    auto lead = split.nl_a.leading_minors();
    auto trail = split.nl_a.trailing_minors();
    CHECK(s.x[0] == 1);
    CHECK(s.y[0] == 1);
    for (int i = 1; i <= 4 * n; ++i) {
      CAPTURE(i);
      CHECK(s.x[i] == x_closed(i));
      CHECK(s.y[i] == y_closed(i));
      CHECK(lead[i] == s.x[i]);
      CHECK(trail[i] == s.y[i]);
    }
  }
}

TEST_CASE("z values") {
  CHECK(z_closed(4, 8).value == make_rational(2, 5));
  CHECK(z_closed(4, 8).case_number == 1);
  CHECK(z_closed(1, 2).value == 1);
  CHECK(z_closed(1, 3).value == 1);
  CHECK(z_closed(1, 3).case_number == 8);
  CHECK(z_oracle(4, 8, 2) == make_rational(2, 5));
  CHECK(z_oracle(2, 7, 2) == make_rational(1, 5));
  CHECK(z_closed(2, 7).value == make_rational(1, 5));
  CHECK(z_case_number(2, 7) == 12);
  CHECK_THROWS_AS(z_closed(3, 3), std::out_of_range);
  CHECK_THROWS_AS(z_closed(1, 10, 2), std::out_of_range);
  CHECK_THROWS_AS(z_oracle(0, 3, 2), std::out_of_range);

  auto split = block_split(4);
  for (int i = 1; i <= 16; ++i) {
    CHECK(z_oracle(split, i, i + 1) == 1);
    for (int j = i + 1; j <= 17; ++j) CHECK(z_closed(i, j).value == z_oracle(split, i, j));
  }
}

TEST_CASE("K class sums") {
  CHECK(k_sum_closed(0, 0, 2) == make_rational(2, 45));
  CHECK(k_sum_closed(0, 0, 1) == 0);
  CHECK(k_sum_closed(1, 0, 1) == make_rational(1, 2));
  CHECK_THROWS_AS(k_sum_closed(4, 0, 1), std::out_of_range);
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(k_sum_closed(p, q, n) == k_sum_oracle(p, q, n));
      }
}

TEST_CASE("coefficients of the normalized block") {
  CHECK(coeff_b(1).low == make_rational(19, 45));
  CHECK(coeff_b(1).next == make_rational(134, 45));
  CHECK(coeff_b(2).low == make_rational(37, 1125));
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto split = block_split(n);
    CHECK(coeff_b_by_char_poly(n) == coeff_b(n));
    CHECK(coeff_b_by_minors(split) == coeff_b(n));
    CHECK(coeff_b_by_sequences(n) == coeff_b(n));
    CHECK(coeff_b(n).next / coeff_b(n).low == sum_recip_lambda(n));
    Rational phi = 0;
    for (const auto& v : split.nl_s) phi += 1 / v;
    CHECK(phi == sum_recip_phi(n));
  }
  CHECK(sum_recip_lambda(1) == make_rational(134, 19));
  CHECK(sum_recip_phi(1) == make_rational(13, 3));
  CHECK(sum_recip_phi(2) == 8);
}
