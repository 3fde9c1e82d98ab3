#include "doctest.h"

#include "chaindex/closed_forms.hpp"
#include "chaindex/oracles.hpp"
#include "chaindex/spectral.hpp"

#include <cmath>

using namespace chaindex;

TEST_CASE("closed-form values") {
  CHECK(kf_closed(1) == make_rational(95, 3));
  CHECK(kf_closed(5) == 1729);
  CHECK(kf_closed(15) == make_rational(118157, 3));
  CHECK(kf_star_closed(1) == make_rational(1298, 3));
  CHECK(kf_star_closed(8) == 121724);
  CHECK(kf_star_closed(9) == make_rational(514498, 3));
  CHECK(tau_closed(1) == 12288);
  CHECK(tau_closed(4) == parse_bigint("9618527719784448"));
  CHECK(tau_closed(8) == parse_bigint("69387056622196359469382686998528"));
  CHECK_THROWS_AS(kf_closed(0), std::invalid_argument);
}

TEST_CASE("W and Gut claims are reproduced verbatim") {
  CHECK(wiener_closed(1) == 88);
  CHECK(w_class_sums(1)[0] == 84);
  CHECK(w_class_sums(1)[4] == 0);
  CHECK(gutman_closed(1) == 1251);
  CHECK(gut_class_sums(1)[0] == 486);
  CHECK(gut_class_sums(1)[5] == 0);
}

TEST_CASE("assemblies from the spectral blocks") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(kf_from_blocks(n) == kf_closed(n));
    CHECK(kf_star_from_blocks(n) == kf_star_closed(n));
    CHECK(tau_from_blocks(n) == Rational(tau_closed(n)));
    CHECK(kf_closed(n) == (8 * n + 2) * (sum_recip_rho(n) + sum_recip_sigma(n)));
    CHECK(kf_star_closed(n) == 2 * (18 * n + 1) * (sum_recip_lambda(n) + sum_recip_phi(n)));
    auto set = closed_form_set(n);
    CHECK(set.kf == kf_closed(n));
    CHECK(set.tau > 0);
  }
}

TEST_CASE("class partitions cover the vertex set") {
  for (int n = 1; n <= 4; ++n) {
    auto g = build_crossed_chain(n);
    std::size_t w = 0, gut = 0;
    for (const auto& c : wiener_classes(g)) w += c.size();
    for (const auto& c : gutman_classes(g)) gut += c.size();
    CHECK(w == g.graph().order());
    CHECK(gut == g.graph().order());
  }
}

TEST_CASE("closed forms equal the oracles") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = build_crossed_chain(n).graph();
    CHECK(kf_closed(n) == kirchhoff_oracle(g));
    CHECK(kf_star_closed(n) == degree_kirchhoff_oracle(g));
    CHECK(tau_closed(n) == spanning_trees_oracle(g));
  }
}

TEST_CASE("ratio checks") {
  auto [kw, kg] = ratio_check(1000);
  CHECK(std::abs(kw.get_d() - 0.25) < 0.001);
  CHECK(std::abs(kg.get_d() - 0.25) < 0.001);
  const auto g = build_crossed_chain(1).graph();
  auto small = ratio_check(1, Rational(wiener_oracle(g)), Rational(gutman_oracle(g)));
  CHECK(small.first == make_rational(95, 3) / 87);
  double prev = 1;
  for (int n : {10, 20, 40}) {
    double gap = std::abs(ratio_check(n).first.get_d() - 0.25);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK_THROWS(ratio_check(1, Rational(0), Rational(1)));
}
