#include "chaindex/closed_forms.hpp"

#include "chaindex/spectral.hpp"

#include <stdexcept>
#include <string>

namespace chaindex {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

}  // namespace

Rational kf_closed(int n) {
  require_n(n);
  const BigInt m = n;
  return make_rational(32 * m * m * m + 44 * m * m + 17 * m + 2, 3);
}

Rational kf_star_closed(int n) {
  require_n(n);
  const BigInt m = n;
  return make_rational(2 * (324 * m * m * m + 252 * m * m + 71 * m + 2), 3);
}

BigInt tau_closed(int n) {
  require_n(n);
  return bigint_pow(2, 10UL * n + 2) * bigint_pow(3, 2UL * n - 1);
}

Rational wiener_closed(int n) {
  require_n(n);
  const BigInt m = n;
  return make_rational(128 * m * m * m + 96 * m * m + 40 * m, 3);
}

std::array<Rational, 5> w_class_sums(int n) {
  require_n(n);
  const BigInt m = n;
  const BigInt m2 = m * m, m3 = m2 * m;
  return {Rational(4 * (16 * m2 + 4 * m + 1)), make_rational(4 * (8 * m3 + 3 * m2 + m), 3),
          make_rational(2 * (16 * m3 + 6 * m2 - m), 3), make_rational(4 * (8 * m3 + 3 * m2 + m), 3),
          make_rational(2 * (16 * m3 - 18 * m2 + 5 * m - 3), 3)};
}

BigInt gutman_closed(int n) {
  require_n(n);
  const BigInt m = n;
  return 864 * m * m * m + 64 * m * m + 418 * m - 95;
}

std::array<BigInt, 6> gut_class_sums(int n) {
  require_n(n);
  const BigInt m = n;
  const BigInt m2 = m * m, m3 = m2 * m;
  return {18 * (24 * m2 + 2 * m + 1), 6 * (72 * m2 + 42 * m - 13),    32 * (12 * m3 + m2 + 2 * m),
          16 * (24 * m3 + 2 * m2 - m), 10 * (48 * m3 + 4 * m2 + m), 10 * (48 * m3 - 84 * m2 + 49 * m - 13)};
}

namespace {

void add_pair(const ChainGraph& g, std::vector<std::size_t>& out, int index) {
  out.push_back(g.position({Side::Unprimed, index}));
  out.push_back(g.position({Side::Primed, index}));
}

}  // namespace

std::array<std::vector<std::size_t>, 5> wiener_classes(const ChainGraph& g) {
  const int n = g.n();
  std::array<std::vector<std::size_t>, 5> u;
  add_pair(g, u[0], 1);
  add_pair(g, u[0], 4 * n + 1);
  for (int i = 1; i <= n; ++i) {
    add_pair(g, u[1], 4 * i - 2);
    add_pair(g, u[2], 4 * i - 1);
    add_pair(g, u[3], 4 * i);
  }
  for (int i = 1; i <= n - 1; ++i) add_pair(g, u[4], 4 * i + 1);
  return u;
}

std::array<std::vector<std::size_t>, 6> gutman_classes(const ChainGraph& g) {
  const int n = g.n();
  std::array<std::vector<std::size_t>, 6> u;
  add_pair(g, u[0], 1);
  add_pair(g, u[1], 4 * n + 1);
  for (int i = 1; i <= n; ++i) {
    add_pair(g, u[2], 4 * i - 2);
    add_pair(g, u[3], 4 * i - 1);
    add_pair(g, u[4], 4 * i);
  }
  for (int i = 2; i <= n; ++i) add_pair(g, u[5], 4 * i - 3);
  return u;
}

Rational kf_from_blocks(int n) { return (8L * n + 2) * (sum_recip_rho(n) + sum_recip_sigma(n)); }

Rational kf_star_from_blocks(int n) { return 2 * (18L * n + 1) * (sum_recip_lambda(n) + sum_recip_phi(n)); }

Rational tau_from_blocks(int n) {
  const Rational low = coeff_a(n).low;
  return low * Rational(bigint_pow(4, 2UL * n + 2)) * Rational(bigint_pow(6, 2UL * n - 1)) / (8L * n + 2);
}

ClosedFormSet closed_form_set(int n) {
  ClosedFormSet s;
  s.n = n;
  s.kf = kf_closed(n);
  s.kf_star = kf_star_closed(n);
  s.tau = tau_closed(n);
  s.wiener_claim = wiener_closed(n);
  s.gutman_claim = gutman_closed(n);
  s.w_class = w_class_sums(n);
  s.gut_class = gut_class_sums(n);
  return s;
}

std::pair<Rational, Rational> ratio_check(int n, const Rational& wiener, const Rational& gutman) {
  if (wiener == 0 || gutman == 0) throw std::domain_error("ratio against a zero index");
  return {kf_closed(n) / wiener, kf_star_closed(n) / gutman};
}

std::pair<Rational, Rational> ratio_check(int n) {
  return ratio_check(n, wiener_closed(n), Rational(gutman_closed(n)));
}

}  // namespace chaindex
