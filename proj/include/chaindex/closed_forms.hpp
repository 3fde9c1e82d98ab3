#pragma once

// Closed-form invariants of the crossed chain Q_n as functions of n.
//
// kf, kf_star and tau are theorems checked exactly against the oracles. The
// Wiener and Gutman polynomials and their per-class sums are kept verbatim
// as claims: they are compared against BFS, never trusted.

#include "chaindex/chain_graph.hpp"
#include "chaindex/exact.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chaindex {

Rational kf_closed(int n);
Rational kf_star_closed(int n);
BigInt tau_closed(int n);

Rational wiener_closed(int n);
/// Claimed W(U_1..U_5), U_k as returned by wiener_classes.
std::array<Rational, 5> w_class_sums(int n);

BigInt gutman_closed(int n);
/// Claimed Gut(U_1..U_6), U_k as returned by gutman_classes.
std::array<BigInt, 6> gut_class_sums(int n);

/// Vertex classes used by the class-sum decompositions, as positions in
/// build_crossed_chain(n).
std::array<std::vector<std::size_t>, 5> wiener_classes(const ChainGraph& g);
std::array<std::vector<std::size_t>, 6> gutman_classes(const ChainGraph& g);

/// Kf assembled from the block reciprocal sums, (8n+2)(rho + sigma).
Rational kf_from_blocks(int n);
/// Kf* assembled from the block reciprocal sums, 2(18n+1)(lambda + phi).
Rational kf_star_from_blocks(int n);
/// tau from the block products, low(L_A) 4^{2n+2} 6^{2n-1} / (8n+2).
Rational tau_from_blocks(int n);

struct ClosedFormSet {
  int n = 0;
  Rational kf;
  Rational kf_star;
  BigInt tau;
  Rational wiener_claim;
  BigInt gutman_claim;
  std::array<Rational, 5> w_class;
  std::array<BigInt, 6> gut_class;
};

ClosedFormSet closed_form_set(int n);

/// (kf / wiener, kf_star / gutman). Callers pass oracle values when they
/// have them and the claimed polynomials otherwise.
std::pair<Rational, Rational> ratio_check(int n, const Rational& wiener, const Rational& gutman);
/// Ratios against the claimed polynomials.
std::pair<Rational, Rational> ratio_check(int n);

}  // namespace chaindex
