#pragma once

#include "symfun/symfn.hpp"

namespace symfun {

/// Basis plethysm s_mu[s_nu], expanded in the Schur basis. Computed through
/// power sums: s_mu = sum z_rho^{-1} chi_rho^mu p_rho and p_k[s_nu] =
/// s_nu[p_k] stretches power sum indices by k. Memoized on (mu, nu).
SymFn pleth_basis(const Partition& mu, const Partition& nu);

/// General plethysm f[g], linear in f. The right expansion follows the
/// fast routine: a single-term right argument goes through the inner
/// coproduct and the dimension polynomial; a multi-term right argument is
/// split head/tail through the outer coproduct. Right arguments with a
/// constant term are accepted only when that term is a nonnegative integer.
SymFn pleth(const SymFn& f, const SymFn& g);

/// b_mu^lambda(alpha) as the character sum
/// sum_sigma z_sigma^{-1} chi_sigma^mu chi_sigma^lambda alpha^{l(sigma)}.
Rational b_coeff(const Partition& lambda, const Partition& mu, const Rational& alpha);
/// The same coefficient through Kronecker coefficients and dimension
/// polynomials: sum_rho g_{rho,mu}^lambda dim_rho(alpha).
Rational b_coeff_via_kronecker(const Partition& lambda, const Partition& mu,
                               const Rational& alpha);

/// alpha-plethysm s_lambda[alpha s_nu] = sum_mu b_mu^lambda(alpha) s_mu[s_nu].
SymFn alpha_pleth(const Partition& lambda, const Rational& alpha, const Partition& nu);
/// Replicated Schur function s_lambda[alpha X] (the nu = (1) case).
SymFn alpha_schur(const Partition& lambda, const Rational& alpha);
/// p_lambda[alpha X] = alpha^{l(lambda)} p_lambda, in Schur canonical form.
SymFn pleth_power(const Partition& lambda, const Rational& alpha);
/// One-row Jack function J_(n)(X; 1/alpha) = (n!/alpha^n) s_(n)[alpha X].
SymFn jack_onerow(int n, const Rational& alpha);

/// Reference evaluation of s_lambda[t s_nu] by iterated outer coproducts
/// and t-1 outer multiplications; must agree with alpha_pleth exactly.
SymFn iterated_pleth_oracle(const Partition& lambda, int t, const Partition& nu);

/// Orthogonality <s_mu(alpha X), s_lambda(alpha^{-1} X)> =
/// delta for all mu, lambda of weight n, plus the two-alphabet instance of
/// the replication identity n^{l(rho)} chi_rho^nu = sum chi c c.
bool orthogonality_check(int n, const Rational& alpha);

/// n^{l(rho)} chi_rho^nu = sum_{mu, sigma...} chi_rho^mu c^mu c^nu over the
/// given number of alphabets, for all rho, nu of the given weight.
bool chi_replication_check(int weight, int alphabets);

/// Two-alphabet orthogonality of the b(1/2)-deformed Schur functions:
/// <s~_lambda(X,Y), s_nu(X,Y)> = delta for all weights up to max_weight.
bool multi_alphabet_orthogonality_check(int max_weight);

} // namespace symfun
