#pragma once

// Independent reference routes used to pin expected values. These stay off
// the implementation paths they check: characters come from polynomial
// algebra instead of the border-strip recursion, products from monomial
// expansion instead of tableau enumeration.

#include <random>

#include "symfun/polynomial.hpp"
#include "symfun/symfn.hpp"

namespace symfun::oracle {

/// chi_rho^lambda read off from p_rho(x_1..x_n) = sum chi s_lambda by
/// expanding the power sum as a polynomial and decomposing into Schur
/// polynomials on |rho| variables.
long long character(const Partition& lambda, const Partition& rho);

/// Product of two symmetric functions computed on nvars letters and
/// decomposed back (valid when nvars is at least the total degree).
SymFn product_by_polynomials(const SymFn& a, const SymFn& b, int nvars);

/// Random homogeneous Schur-positive-ish test functions of the exact
/// given degree, small integer coefficients (possibly negative).
SymFn random_homogeneous(std::mt19937_64& rng, int degree, int max_terms = 3);
/// Random partition of the given weight.
Partition random_partition(std::mt19937_64& rng, int weight);
Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 4);

} // namespace symfun::oracle
