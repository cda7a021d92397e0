#pragma once

#include "symfun/partition.hpp"

namespace symfun {

/// Irreducible symmetric group character chi^lambda at the conjugacy class
/// rho. Requires |lambda| = |rho|; computed by the Murnaghan-Nakayama
/// border-strip recursion, memoized in the shared character table.
long long chi(const Partition& lambda, const Partition& rho);

/// Exact row and column orthogonality of the S_n character table:
/// sum_rho z_rho^{-1} chi_rho^lambda chi_rho^mu = delta and
/// sum_lambda chi_rho^lambda chi_sigma^lambda = z_rho delta.
bool check_orthogonality(int n);

} // namespace symfun
