#pragma once

#include <map>
#include <vector>

#include "symfun/symfn.hpp"

namespace symfun {

/// Multivariate polynomial over a fixed finite alphabet, exponent vectors
/// to exact rationals. Used to evaluate symmetric functions on finitely
/// many letters and to decompose symmetric polynomials back into Schur
/// polynomials.
class MPoly {
public:
    using Expo = std::vector<int>;

    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly one(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rational>& terms() const { return terms_; }
    Rational coeff(const Expo& e) const;

    void add_term(const Expo& e, const Rational& c);
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Product, dropping monomials of total degree above cap (cap < 0 keeps
    /// everything).
    MPoly mul(const MPoly& o, int cap = -1) const;
    MPoly truncated(int cap) const;
    int max_degree() const;

private:
    int nvars_;
    std::map<Expo, Rational> terms_;
};

/// s_lambda(x_1..x_l): monomial sum over semistandard tableau weights.
MPoly schur_poly(const Partition& lambda, int nvars);
/// p_k(x_1..x_l).
MPoly power_sum_poly(int k, int nvars);
/// Evaluation of an arbitrary SymFn on l letters.
MPoly symfn_poly(const SymFn& f, int nvars);

/// Expands a symmetric polynomial into Schur polynomials by repeated
/// subtraction of the lexicographically leading term. Throws DomainError
/// if the input is not a (rational) combination of Schur polynomials in
/// the given variables.
std::map<Partition, Rational> schur_decompose(const MPoly& poly);

} // namespace symfun
