#pragma once

#include <map>
#include <string>

#include "symfun/rational.hpp"

namespace symfun {

/// Degree-truncated series in the free noncommutative algebra on the two
/// generators x and y, with exact rational coefficients. Words are strings
/// over {'x','y'}; multiplication drops words longer than the cap.
class FreeSeries {
public:
    explicit FreeSeries(int cap);
    static FreeSeries zero(int cap) { return FreeSeries(cap); }
    static FreeSeries one(int cap);
    static FreeSeries gen(char name, int cap);

    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::string, Rational>& terms() const { return terms_; }
    Rational coeff(const std::string& word) const;
    Rational constant_term() const { return coeff(""); }

    void add_term(const std::string& word, const Rational& c);
    FreeSeries& operator+=(const FreeSeries& o);
    FreeSeries& operator-=(const FreeSeries& o);
    FreeSeries& operator*=(const Rational& c);
    friend FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
    friend FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
    friend FreeSeries operator*(const FreeSeries& a, const FreeSeries& b);
    friend FreeSeries operator*(const Rational& c, FreeSeries a) { return a *= c; }
    FreeSeries operator-() const;
    bool operator==(const FreeSeries& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    int cap_;
    std::map<std::string, Rational> terms_;
};

/// exp(f) = sum f^k / k! truncated; f must have zero constant term.
FreeSeries exp_trunc(const FreeSeries& f);
/// ln(f) for f with constant term 1.
FreeSeries log_trunc(const FreeSeries& f);

/// Nested commutator [x,...,[x,[x,y]]...] of x-degree n, computed both by
/// the recursion [x, previous] and by the signed binomial sum
/// sum_r (-1)^r C(n,r) x^{n-r} y x^r; throws if the two routes disagree.
FreeSeries nested_commutator(int n, int cap);
FreeSeries nested_commutator_recursive(int n, int cap);
FreeSeries nested_commutator_binomial(int n, int cap);

/// exp(x) exp(y) exp(-x) = exp(sum_n nested_commutator(n)/n!) through
/// degree D.
bool adjoint_identity_check(int D);

} // namespace symfun
