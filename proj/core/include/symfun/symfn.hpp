#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>

#include "symfun/memo.hpp"
#include "symfun/partition.hpp"
#include "symfun/rational.hpp"

namespace symfun {

enum class Basis : unsigned char { s, h, e, p, m };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// Element of the ring of symmetric functions: a finitely supported map
/// Partition -> Rational, tagged with the basis it is expressed in. The
/// canonical form is the Schur basis; all ring operations canonicalize
/// their inputs and return canonical results. No zero coefficients are
/// stored, and terms iterate in the canonical partition order.
class SymFn {
public:
    SymFn() = default;
    explicit SymFn(Basis b) : basis_(b) {}

    static SymFn monomial(Basis b, Partition part, Rational coeff = Rational(1));
    static SymFn s(Partition part) { return monomial(Basis::s, std::move(part)); }
    static SymFn h(Partition part) { return monomial(Basis::h, std::move(part)); }
    static SymFn e(Partition part) { return monomial(Basis::e, std::move(part)); }
    static SymFn p(Partition part) { return monomial(Basis::p, std::move(part)); }
    static SymFn m(Partition part) { return monomial(Basis::m, std::move(part)); }
    static SymFn unit() { return s({}); }
    static SymFn from_terms(Basis b, std::map<Partition, Rational> terms);
    static SymFn from_expansion(const Expansion& exp);

    Basis basis() const { return basis_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& part) const;

    int max_weight() const;
    /// Homogeneous component of the given weight, in this basis.
    SymFn component(int weight) const;
    Rational constant_term() const;

    /// Re-expression in the Schur basis.
    SymFn canonical() const;

    void add_term(const Partition& part, const Rational& coeff);

    SymFn& operator+=(const SymFn& o);
    SymFn& operator-=(const SymFn& o);
    SymFn& operator*=(const Rational& c);
    friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
    friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
    friend SymFn operator*(SymFn a, const Rational& c) { return a *= c; }
    friend SymFn operator*(const Rational& c, SymFn a) { return a *= c; }
    SymFn operator-() const;
    friend SymFn operator*(const SymFn& a, const SymFn& b);

    /// Equality of ring elements (compares canonical forms).
    bool operator==(const SymFn& o) const;

    /// Canonical text, e.g. "3*s[4] + s[3,1] + 3*s[2,2]"; the unit prints
    /// as its scalar, zero prints as "0".
    std::string to_string() const;

private:
    std::map<Partition, Rational> terms_;
    Basis basis_ = Basis::s;
};

std::ostream& operator<<(std::ostream&, const SymFn&);

/// Element of Lambda (x) Lambda with both slots in the Schur basis.
class TensorFn {
public:
    TensorFn() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<PartitionPair, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& left, const Partition& right) const;

    void add_term(const Partition& left, const Partition& right, const Rational& coeff);
    TensorFn& operator+=(const TensorFn& o);
    TensorFn& operator*=(const Rational& c);
    bool operator==(const TensorFn& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<PartitionPair, Rational> terms_;
};

std::ostream& operator<<(std::ostream&, const TensorFn&);

// --- coefficient kernels -------------------------------------------------

/// Outer product expansion of s_mu s_nu (Littlewood-Richardson rule by
/// direct tableau enumeration, memoized).
const Expansion& lr_product_expand(const Partition& mu, const Partition& nu);
/// Skew expansion s_{lambda/mu} = sum_nu c^lambda_{mu,nu} s_nu.
const Expansion& skew_expand(const Partition& lambda, const Partition& mu);
/// Inner (Kronecker) product expansion of s_mu * s_nu via the character sum.
const Expansion& kron_product_expand(const Partition& mu, const Partition& nu);
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
long long kron_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// --- ring operations ------------------------------------------------------

SymFn to_basis(const SymFn& f, Basis target);
SymFn outer_mul(const SymFn& f, const SymFn& g);
TensorFn outer_coproduct(const SymFn& f);
SymFn inner_mul(const SymFn& f, const SymFn& g);
TensorFn inner_coproduct(const SymFn& f);
SymFn skew(const Partition& lambda, const Partition& mu);
Rational scalar_product(const SymFn& f, const SymFn& g);
/// Adjoint of multiplication by f: on Schur terms, skewing.
SymFn perp(const SymFn& f, const SymFn& g);
SymFn antipode(const SymFn& f);

// --- specializations ------------------------------------------------------

struct FundamentalSpec {};
struct TSpec {
    Rational t;
};
struct PrincipalSpec {
    Rational q;
    int n;
};
struct ThreeParamSpec {
    Rational t;
    Rational q;
    int n;
};
using Spec = std::variant<FundamentalSpec, TSpec, PrincipalSpec, ThreeParamSpec>;

/// Algebra homomorphism Lambda -> Q determined by the chosen specialization.
Rational specialize(const SymFn& f, const Spec& spec);

// --- power sum expansion utilities -----------------------------------------

/// Finitely supported map Partition -> Rational read as sum c_rho p_rho.
/// The power sum basis is multiplicative, which makes this the convenient
/// internal representation for plethysm and series logarithms.
using PExp = std::map<Partition, Rational>;

PExp s_term_to_p(const Partition& lambda);
PExp to_p_expansion(const SymFn& f);
SymFn from_p_expansion(const PExp& pe);
PExp pexp_mul(const PExp& a, const PExp& b);
/// Substitutes p_r -> p_{kr}: the plethysm p_k[.] on power sums.
PExp pexp_stretch(const PExp& a, int k);

} // namespace symfun
