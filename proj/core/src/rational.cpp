#include "symfun/rational.hpp"

#include <ostream>

namespace symfun {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

mpq_class Rational::from_ll(long long n) {
    if (n >= 0)
        return mpq_class(Integer(static_cast<unsigned long>(n)));
    return -mpq_class(Integer(static_cast<unsigned long>(-(n + 1))) + 1);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: " + text);
    }
}

long long Rational::to_ll() const {
    if (!is_integer())
        throw DomainError("rational " + to_string() + " is not an integer");
    Integer n = numerator();
    if (!n.fits_slong_p())
        throw DomainError("integer out of machine range: " + to_string());
    return n.get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    if (is_zero()) {
        if (e < 0)
            throw DomainError("zero raised to a negative power");
        return Rational(0);
    }
    Integer num = numerator(), den = denominator();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (sgn(num) < 0) {
            num = -num;
            den = -den;
        }
    }
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(pn, pd);
}

std::string Rational::to_string() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational Rational::binomial(const Rational& alpha, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= (alpha - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace symfun
