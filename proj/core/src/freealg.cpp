#include "symfun/freealg.hpp"

#include "symfun/error.hpp"

namespace symfun {

FreeSeries::FreeSeries(int cap) : cap_(cap) {
    if (cap < 0)
        throw DomainError("free series cap must be nonnegative");
}

FreeSeries FreeSeries::one(int cap) {
    FreeSeries f(cap);
    f.terms_.emplace("", Rational(1));
    return f;
}

FreeSeries FreeSeries::gen(char name, int cap) {
    if (name != 'x' && name != 'y')
        throw DomainError("free algebra generators are 'x' and 'y'");
    FreeSeries f(cap);
    if (cap >= 1)
        f.terms_.emplace(std::string(1, name), Rational(1));
    return f;
}

Rational FreeSeries::coeff(const std::string& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FreeSeries::add_term(const std::string& word, const Rational& c) {
    if (c.is_zero() || static_cast<int>(word.size()) > cap_)
        return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& o) {
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

FreeSeries& FreeSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

FreeSeries operator*(const FreeSeries& a, const FreeSeries& b) {
    FreeSeries out(std::min(a.cap_, b.cap_));
    for (const auto& [wa, ca] : a.terms_) {
        if (static_cast<int>(wa.size()) > out.cap_)
            continue;
        for (const auto& [wb, cb] : b.terms_) {
            if (static_cast<int>(wa.size() + wb.size()) > out.cap_)
                continue;
            out.add_term(wa + wb, ca * cb);
        }
    }
    return out;
}

FreeSeries FreeSeries::operator-() const {
    FreeSeries out(cap_);
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

std::string FreeSeries::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string body;
        if (w.empty())
            body = mag.to_string();
        else if (mag == Rational(1))
            body = w;
        else
            body = mag.to_string() + "*" + w;
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

FreeSeries exp_trunc(const FreeSeries& f) {
    if (!f.constant_term().is_zero())
        throw DomainError("exp_trunc requires zero constant term");
    FreeSeries out = FreeSeries::one(f.cap());
    FreeSeries power = FreeSeries::one(f.cap());
    Rational inv_fact(1);
    for (int k = 1; k <= f.cap(); ++k) {
        power = power * f;
        if (power.is_zero())
            break;
        inv_fact /= Rational(k);
        FreeSeries term = power;
        term *= inv_fact;
        out += term;
    }
    return out;
}

FreeSeries log_trunc(const FreeSeries& f) {
    if (!(f.constant_term() == Rational(1)))
        throw DomainError("log_trunc requires constant term 1");
    FreeSeries u = f;
    u.add_term("", Rational(-1));
    FreeSeries out(f.cap());
    FreeSeries power = FreeSeries::one(f.cap());
    for (int m = 1; m <= f.cap(); ++m) {
        power = power * u;
        if (power.is_zero())
            break;
        FreeSeries term = power;
        term *= Rational((m % 2 == 1) ? 1 : -1, m);
        out += term;
    }
    return out;
}

FreeSeries nested_commutator_recursive(int n, int cap) {
    FreeSeries x = FreeSeries::gen('x', cap);
    FreeSeries cur = FreeSeries::gen('y', cap);
    for (int i = 0; i < n; ++i)
        cur = x * cur - cur * x;
    return cur;
}

FreeSeries nested_commutator_binomial(int n, int cap) {
    FreeSeries out(cap);
    Rational binom(1);
    for (int r = 0; r <= n; ++r) {
        std::string word(static_cast<size_t>(n - r), 'x');
        word += 'y';
        word += std::string(static_cast<size_t>(r), 'x');
        Rational c = binom;
        if (r % 2 == 1)
            c = -c;
        out.add_term(word, c);
        binom *= Rational(n - r, r + 1);
    }
    return out;
}

FreeSeries nested_commutator(int n, int cap) {
    if (n < 0)
        throw DomainError("nested_commutator requires n >= 0");
    FreeSeries rec = nested_commutator_recursive(n, cap);
    FreeSeries bin = nested_commutator_binomial(n, cap);
    if (!(rec == bin))
        throw DomainError("nested commutator routes disagree at n = " + std::to_string(n));
    return rec;
}

bool adjoint_identity_check(int D) {
    if (D < 1)
        throw DomainError("adjoint_identity_check requires D >= 1");
    FreeSeries x = FreeSeries::gen('x', D);
    FreeSeries y = FreeSeries::gen('y', D);
    FreeSeries lhs = exp_trunc(x) * exp_trunc(y) * exp_trunc(-x);

    FreeSeries arg(D);
    Rational inv_fact(1);
    for (int n = 0; n <= D; ++n) {
        if (n > 0)
            inv_fact /= Rational(n);
        FreeSeries term = nested_commutator(n, D);
        term *= inv_fact;
        arg += term;
    }
    FreeSeries rhs = exp_trunc(arg);
    return lhs == rhs;
}

} // namespace symfun
