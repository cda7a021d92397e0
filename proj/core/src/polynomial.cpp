#include "symfun/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace symfun {

MPoly MPoly::one(int nvars) {
    MPoly p(nvars);
    p.add_term(Expo(static_cast<size_t>(nvars), 0), Rational(1));
    return p;
}

Rational MPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MPoly MPoly::mul(const MPoly& o, int cap) const {
    MPoly out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : o.terms_) {
            if (cap >= 0) {
                int db = std::accumulate(eb.begin(), eb.end(), 0);
                if (da + db > cap)
                    continue;
            }
            Expo e(ea);
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::truncated(int cap) const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= cap)
            out.add_term(e, c);
    return out;
}

int MPoly::max_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

MPoly schur_poly(const Partition& lambda, int nvars) {
    MPoly out(nvars);
    for (const auto& w : ssyt_enumerate(lambda, nvars))
        out.add_term(w, Rational(1));
    return out;
}

MPoly power_sum_poly(int k, int nvars) {
    if (k == 0)
        return MPoly::one(nvars);
    MPoly out(nvars);
    for (int i = 0; i < nvars; ++i) {
        MPoly::Expo e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = k;
        out.add_term(e, Rational(1));
    }
    return out;
}

MPoly symfn_poly(const SymFn& f, int nvars) {
    MPoly out(nvars);
    SymFn fc = f.canonical();
    for (const auto& [lam, c] : fc.terms()) {
        MPoly s = schur_poly(lam, nvars);
        s *= c;
        out += s;
    }
    return out;
}

std::map<Partition, Rational> schur_decompose(const MPoly& poly) {
    std::map<Partition, Rational> out;
    MPoly rest = poly;
    while (!rest.is_zero()) {
        // lexicographically largest exponent vector of the highest degree
        auto best = rest.terms().begin();
        int best_deg = std::accumulate(best->first.begin(), best->first.end(), 0);
        for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it) {
            int d = std::accumulate(it->first.begin(), it->first.end(), 0);
            if (d > best_deg || (d == best_deg && it->first > best->first)) {
                best = it;
                best_deg = d;
            }
        }
        MPoly::Expo e = best->first;
        Rational c = best->second;
        if (!std::is_sorted(e.begin(), e.end(), std::greater<int>()))
            throw DomainError("polynomial is not symmetric: leading exponent not a partition");
        Partition lam(std::vector<int>(e.begin(), e.end()));
        MPoly s = schur_poly(lam, poly.nvars());
        s *= c;
        rest -= s;
        out[lam] += c;
        if (rest.terms().size() > 100000)
            throw DomainError("schur_decompose diverged; input not symmetric");
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace symfun
