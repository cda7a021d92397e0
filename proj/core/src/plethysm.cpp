#include "symfun/plethysm.hpp"

#include <functional>
#include <span>
#include <vector>

#include "symfun/character.hpp"

namespace symfun {

namespace {

Expansion to_expansion(const SymFn& f) {
    Expansion out;
    out.reserve(f.terms().size());
    for (const auto& [part, c] : f.terms())
        out.push_back({part, c.to_ll()});
    return out;
}

Expansion compute_pleth_basis(const Partition& mu, const Partition& nu) {
    PExp nu_p = s_term_to_p(nu);
    PExp total;
    for (const auto& [rho, c] : s_term_to_p(mu)) {
        PExp prod{{Partition{}, Rational(1)}};
        for (int i = 1; i <= rho.length(); ++i)
            prod = pexp_mul(prod, pexp_stretch(nu_p, rho.part(i)));
        for (const auto& [key, v] : prod) {
            auto it = total.find(key);
            if (it == total.end()) {
                total.emplace(key, c * v);
            } else {
                it->second += c * v;
                if (it->second.is_zero())
                    total.erase(it);
            }
        }
    }
    return to_expansion(from_p_expansion(total));
}

} // namespace

SymFn pleth_basis(const Partition& mu, const Partition& nu) {
    const Expansion& exp = memo().pleth_basis.get_or_compute(
        {mu, nu}, [&] { return compute_pleth_basis(mu, nu); });
    return SymFn::from_expansion(exp);
}

namespace {

using TermList = std::span<const std::pair<Partition, Rational>>;

// Right expansion of the fast plethysm routine for one Schur monomial on
// the left.
SymFn pleth_right(const Partition& mu, TermList terms) {
    if (mu.is_empty())
        return SymFn::unit();
    if (terms.empty())
        return SymFn();
    if (terms.size() == 1) {
        const auto& [nu, c] = terms.front();
        if (c == Rational(1))
            return pleth_basis(mu, nu);
        if (c == Rational(-1)) {
            // A[-B] = S(A)[B]
            SymFn out = pleth_basis(mu.conjugate(), nu);
            return (mu.weight() % 2 == 0) ? out : -out;
        }
        // single term with scalar: inner coproduct plus dimension factor
        SymFn out;
        for (const auto& rho : partitions_of(mu.weight())) {
            Rational d = dim_poly(rho, c);
            if (d.is_zero())
                continue;
            for (const auto& t : kron_product_expand(mu, rho))
                out += (d * Rational(t.coeff)) * pleth_basis(t.part, nu);
        }
        return out;
    }
    TermList head = terms.first(1);
    TermList tail = terms.subspan(1);
    SymFn out;
    for (const auto& kappa : subpartitions(mu)) {
        SymFn left = pleth_right(kappa, head);
        if (left.is_zero())
            continue;
        for (const auto& t : skew_expand(mu, kappa)) {
            SymFn right = pleth_right(t.part, tail);
            if (right.is_zero())
                continue;
            out += Rational(t.coeff) * outer_mul(left, right);
        }
    }
    return out;
}

} // namespace

SymFn pleth(const SymFn& f, const SymFn& g) {
    SymFn fc = f.canonical(), gc = g.canonical();
    if (fc.is_zero())
        return SymFn();
    if (gc.is_zero())
        return SymFn::monomial(Basis::s, {}, fc.coeff(Partition{}));
    Rational c0 = gc.coeff(Partition{});
    if (!c0.is_zero() && !c0.is_nonneg_integer())
        throw DomainError("plethysm right argument has constant term " + c0.to_string() +
                          "; only nonnegative integer constant terms are defined");
    std::vector<std::pair<Partition, Rational>> terms(gc.terms().begin(), gc.terms().end());
    SymFn out;
    for (const auto& [mu, c] : fc.terms())
        out += c * pleth_right(mu, terms);
    return out;
}

Rational b_coeff(const Partition& lambda, const Partition& mu, const Rational& alpha) {
    if (lambda.weight() != mu.weight())
        throw DomainError("b coefficient requires |lambda| = |mu|");
    Rational out(0);
    for (const auto& sigma : partitions_of(lambda.weight())) {
        long long a = chi(mu, sigma), b = chi(lambda, sigma);
        if (a == 0 || b == 0)
            continue;
        out += Rational(a) * Rational(b) * alpha.pow(sigma.length()) / Rational(z_stat(sigma));
    }
    return out;
}

Rational b_coeff_via_kronecker(const Partition& lambda, const Partition& mu,
                               const Rational& alpha) {
    if (lambda.weight() != mu.weight())
        throw DomainError("b coefficient requires |lambda| = |mu|");
    Rational out(0);
    for (const auto& rho : partitions_of(lambda.weight())) {
        long long g = kron_coefficient(lambda, rho, mu);
        if (g == 0)
            continue;
        out += Rational(g) * dim_poly(rho, alpha);
    }
    return out;
}

SymFn alpha_pleth(const Partition& lambda, const Rational& alpha, const Partition& nu) {
    SymFn out;
    for (const auto& mu : partitions_of(lambda.weight())) {
        Rational b = b_coeff(lambda, mu, alpha);
        if (!b.is_zero())
            out += b * pleth_basis(mu, nu);
    }
    return out;
}

SymFn alpha_schur(const Partition& lambda, const Rational& alpha) {
    return alpha_pleth(lambda, alpha, Partition{1});
}

SymFn pleth_power(const Partition& lambda, const Rational& alpha) {
    PExp pe{{lambda, alpha.pow(lambda.length())}};
    return from_p_expansion(pe);
}

SymFn jack_onerow(int n, const Rational& alpha) {
    if (n < 0)
        throw DomainError("jack_onerow requires n >= 0");
    if (alpha.is_zero())
        throw DomainError("jack_onerow requires alpha != 0");
    Rational scale = Rational::factorial(static_cast<unsigned>(n)) / alpha.pow(n);
    Partition row = (n == 0) ? Partition{} : Partition{n};
    return scale * alpha_schur(row, alpha);
}

SymFn iterated_pleth_oracle(const Partition& lambda, int t, const Partition& nu) {
    if (t < 1)
        throw DomainError("iterated_pleth_oracle requires t >= 1");
    if (t == 1)
        return pleth_basis(lambda, nu);
    const Expansion& exp = memo().iterated_pleth.get_or_compute(
        {lambda, t, nu}, [&]() -> Expansion {
            SymFn out;
            for (const auto& kappa : subpartitions(lambda)) {
                SymFn left = pleth_basis(kappa, nu);
                for (const auto& s : skew_expand(lambda, kappa))
                    out += Rational(s.coeff) *
                           outer_mul(left, iterated_pleth_oracle(s.part, t - 1, nu));
            }
            Expansion e;
            e.reserve(out.terms().size());
            for (const auto& [part, c] : out.terms())
                e.push_back({part, c.to_ll()});
            return e;
        });
    return SymFn::from_expansion(exp);
}

namespace {

using SplitKey = std::vector<Partition>;

// c^mu_{sigma,tau,...}: coefficients of the (alphabets-1)-fold iterated
// outer coproduct of s_mu, peeling one alphabet at a time.
std::map<SplitKey, long long> multi_coproduct(const Partition& mu, int alphabets) {
    std::map<SplitKey, long long> out;
    std::function<void(const Partition&, int, SplitKey&, long long)> rec =
        [&](const Partition& rest, int remaining, SplitKey& key, long long coeff) {
            if (remaining == 1) {
                key.push_back(rest);
                out[key] += coeff;
                key.pop_back();
                return;
            }
            for (const auto& sigma : subpartitions(rest))
                for (const auto& t : skew_expand(rest, sigma)) {
                    key.push_back(sigma);
                    rec(t.part, remaining - 1, key, coeff * t.coeff);
                    key.pop_back();
                }
        };
    SplitKey key;
    rec(mu, alphabets, key, 1);
    return out;
}

} // namespace

bool chi_replication_check(int weight, int alphabets) {
    if (alphabets < 1)
        throw DomainError("chi_replication_check requires at least one alphabet");
    auto parts = partitions_of(weight);
    // precompute iterated coproducts of every mu of this weight
    std::map<Partition, std::map<SplitKey, long long>> splits;
    for (const auto& mu : parts)
        splits.emplace(mu, multi_coproduct(mu, alphabets));
    for (const auto& rho : parts)
        for (const auto& nu : parts) {
            Rational lhs = Rational(alphabets).pow(rho.length()) * Rational(chi(nu, rho));
            Rational rhs(0);
            for (const auto& mu : parts) {
                long long x = chi(mu, rho);
                if (x == 0)
                    continue;
                long long dot = 0;
                const auto& smu = splits.at(mu);
                const auto& snu = splits.at(nu);
                const auto& small = smu.size() <= snu.size() ? smu : snu;
                const auto& large = smu.size() <= snu.size() ? snu : smu;
                for (const auto& [key, c] : small) {
                    auto it = large.find(key);
                    if (it != large.end())
                        dot += c * it->second;
                }
                rhs += Rational(x) * Rational(dot);
            }
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool orthogonality_check(int n, const Rational& alpha) {
    if (alpha.is_zero())
        throw DomainError("orthogonality_check requires alpha != 0");
    auto parts = partitions_of(n);
    Rational inv = Rational(1) / alpha;
    std::vector<SymFn> left, right;
    left.reserve(parts.size());
    right.reserve(parts.size());
    for (const auto& p : parts) {
        left.push_back(alpha_schur(p, alpha));
        right.push_back(alpha_schur(p, inv));
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) {
            Rational want(i == j ? 1 : 0);
            if (scalar_product(left[i], right[j]) != want)
                return false;
        }
    return chi_replication_check(std::min(n, 4), 2);
}

bool multi_alphabet_orthogonality_check(int max_weight) {
    for (int n = 0; n <= max_weight; ++n) {
        auto parts = partitions_of(n);
        std::map<Partition, TensorFn> cop;
        for (const auto& mu : parts)
            cop.emplace(mu, outer_coproduct(SymFn::s(mu)));
        auto tensor_dot = [](const TensorFn& a, const TensorFn& b) {
            Rational out(0);
            for (const auto& [key, c] : a.terms()) {
                Rational d = b.coeff(key.first, key.second);
                if (!d.is_zero())
                    out += c * d;
            }
            return out;
        };
        Rational half(1, 2);
        for (const auto& lam : parts)
            for (const auto& nu : parts) {
                Rational acc(0);
                for (const auto& mu : parts) {
                    Rational b = b_coeff(lam, mu, half);
                    if (!b.is_zero())
                        acc += b * tensor_dot(cop.at(mu), cop.at(nu));
                }
                if (acc != Rational(lam == nu ? 1 : 0))
                    return false;
            }
    }
    return true;
}

} // namespace symfun
