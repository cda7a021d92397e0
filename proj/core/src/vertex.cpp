#include "symfun/vertex.hpp"

#include <algorithm>

#include "symfun/plethysm.hpp"

namespace symfun {

namespace {

Partition column(int r) {
    return Partition(std::vector<int>(static_cast<size_t>(r), 1));
}

/// s_{1^r}[s_eta], the degree-r slot of the L_eta series (up to sign).
SymFn l_series_term(const Partition& eta, int r) {
    return pleth_basis(column(r), eta);
}

SymFn prune_weight(const SymFn& f, int cap) {
    SymFn out;
    for (const auto& [part, c] : f.terms())
        if (part.weight() <= cap)
            out.add_term(part, c);
    return out;
}

} // namespace

LaurentState::LaurentState(int nvars, int lo, int hi, int sym_cap)
    : nvars_(nvars), lo_(lo), hi_(hi), sym_cap_(sym_cap) {
    if (nvars < 1 || lo > 0 || hi < 0 || sym_cap < 0)
        throw DomainError("invalid Laurent workspace bounds");
}

LaurentState LaurentState::unit(int nvars, int lo, int hi, int sym_cap) {
    LaurentState s(nvars, lo, hi, sym_cap);
    s.terms_.emplace(Expo(static_cast<size_t>(nvars), 0), SymFn::unit());
    return s;
}

SymFn LaurentState::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? SymFn() : it->second;
}

void LaurentState::add(const Expo& e, const SymFn& f) {
    SymFn g = prune_weight(f.canonical(), sym_cap_);
    if (g.is_zero())
        return;
    for (int x : e) {
        if (x > hi_)
            return; // truncated
        if (x < lo_)
            throw DomainError("Laurent exponent bound overflow (below lo)");
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(g));
        return;
    }
    it->second += g;
    if (it->second.is_zero())
        terms_.erase(it);
}

namespace {

// L_eta^perp(z_var^estep) on a windowed state
LaurentState apply_perp_eta(const LaurentState& in, int var, const Partition& eta, int estep) {
    LaurentState out(in.nvars(), in.lo(), in.hi(), in.sym_cap());
    size_t vi = static_cast<size_t>(var - 1);
    for (const auto& [e, f] : in.terms()) {
        int rmax = f.max_weight() / eta.weight();
        for (int r = 0; r <= rmax; ++r) {
            SymFn g = perp(l_series_term(eta, r), f);
            if (g.is_zero())
                continue;
            if (r % 2 == 1)
                g = -g;
            LaurentState::Expo ne = e;
            ne[vi] += r * estep;
            out.add(ne, g);
        }
    }
    return out;
}

// L^perp(1/z_var)
LaurentState apply_perp_L_inv(const LaurentState& in, int var) {
    LaurentState out(in.nvars(), in.lo(), in.hi(), in.sym_cap());
    size_t vi = static_cast<size_t>(var - 1);
    for (const auto& [e, f] : in.terms())
        for (int k = 0; k <= f.max_weight(); ++k) {
            SymFn g = perp(SymFn::s(column(k)), f);
            if (g.is_zero())
                continue;
            if (k % 2 == 1)
                g = -g;
            LaurentState::Expo ne = e;
            ne[vi] -= k;
            out.add(ne, g);
        }
    return out;
}

// multiplication by M(z_var)
LaurentState apply_mul_M(const LaurentState& in, int var) {
    LaurentState out(in.nvars(), in.lo(), in.hi(), in.sym_cap());
    size_t vi = static_cast<size_t>(var - 1);
    for (const auto& [e, f] : in.terms())
        for (int m = 0; e[vi] + m <= in.hi() && m <= in.sym_cap(); ++m) {
            SymFn g = outer_mul(SymFn::s(m == 0 ? Partition{} : Partition{m}), f);
            LaurentState::Expo ne = e;
            ne[vi] += m;
            out.add(ne, g);
        }
    return out;
}

// multiplication by (1 - z_var^p)
LaurentState apply_prefactor(const LaurentState& in, int var, int p) {
    LaurentState out(in.nvars(), in.lo(), in.hi(), in.sym_cap());
    size_t vi = static_cast<size_t>(var - 1);
    for (const auto& [e, f] : in.terms()) {
        out.add(e, f);
        LaurentState::Expo ne = e;
        ne[vi] += p;
        out.add(ne, -f);
    }
    return out;
}

} // namespace

LaurentState vertex_apply(const Partition& pi, int var, const LaurentState& state) {
    int p = pi.weight();
    if (p < 1)
        throw DomainError("vertex operator requires |pi| >= 1");
    if (var < 1 || var > state.nvars())
        throw DomainError("vertex_apply variable index out of range");
    LaurentState cur = state;
    for (int k = p - 1; k >= 1; --k)
        for (const auto& eta : horizontal_strips(pi, k))
            cur = apply_perp_eta(cur, var, eta, k);
    cur = apply_perp_L_inv(cur, var);
    cur = apply_mul_M(cur, var);
    if (pi.length() == 1)
        cur = apply_prefactor(cur, var, p);
    return cur;
}

namespace {

using ExactState = std::map<std::vector<int>, SymFn>;

void exact_add(ExactState& st, const std::vector<int>& e, const SymFn& f) {
    if (f.is_zero())
        return;
    auto it = st.find(e);
    if (it == st.end()) {
        st.emplace(e, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero())
        st.erase(it);
}

} // namespace

SymFn vertex_char(const Partition& lambda, const Partition& pi, int nvars,
                  bool with_prefactor) {
    int p = pi.weight();
    if (p < 1)
        throw DomainError("vertex_char requires |pi| >= 1");
    int l = nvars > 0 ? nvars : std::max(lambda.length(), 1);
    if (l < lambda.length())
        throw DomainError("vertex_char needs at least length(lambda) variables");
    bool one_row = (pi.length() == 1) && with_prefactor;

    ExactState state;
    state.emplace(std::vector<int>(static_cast<size_t>(l), 0), SymFn::unit());

    // V^pi(z_l) acts first; once variable i is done its exponent is frozen,
    // so only terms with e_i = lambda_i can contribute to [Z^lambda]
    for (int i = l; i >= 1; --i) {
        size_t vi = static_cast<size_t>(i - 1);
        for (int k = p - 1; k >= 1; --k)
            for (const auto& eta : horizontal_strips(pi, k)) {
                ExactState next;
                for (const auto& [e, f] : state) {
                    int rmax = f.max_weight() / eta.weight();
                    for (int r = 0; r <= rmax; ++r) {
                        SymFn g = perp(l_series_term(eta, r), f);
                        if (g.is_zero())
                            continue;
                        if (r % 2 == 1)
                            g = -g;
                        auto ne = e;
                        ne[vi] += r * k;
                        exact_add(next, ne, g);
                    }
                }
                state = std::move(next);
            }
        {
            ExactState next;
            for (const auto& [e, f] : state)
                for (int k = 0; k <= f.max_weight(); ++k) {
                    SymFn g = perp(SymFn::s(column(k)), f);
                    if (g.is_zero())
                        continue;
                    if (k % 2 == 1)
                        g = -g;
                    auto ne = e;
                    ne[vi] -= k;
                    exact_add(next, ne, g);
                }
            state = std::move(next);
        }
        {
            // M(z_i), optional (1 - z_i^p), then projection onto lambda_i
            ExactState next;
            int target = lambda.part(i);
            for (const auto& [e, f] : state) {
                int need = target - e[vi];
                auto ne = e;
                ne[vi] = target;
                if (need >= 0)
                    exact_add(next, ne,
                              outer_mul(SymFn::s(need == 0 ? Partition{} : Partition{need}), f));
                if (one_row && need - p >= 0) {
                    int m = need - p;
                    exact_add(next, ne,
                              -outer_mul(SymFn::s(m == 0 ? Partition{} : Partition{m}), f));
                }
            }
            state = std::move(next);
        }
    }

    std::vector<int> want(static_cast<size_t>(l), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        want[static_cast<size_t>(i - 1)] = lambda.part(i);
    auto it = state.find(want);
    return it == state.end() ? SymFn() : it->second;
}

// --- skew commutation identity -----------------------------------------------

namespace {

// truncated expansion in w and z with symmetric function coefficients
using WZState = std::map<std::pair<int, int>, SymFn>;

void wz_add(WZState& st, int w, int z, const SymFn& f) {
    if (f.is_zero())
        return;
    auto key = std::make_pair(w, z);
    auto it = st.find(key);
    if (it == st.end()) {
        st.emplace(key, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero())
        st.erase(it);
}

// G -> L_pi^perp(w) G
WZState wz_perp_pi(const WZState& in, const Partition& pi) {
    WZState out;
    for (const auto& [key, f] : in) {
        int rmax = f.max_weight() / pi.weight();
        for (int r = 0; r <= rmax; ++r) {
            SymFn g = perp(l_series_term(pi, r), f);
            if (r % 2 == 1)
                g = -g;
            wz_add(out, key.first + r, key.second, g);
        }
    }
    return out;
}

// G -> L_eta^perp(w z^estep) G
WZState wz_perp_eta(const WZState& in, const Partition& eta, int estep, int z_cap) {
    WZState out;
    for (const auto& [key, f] : in) {
        int rmax = f.max_weight() / eta.weight();
        for (int r = 0; r <= rmax; ++r) {
            if (key.second + r * estep > z_cap)
                break;
            SymFn g = perp(l_series_term(eta, r), f);
            if (r % 2 == 1)
                g = -g;
            wz_add(out, key.first + r, key.second + r * estep, g);
        }
    }
    return out;
}

WZState wz_mul_M(const WZState& in, int z_cap) {
    WZState out;
    for (const auto& [key, f] : in)
        for (int m = 0; key.second + m <= z_cap; ++m)
            wz_add(out, key.first, key.second + m,
                   outer_mul(SymFn::s(m == 0 ? Partition{} : Partition{m}), f));
    return out;
}

} // namespace

bool skew_commutation_check(const Partition& pi, int z_cap, int max_deg) {
    int p = pi.weight();
    if (p < 1)
        throw DomainError("skew_commutation_check requires |pi| >= 1");
    for (const auto& tau : partitions_up_to(max_deg)) {
        WZState start{{{0, 0}, SymFn::s(tau)}};

        WZState lhs = wz_perp_pi(wz_mul_M(start, z_cap), pi);

        WZState rhs = wz_perp_pi(start, pi);
        for (int k = p - 1; k >= 1; --k)
            for (const auto& eta : horizontal_strips(pi, k))
                rhs = wz_perp_eta(rhs, eta, k, z_cap);
        rhs = wz_mul_M(rhs, z_cap);
        if (pi.length() == 1) {
            WZState shifted;
            for (const auto& [key, f] : rhs)
                if (key.second + p <= z_cap)
                    wz_add(shifted, key.first + 1, key.second + p, -f);
            for (const auto& [key, f] : shifted)
                wz_add(rhs, key.first, key.second, f);
        }

        if (lhs != rhs)
            return false;
    }
    return true;
}

// --- tableau product formula --------------------------------------------------

TableauProductResult tableau_product_identity(const Partition& pi, int l, int cap) {
    if (pi.weight() < 1 || l < 1 || cap < 0)
        throw DomainError("tableau_product_identity requires |pi| >= 1, l >= 1, cap >= 0");
    TableauProductResult res;
    res.factor_weights = ssyt_enumerate(pi, l);

    // lhs: L_pi^perp(w) applied to the X part of the Cauchy kernel
    for (const auto& lam : partitions_up_to(cap)) {
        if (lam.length() > l)
            continue;
        MPoly sz = schur_poly(lam, l);
        int rmax = lam.weight() / pi.weight();
        for (int r = 0; r <= rmax; ++r) {
            SymFn g = perp(l_series_term(pi, r), SymFn::s(lam));
            if (g.is_zero())
                continue;
            if (r % 2 == 1)
                g = -g;
            for (const auto& [e, c] : sz.terms()) {
                auto key = std::make_pair(r, e);
                SymFn& dst = res.lhs[key];
                SymFn add = g;
                add *= c;
                dst += add;
                if (dst.is_zero())
                    res.lhs.erase(key);
            }
        }
    }

    // rhs: prod_T (1 - w Z^wgt(T)) times the Cauchy kernel
    std::map<std::pair<int, MPoly::Expo>, Rational> product{
        {{0, MPoly::Expo(static_cast<size_t>(l), 0)}, Rational(1)}};
    for (const auto& w : res.factor_weights) {
        std::map<std::pair<int, MPoly::Expo>, Rational> next;
        for (const auto& [key, c] : product) {
            next[key] += c;
            int deg = 0;
            MPoly::Expo e = key.second;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] += w[i];
                deg += e[i];
            }
            if (deg <= cap)
                next[{key.first + 1, e}] -= c;
        }
        product = std::move(next);
    }
    for (const auto& lam : partitions_up_to(cap)) {
        if (lam.length() > l)
            continue;
        MPoly sz = schur_poly(lam, l);
        for (const auto& [key, c] : product) {
            if (c.is_zero())
                continue;
            for (const auto& [e, cz] : sz.terms()) {
                MPoly::Expo sum = key.second;
                int deg = 0;
                for (size_t i = 0; i < sum.size(); ++i) {
                    sum[i] += e[i];
                    deg += sum[i];
                }
                if (deg > cap)
                    continue;
                auto dst_key = std::make_pair(key.first, sum);
                SymFn& dst = res.rhs[dst_key];
                dst += (c * cz) * SymFn::s(lam);
                if (dst.is_zero())
                    res.rhs.erase(dst_key);
            }
        }
    }

    res.equal = (res.lhs == res.rhs);

    // the tableau product also matches the plethysm series L_pi(w; Z)
    res.series_product_match = true;
    int rmax = cap / pi.weight();
    for (int r = 0; r <= rmax && res.series_product_match; ++r) {
        MPoly from_product(l);
        for (const auto& [key, c] : product)
            if (key.first == r)
                from_product.add_term(key.second, c);
        SymFn slot = l_series_term(pi, r);
        MPoly from_series = symfn_poly(slot, l).truncated(cap);
        if (r % 2 == 1)
            from_series *= Rational(-1);
        res.series_product_match = (from_product == from_series);
    }
    return res;
}

// --- replicated vertex operators ---------------------------------------------

LaurentState replicated_vertex(const Partition& pi, const Rational& alpha, int z_cap,
                               int sym_cap) {
    int p = pi.weight();
    if (p < 1)
        throw DomainError("replicated_vertex requires |pi| >= 1");
    if (z_cap < 0 || sym_cap < 0)
        throw DomainError("replicated_vertex requires nonnegative caps");

    // M(alpha z) . 1; every perp factor fixes the unit state
    std::vector<SymFn> slots(static_cast<size_t>(z_cap) + 1);
    for (int d = 0; d <= std::min(z_cap, sym_cap); ++d) {
        SymFn acc;
        for (const auto& sigma : partitions_of(d)) {
            Rational dim = dim_poly(sigma, alpha);
            if (!dim.is_zero())
                acc += dim * SymFn::s(sigma);
        }
        slots[static_cast<size_t>(d)] = std::move(acc);
    }

    LaurentState out(1, -z_cap - 1, z_cap, sym_cap);
    if (pi.length() == 1) {
        // (1 - z^p)^alpha via generalized binomials
        for (int j = 0; j * p <= z_cap; ++j) {
            Rational c = Rational::binomial(alpha, static_cast<unsigned>(j));
            if (j % 2 == 1)
                c = -c;
            if (c.is_zero())
                continue;
            for (int d = 0; d + j * p <= z_cap && d <= sym_cap; ++d) {
                SymFn g = slots[static_cast<size_t>(d)];
                g *= c;
                out.add({d + j * p}, g);
            }
        }
    } else {
        for (int d = 0; d <= std::min(z_cap, sym_cap); ++d)
            out.add({d}, slots[static_cast<size_t>(d)]);
    }
    return out;
}

} // namespace symfun
