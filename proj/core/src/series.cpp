#include "symfun/series.hpp"

#include <algorithm>
#include <numeric>

#include "symfun/character.hpp"
#include "symfun/plethysm.hpp"
#include "symfun/polynomial.hpp"

namespace symfun {

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
    TruncSeries out(std::min(cap_, o.cap_), std::min(step_, o.step_));
    for (int w = 0; w <= out.cap(); ++w) {
        SymFn acc;
        for (int u = 0; u <= w; ++u) {
            const SymFn& a = slot(u);
            const SymFn& b = o.slot(w - u);
            if (!a.is_zero() && !b.is_zero())
                acc += outer_mul(a, b);
        }
        out.set_slot(w, std::move(acc));
    }
    return out;
}

bool TruncSeries::is_one() const {
    if (!(slot(0) == SymFn::unit()))
        return false;
    for (int w = 1; w <= cap_; ++w)
        if (!slot(w).is_zero())
            return false;
    return true;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (cap_ != o.cap_)
        return false;
    for (int w = 0; w <= cap_; ++w)
        if (!(slot(w) == o.slot(w)))
            return false;
    return true;
}

std::string TruncSeries::to_string() const {
    std::string out;
    bool first = true;
    for (int w = 0; w <= cap_; ++w) {
        if (slot(w).is_zero())
            continue;
        if (!first)
            out += "  +  ";
        out += "(" + slot(w).to_string() + ")";
        if (w > 0 && step_ >= 1 && w % step_ == 0) {
            int k = w / step_;
            out += "*t^" + std::to_string(k);
        }
        first = false;
    }
    return first ? "0" : out;
}

TruncSeries series_M(int cap) {
    TruncSeries s(cap, 1);
    for (int k = 0; k <= cap; ++k)
        s.set_slot(k, SymFn::s(k == 0 ? Partition{} : Partition{k}));
    return s;
}

TruncSeries series_L(int cap) {
    TruncSeries s(cap, 1);
    for (int k = 0; k <= cap; ++k) {
        Partition col(std::vector<int>(static_cast<size_t>(k), 1));
        SymFn f = SymFn::s(col);
        s.set_slot(k, (k % 2 == 0) ? f : -f);
    }
    return s;
}

TruncSeries series_pi(SeriesKind kind, const Partition& pi, int cap) {
    if (pi.weight() < 1)
        throw DomainError("series_pi requires |pi| >= 1");
    TruncSeries s(cap, pi.weight());
    s.set_slot(0, SymFn::unit());
    for (int k = 1; k * pi.weight() <= cap; ++k) {
        Partition outer = (kind == SeriesKind::M)
                              ? Partition{k}
                              : Partition(std::vector<int>(static_cast<size_t>(k), 1));
        SymFn f = pleth_basis(outer, pi);
        if (kind == SeriesKind::L && k % 2 == 1)
            f = -f;
        s.set_slot(k * pi.weight(), std::move(f));
    }
    return s;
}

SymFn series_perp_apply(const TruncSeries& S, const SymFn& f) {
    SymFn fc = f.canonical();
    SymFn out;
    int maxw = std::min(S.cap(), fc.max_weight());
    for (int w = 0; w <= maxw; ++w) {
        const SymFn& g = S.slot(w);
        if (!g.is_zero())
            out += perp(g, fc);
    }
    return out;
}

SymFn h_char(const Partition& lambda, const Partition& pi) {
    if (pi.weight() < 1)
        throw DomainError("h_char requires |pi| >= 1");
    return series_perp_apply(series_pi(SeriesKind::L, pi, lambda.weight()), SymFn::s(lambda));
}

SymFn log_Mpi_coeffs(const Partition& pi, int k) {
    if (k < 1)
        throw DomainError("log_Mpi_coeffs requires k >= 1");
    PExp out;
    for (const auto& rho : partitions_of(pi.weight())) {
        long long x = chi(pi, rho);
        if (x == 0)
            continue;
        std::vector<int> parts = rho.parts();
        for (int& part : parts)
            part *= k;
        out.emplace(Partition(std::move(parts)), Rational(x) / Rational(z_stat(rho)));
    }
    SymFn f(Basis::p);
    for (const auto& [rho, c] : out)
        f.add_term(rho, c);
    return f;
}

bool genfun_check(const Partition& pi, int l, int cap) {
    if (pi.weight() < 1 || l < 1 || cap < 0)
        throw DomainError("genfun_check requires |pi| >= 1, l >= 1, cap >= 0");

    // L_pi(Z) over l letters: product of (1 - Z^wgt(T)) over semistandard
    // tableaux of shape pi
    MPoly lpi = MPoly::one(l);
    for (const auto& w : ssyt_enumerate(pi, l)) {
        MPoly factor = MPoly::one(l);
        factor.add_term(w, Rational(-1));
        lpi = lpi.mul(factor, cap);
    }

    // Cauchy kernel M(XZ) truncated: map Z-exponent -> SymFn in X
    std::map<MPoly::Expo, SymFn> product;
    for (const auto& lam : partitions_up_to(cap)) {
        if (lam.length() > l)
            continue;
        MPoly sz = schur_poly(lam, l);
        for (const auto& [e, c] : sz.terms())
            for (const auto& [eL, cL] : lpi.terms()) {
                int total = std::accumulate(e.begin(), e.end(), 0) +
                            std::accumulate(eL.begin(), eL.end(), 0);
                if (total > cap)
                    continue;
                MPoly::Expo sum = e;
                for (size_t i = 0; i < sum.size(); ++i)
                    sum[i] += eL[i];
                SymFn& dst = product[sum];
                dst += (c * cL) * SymFn::s(lam);
            }
    }

    // peel Schur(Z) coefficients degree by degree
    for (int d = 0; d <= cap; ++d) {
        std::map<MPoly::Expo, SymFn> layer;
        for (const auto& [e, f] : product)
            if (std::accumulate(e.begin(), e.end(), 0) == d && !f.is_zero())
                layer.emplace(e, f);
        while (!layer.empty()) {
            auto best = layer.begin();
            for (auto it = std::next(layer.begin()); it != layer.end(); ++it)
                if (it->first > best->first)
                    best = it;
            MPoly::Expo e = best->first;
            if (!std::is_sorted(e.begin(), e.end(), std::greater<int>()))
                return false;
            Partition lam(std::vector<int>(e.begin(), e.end()));
            SymFn coeff = best->second;
            if (!(coeff == h_char(lam, pi)))
                return false;
            MPoly sz = schur_poly(lam, l);
            for (const auto& [ez, cz] : sz.terms()) {
                auto it = layer.find(ez);
                SymFn update = coeff;
                update *= -cz;
                if (it == layer.end()) {
                    if (!update.is_zero())
                        layer.emplace(ez, std::move(update));
                } else {
                    it->second += update;
                    if (it->second.is_zero())
                        layer.erase(it);
                }
            }
        }
    }
    return true;
}

} // namespace symfun
