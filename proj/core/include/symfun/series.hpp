#pragma once

#include <vector>

#include "symfun/symfn.hpp"

namespace symfun {

enum class SeriesKind { M, L };

/// Weight-truncated Schur function series. Slot k holds the homogeneous
/// weight-k part; the formal parameter exponent of a slot is weight/step
/// (step = |pi| for the plethysm series M_pi, L_pi, and 1 for M, L).
class TruncSeries {
public:
    TruncSeries(int cap, int step) : cap_(cap), step_(step), slots_(static_cast<size_t>(cap) + 1) {
        if (cap < 0 || step < 1)
            throw DomainError("truncated series requires cap >= 0 and step >= 1");
    }

    int cap() const { return cap_; }
    int step() const { return step_; }
    const SymFn& slot(int weight) const { return slots_.at(static_cast<size_t>(weight)); }
    void set_slot(int weight, SymFn f) { slots_.at(static_cast<size_t>(weight)) = std::move(f); }

    /// Truncated product: slot w of the result is sum over u+v=w of the
    /// outer products of slots.
    TruncSeries mul(const TruncSeries& o) const;
    /// True when slot 0 is 1 and every positive slot vanishes.
    bool is_one() const;
    bool operator==(const TruncSeries& o) const;

    std::string to_string() const;

private:
    int cap_;
    int step_;
    std::vector<SymFn> slots_;
};

/// M(t;X) = sum h_k t^k and L(t;X) = sum (-1)^k e_k t^k, truncated.
TruncSeries series_M(int cap);
TruncSeries series_L(int cap);

/// M_pi / L_pi: X replaced by the monomials of s_pi; slot k|pi| carries
/// s_(k)[s_pi] (M kind) or (-1)^k s_(1^k)[s_pi] (L kind).
TruncSeries series_pi(SeriesKind kind, const Partition& pi, int cap);

/// sum_k (S_k)^perp f; finite because skewing lowers degree.
SymFn series_perp_apply(const TruncSeries& S, const SymFn& f);

/// Formal H_pi character s_lambda^{(pi)} = L_pi^perp(s_lambda).
SymFn h_char(const Partition& lambda, const Partition& pi);

/// Coefficient of z^k/k in ln M_pi(z): sum_rho z_rho^{-1} chi_rho^pi p_{k rho},
/// returned in the power sum basis.
SymFn log_Mpi_coeffs(const Partition& pi, int k);

/// Expands L_pi(Z) M(XZ) over l letters z_1..z_l, extracts each s_lambda(Z)
/// coefficient (length(lambda) <= l, |lambda| <= cap) and compares with
/// h_char(lambda, pi).
bool genfun_check(const Partition& pi, int l, int cap);

} // namespace symfun
