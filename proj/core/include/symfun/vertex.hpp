#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symfun/polynomial.hpp"
#include "symfun/symfn.hpp"

namespace symfun {

/// Workspace for vertex operator calculations: a finitely supported map
/// from integer exponent vectors (one exponent per z variable, each within
/// [lo, hi]) to symmetric functions, with all retained sym components of
/// weight at most sym_cap.
///
/// Truncation contract: multiplication series are cut at sym_cap, and terms
/// shifted above hi are dropped (sound for coefficient extraction at
/// exponents <= hi - sym_cap, since only L^perp(1/z) moves exponents down
/// and it lowers weight in lockstep). Terms pushed below lo raise a
/// bound-overflow DomainError: an upward M shift could bring those back.
class LaurentState {
public:
    using Expo = std::vector<int>;

    LaurentState(int nvars, int lo, int hi, int sym_cap);
    static LaurentState unit(int nvars, int lo, int hi, int sym_cap);

    int nvars() const { return nvars_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int sym_cap() const { return sym_cap_; }
    const std::map<Expo, SymFn>& terms() const { return terms_; }
    SymFn coeff(const Expo& e) const;

    /// Merge a term: prunes sym components above sym_cap, drops exponents
    /// above hi, throws on exponents below lo.
    void add(const Expo& e, const SymFn& f);

private:
    int nvars_, lo_, hi_, sym_cap_;
    std::map<Expo, SymFn> terms_;
};

/// One vertex operator V^pi(z_var) applied to a state (var is 1-based):
/// prefactor (1 - z^p) when pi is one-row, times M(z), L^perp(1/z) and the
/// skew factors L^perp_{pi/(k)}(z^k) for k = 1..p-1.
LaurentState vertex_apply(const Partition& pi, int var, const LaurentState& state);

/// [Z^lambda] V^pi(z_1)...V^pi(z_l) . 1 computed exactly: operators act
/// right to left and each variable's exponent is projected onto lambda_i
/// as soon as its operator has been applied. Must equal h_char(lambda, pi).
/// nvars = 0 picks l = max(length(lambda), 1); with_prefactor = false drops
/// the (1 - z^p) factors (for pi = (1) this is the classical Bernstein
/// operator product giving plain s_lambda).
SymFn vertex_char(const Partition& lambda, const Partition& pi, int nvars = 0,
                  bool with_prefactor = true);

/// Operator identity L_pi^perp(w) M(z) =
/// (1 - w z^p delta_{pi,(p)}) M(z) prod_k L_{pi/(k)}^perp(w z^k) L_pi^perp(w),
/// verified by applying both sides to every Schur function of weight <= max_deg
/// and comparing the exact (w, z)-expansions through z-degree z_cap.
bool skew_commutation_check(const Partition& pi, int z_cap, int max_deg);

/// Both sides of the tableau product formula for L_pi^perp(w)(M(Z)) over l
/// letters, as maps (w-exponent, Z-exponent) -> SymFn through Z-degree cap.
struct TableauProductResult {
    bool equal;
    bool series_product_match; // the tableau product equals the L_pi(w; Z) series
    std::vector<std::vector<int>> factor_weights;
    std::map<std::pair<int, MPoly::Expo>, SymFn> lhs, rhs;
};
TableauProductResult tableau_product_identity(const Partition& pi, int l, int cap);

/// Replicated vertex operator V_alpha^pi(z) applied to the unit state:
/// (1 - z^p)^alpha expanded with generalized binomials when pi is one-row,
/// times M(alpha z) . 1 = sum_sigma z^{|sigma|} dim_sigma(alpha) s_sigma;
/// the perp factors fix the unit. One z variable, exponents 0..z_cap.
LaurentState replicated_vertex(const Partition& pi, const Rational& alpha, int z_cap,
                               int sym_cap);

} // namespace symfun
