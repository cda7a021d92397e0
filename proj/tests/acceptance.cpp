// Acceptance suite: one line per criterion, exact checks with wall-clock
// limits. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#include "symfun/bench.hpp"
#include "symfun/character.hpp"
#include "symfun/freealg.hpp"
#include "symfun/plethysm.hpp"
#include "symfun/series.hpp"
#include "symfun/vertex.hpp"

using namespace symfun;

namespace {

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<bool()> run;
};

Partition col(int k) {
    return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

bool golden_values() {
    bool ok = true;
    SymFn s2 = SymFn::s({2}), s11 = SymFn::s({1, 1});
    ok &= pleth(s2, Rational(2) * SymFn::s({2})) ==
          Rational(3) * SymFn::s({4}) + SymFn::s({3, 1}) + Rational(3) * SymFn::s({2, 2});
    ok &= pleth(s11, Rational(2) * SymFn::s({2})) ==
          SymFn::s({4}) + Rational(3) * SymFn::s({3, 1}) + SymFn::s({2, 2});
    ok &= pleth(s2, Rational(2) * SymFn::s({1})) == Rational(3) * s2 + s11;
    ok &= pleth(s11, Rational(2) * SymFn::s({1})) == s2 + Rational(3) * s11;

    Partition lam{4, 2, 2, 1};
    ok &= (n_stat(lam) == 9);
    ok &= (z_stat(lam) == 32);
    int hooks[4][4] = {{7, 5, 2, 1}, {4, 2, 0, 0}, {3, 1, 0, 0}, {1, 0, 0, 0}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            auto [c, h] = content_hook(lam, i, j);
            ok &= (c == j - i);
            ok &= (h == hooks[i - 1][j - 1]);
        }
    return ok;
}

bool b_two_routes() {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Rational random_alpha(num(rng), den(rng));
    std::vector<Rational> alphas = {Rational(2), Rational(-1), Rational(1, 2), Rational(7, 3),
                                    random_alpha};
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                for (const auto& a : alphas)
                    if (!(b_coeff(lam, mu, a) == b_coeff_via_kronecker(lam, mu, a)))
                        return false;
    return true;
}

bool orthogonality() {
    for (const Rational& alpha : {Rational(1, 2), Rational(3), Rational(-2, 5)})
        for (int n = 0; n <= 6; ++n)
            if (!orthogonality_check(n, alpha))
                return false;
    if (!multi_alphabet_orthogonality_check(4))
        return false;
    for (int w = 0; w <= 4; ++w)
        if (!chi_replication_check(w, 2))
            return false;
    return true;
}

bool fast_vs_oracle() {
    for (int lw = 1; lw <= 4; ++lw)
        for (const auto& lam : partitions_of(lw))
            for (int nw = 1; nw <= 3; ++nw)
                for (const auto& nu : partitions_of(nw))
                    for (int t = 1; t <= 4; ++t)
                        if (!(iterated_pleth_oracle(lam, t, nu) ==
                              alpha_pleth(lam, Rational(t), nu)))
                            return false;
    return true;
}

bool series_criteria() {
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        int cap = 2 * pi.weight() + 2;
        if (!series_pi(SeriesKind::M, pi, cap).mul(series_pi(SeriesKind::L, pi, cap)).is_one())
            return false;
    }

    // the six closed forms of the log coefficients, k <= 2
    for (int k = 1; k <= 2; ++k) {
        Rational half(1, 2), third(1, 3), sixth(1, 6);
        if (!(log_Mpi_coeffs(Partition{1}, k) == SymFn::p({k})))
            return false;
        if (!(log_Mpi_coeffs(Partition{2}, k) ==
              half * (SymFn::p({k, k}) + SymFn::p({2 * k}))))
            return false;
        if (!(log_Mpi_coeffs(Partition{1, 1}, k) ==
              half * (SymFn::p({k, k}) - SymFn::p({2 * k}))))
            return false;
        if (!(log_Mpi_coeffs(Partition{3}, k) ==
              sixth * (SymFn::p({k, k, k}) + Rational(3) * SymFn::p({2 * k, k}) +
                       Rational(2) * SymFn::p({3 * k}))))
            return false;
        if (!(log_Mpi_coeffs(Partition{2, 1}, k) ==
              third * (SymFn::p({k, k, k}) - SymFn::p({3 * k}))))
            return false;
        if (!(log_Mpi_coeffs(Partition{1, 1, 1}, k) ==
              sixth * (SymFn::p({k, k, k}) - Rational(3) * SymFn::p({2 * k, k}) +
                       Rational(2) * SymFn::p({3 * k}))))
            return false;
    }

    // exp of the log series reproduces M_pi through degree 6
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        int cap = 6;
        int kmax = cap / pi.weight();
        std::vector<PExp> expz(static_cast<size_t>(kmax) + 1);
        expz[0] = PExp{{Partition{}, Rational(1)}};
        std::vector<PExp> coeffs(static_cast<size_t>(kmax) + 1);
        for (int k = 1; k <= kmax; ++k) {
            SymFn ck = Rational(1, k) * log_Mpi_coeffs(pi, k);
            for (const auto& [rho, c] : ck.terms())
                coeffs[static_cast<size_t>(k)][rho] = c;
        }
        for (int deg = 1; deg <= kmax; ++deg) {
            PExp acc;
            for (int k = 1; k <= deg; ++k) {
                PExp scaled;
                for (const auto& [rho, c] : coeffs[static_cast<size_t>(k)])
                    scaled[rho] = c * Rational(k);
                for (const auto& [rho, c] :
                     pexp_mul(scaled, expz[static_cast<size_t>(deg - k)])) {
                    acc[rho] += c;
                    if (acc[rho].is_zero())
                        acc.erase(rho);
                }
            }
            for (const auto& [rho, c] : acc)
                expz[static_cast<size_t>(deg)][rho] = c / Rational(deg);
        }
        TruncSeries M = series_pi(SeriesKind::M, pi, cap);
        for (int k = 0; k <= kmax; ++k)
            if (!(from_p_expansion(expz[static_cast<size_t>(k)]) == M.slot(k * pi.weight())))
                return false;
    }
    return true;
}

bool genfun_criteria() {
    if (!genfun_check(Partition{2}, 2, 5))
        return false;
    if (!genfun_check(Partition{1, 1}, 2, 5))
        return false;
    if (!genfun_check(Partition{3}, 3, 5))
        return false;
    if (!genfun_check(Partition{2, 1}, 2, 5))
        return false;
    if (!genfun_check(Partition{1, 1, 1}, 2, 5))
        return false;
    if (!(h_char(Partition{2}, Partition{2}) == SymFn::s({2}) - SymFn::unit()))
        return false;
    if (!(h_char(Partition{1, 1}, Partition{1, 1}) == SymFn::s({1, 1}) - SymFn::unit()))
        return false;
    return true;
}

bool vertex_vs_series() {
    std::vector<Partition> pis = {{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto& pi : pis)
        for (const auto& lam : partitions_up_to(6)) {
            if (lam.length() > 3)
                continue;
            if (!(vertex_char(lam, pi) == h_char(lam, pi)))
                return false;
        }
    for (const auto& lam : partitions_up_to(5))
        if (!(vertex_char(lam, Partition{1}, 0, false) == SymFn::s(lam)))
            return false;
    return true;
}

bool skew_commutation_criteria() {
    std::vector<Partition> pis = {{2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto& pi : pis)
        if (!skew_commutation_check(pi, 4, 5))
            return false;
    // pi = (2,1) special cases: the unit-state product form over letters,
    // and the one-letter collapse of L_(2,1)
    TableauProductResult a = tableau_product_identity(Partition{2, 1}, 2, 6);
    if (!a.equal || !a.series_product_match)
        return false;
    TableauProductResult a1 = tableau_product_identity(Partition{2, 1}, 1, 6);
    if (!a1.equal || !a1.factor_weights.empty())
        return false;
    return true;
}

bool tableau_product_criteria() {
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        for (int l = 1; l <= 2; ++l) {
            TableauProductResult r = tableau_product_identity(pi, l, 6);
            if (!r.equal || !r.series_product_match)
                return false;
            if (!(Rational(static_cast<long>(r.factor_weights.size())) ==
                  dim_poly(pi, Rational(l))))
                return false;
        }
    }
    return true;
}

bool free_algebra_criteria() {
    for (int D = 1; D <= 6; ++D)
        if (!adjoint_identity_check(D))
            return false;
    for (int n = 0; n <= 6; ++n)
        if (!(nested_commutator_recursive(n, 7) == nested_commutator_binomial(n, 7)))
            return false;
    return true;
}

bool bench_trend() {
    BenchReport r = run_bench(Partition{3}, Partition{1, 1}, {10, 1000}, 3);
    if (!r.outputs_equal)
        return false;
    double d10 = r.median_for("direct", 10), d1000 = r.median_for("direct", 1000);
    double i10 = r.median_for("iterated", 10), i1000 = r.median_for("iterated", 1000);
    std::cout << "      direct:   n=10 " << d10 << "s,  n=1000 " << d1000 << "s\n";
    std::cout << "      iterated: n=10 " << i10 << "s,  n=1000 " << i1000 << "s\n";
    return d1000 <= 3.0 * d10 && i1000 >= 5.0 * i10;
}

bool character_machinery() {
    for (int n = 0; n <= 9; ++n)
        if (!check_orthogonality(n))
            return false;
    for (int n = 1; n <= 8; ++n) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        for (const auto& lam : partitions_of(n))
            if (Integer(static_cast<long>(chi(lam, col(n)))) * hook_product(lam) != fact)
                return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden worked-example values (plethysms, diagram statistics)", 1.0, golden_values},
        {2, "b coefficients agree along both routes, weight <= 6", 30.0, b_two_routes},
        {3, "orthogonality of replicated Schur functions", 60.0, orthogonality},
        {4, "fast alpha-plethysm equals iterated oracle", 120.0, fast_vs_oracle},
        {5, "series inverses, log coefficients, exp/log round trip", 60.0, series_criteria},
        {6, "character generating functions over finite alphabets", 120.0, genfun_criteria},
        {7, "vertex operator path equals series path", 600.0, vertex_vs_series},
        {8, "skew commutation operator identity and special cases", 120.0, skew_commutation_criteria},
        {9, "tableau product formula for L_pi^perp(w)(M(Z))", 120.0, tableau_product_criteria},
        {10, "free-algebra adjoint identity and commutator forms", 30.0, free_algebra_criteria},
        {11, "benchmark trend: direct O(1), iterated growing", 300.0, bench_trend},
        {12, "character orthogonality n <= 9 and hook dimensions", 120.0, character_machinery},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" (exception: ") + e.what() + ")";
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = ok && in_time;
        if (!pass)
            ++failed;
        std::cout << "[" << std::setw(2) << c.id << "] " << (pass ? "PASS" : "FAIL") << "  ("
                  << std::fixed << std::setprecision(2) << secs << "s, limit "
                  << std::setprecision(0) << c.limit_seconds << "s)  " << c.name;
        if (ok && !in_time)
            std::cout << "  [exceeded time limit]";
        std::cout << note << "\n";
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(6);
    }
    std::cout << "acceptance: " << (criteria.size() - static_cast<size_t>(failed)) << "/"
              << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
