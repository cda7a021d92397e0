#include <doctest.h>

#include "symfun/plethysm.hpp"
#include "symfun/series.hpp"

using namespace symfun;

TEST_SUITE("series") {

TEST_CASE("M and L") {
    TruncSeries M = series_M(2);
    CHECK(M.slot(0) == SymFn::unit());
    CHECK(M.slot(1) == SymFn::s({1}));
    CHECK(M.slot(2) == SymFn::s({2}));

    TruncSeries L = series_L(2);
    CHECK(L.slot(0) == SymFn::unit());
    CHECK(L.slot(1) == -SymFn::s({1}));
    CHECK(L.slot(2) == SymFn::s({1, 1}));

    for (int cap = 0; cap <= 8; ++cap)
        CHECK(series_M(cap).mul(series_L(cap)).is_one());
}

TEST_CASE("plethysm series") {
    TruncSeries L2 = series_pi(SeriesKind::L, Partition{2}, 4);
    CHECK(L2.slot(0) == SymFn::unit());
    CHECK(L2.slot(1).is_zero());
    CHECK(L2.slot(2) == -SymFn::s({2}));
    CHECK(L2.slot(3).is_zero());
    CHECK(L2.slot(4) == SymFn::s({3, 1}));

    // M_(1) = M
    TruncSeries M1 = series_pi(SeriesKind::M, Partition{1}, 5);
    CHECK(M1 == series_M(5));

    // mutually inverse through the cap
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        int cap = 2 * pi.weight() + 2;
        CHECK(series_pi(SeriesKind::M, pi, cap).mul(series_pi(SeriesKind::L, pi, cap)).is_one());
    }
    CHECK(series_pi(SeriesKind::M, Partition{2, 1}, 6)
              .mul(series_pi(SeriesKind::L, Partition{2, 1}, 6))
              .is_one());
}

TEST_CASE("dual series action") {
    // L^perp s_1 = s_1 - 1
    CHECK(series_perp_apply(series_L(3), SymFn::s({1})) == SymFn::s({1}) - SymFn::unit());
    // L_(2)^perp s_2 = s_2 - 1
    CHECK(series_perp_apply(series_pi(SeriesKind::L, Partition{2}, 4), SymFn::s({2})) ==
          SymFn::s({2}) - SymFn::unit());
    // too low a degree to skew
    CHECK(series_perp_apply(series_pi(SeriesKind::L, Partition{2, 1}, 6), SymFn::s({2})) ==
          SymFn::s({2}));
}

TEST_CASE("formal characters") {
    CHECK(h_char(Partition{1}, Partition{2}) == SymFn::s({1}));
    CHECK(h_char(Partition{1, 1}, Partition{1, 1}) == SymFn::s({1, 1}) - SymFn::unit());
    CHECK(h_char(Partition{2}, Partition{1, 1}) == SymFn::s({2}));
    CHECK(h_char(Partition{2}, Partition{2}) == SymFn::s({2}) - SymFn::unit());

    // top component is s_lambda; lower weights drop by multiples of |pi|
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        for (const auto& lam : partitions_up_to(5)) {
            SymFn f = h_char(lam, pi);
            CHECK(f.component(lam.weight()) == SymFn::s(lam));
            for (const auto& [part, c] : f.terms()) {
                int drop = lam.weight() - part.weight();
                CHECK(drop % pi.weight() == 0);
                CHECK(drop >= 0);
            }
        }
    }
}

TEST_CASE("log coefficients of M_pi") {
    // ln M_(1) has coefficient p_k at z^k/k
    for (int k = 1; k <= 4; ++k)
        CHECK(log_Mpi_coeffs(Partition{1}, k) == SymFn::p({k}));
    // (p_(k,k) + p_(2k))/2 for pi = (2)
    for (int k = 1; k <= 3; ++k) {
        SymFn want = Rational(1, 2) * (SymFn::p({k, k}) + SymFn::p({2 * k}));
        CHECK(log_Mpi_coeffs(Partition{2}, k) == want);
        SymFn wantc = Rational(1, 2) * (SymFn::p({k, k}) - SymFn::p({2 * k}));
        CHECK(log_Mpi_coeffs(Partition{1, 1}, k) == wantc);
    }
    // (p_(k,k,k) - p_(3k))/3 for pi = (2,1)
    for (int k = 1; k <= 2; ++k) {
        SymFn want = Rational(1, 3) * (SymFn::p({k, k, k}) - SymFn::p({3 * k}));
        CHECK(log_Mpi_coeffs(Partition{2, 1}, k) == want);
    }
    CHECK(log_Mpi_coeffs(Partition{3}, 1) ==
          Rational(1, 6) * (SymFn::p({1, 1, 1}) + Rational(3) * SymFn::p({2, 1}) +
                            Rational(2) * SymFn::p({3})));
    CHECK(log_Mpi_coeffs(Partition{1, 1, 1}, 1) ==
          Rational(1, 6) * (SymFn::p({1, 1, 1}) - Rational(3) * SymFn::p({2, 1}) +
                            Rational(2) * SymFn::p({3})));
}

TEST_CASE("exp of the log series recovers M_pi") {
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        int cap = 6;
        int kmax = cap / pi.weight();
        // exp(sum_k C_k z^k) with C_k = log_Mpi_coeffs / k, in the p basis
        std::vector<PExp> coeffs(static_cast<size_t>(kmax) + 1);
        for (int k = 1; k <= kmax; ++k) {
            SymFn ck = Rational(1, k) * log_Mpi_coeffs(pi, k);
            for (const auto& [rho, c] : ck.terms())
                coeffs[static_cast<size_t>(k)][rho] = c;
        }
        // accumulate exp by z-degree
        std::vector<PExp> expz(static_cast<size_t>(kmax) + 1);
        expz[0] = PExp{{Partition{}, Rational(1)}};
        for (int deg = 1; deg <= kmax; ++deg) {
            // exp' = C' exp  =>  n a_n = sum_{k<=n} k c_k a_{n-k}
            PExp acc;
            for (int k = 1; k <= deg; ++k) {
                if (coeffs[static_cast<size_t>(k)].empty())
                    continue;
                PExp scaled;
                for (const auto& [rho, c] : coeffs[static_cast<size_t>(k)])
                    scaled[rho] = c * Rational(k);
                PExp prod = pexp_mul(scaled, expz[static_cast<size_t>(deg - k)]);
                for (const auto& [rho, c] : prod) {
                    acc[rho] += c;
                    if (acc[rho].is_zero())
                        acc.erase(rho);
                }
            }
            PExp& dst = expz[static_cast<size_t>(deg)];
            for (const auto& [rho, c] : acc)
                dst[rho] = c / Rational(deg);
        }
        TruncSeries M = series_pi(SeriesKind::M, pi, cap);
        for (int k = 0; k <= kmax; ++k)
            CHECK(from_p_expansion(expz[static_cast<size_t>(k)]) == M.slot(k * pi.weight()));
    }
}

TEST_CASE("generating function check, worked cases") {
    CHECK(genfun_check(Partition{2}, 2, 4));
    CHECK(genfun_check(Partition{1, 1}, 2, 4));
    CHECK(genfun_check(Partition{1}, 1, 3));
    // three letters reach the repeated tableau factors of shape (2,1)
    CHECK(genfun_check(Partition{2, 1}, 3, 4));
    CHECK(genfun_check(Partition{1, 1, 1}, 3, 4));
}

TEST_CASE("one-letter collapse of L_(2,1)") {
    // no semistandard tableau of shape (2,1) on one letter, so the series
    // is 1, matching p_{3k}(z) - p_k(z)^3 = 0
    CHECK(ssyt_enumerate(Partition{2, 1}, 1).empty());
    for (int k = 1; k <= 3; ++k) {
        SymFn c = log_Mpi_coeffs(Partition{2, 1}, k);
        // evaluate on one letter through the principal specialization at n=1
        Rational val = specialize(c.canonical(), PrincipalSpec{Rational(5, 7), 1});
        CHECK(val == Rational(0));
    }
}

} // TEST_SUITE
