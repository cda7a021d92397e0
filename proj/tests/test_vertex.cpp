#include <doctest.h>

#include "symfun/series.hpp"
#include "symfun/vertex.hpp"

using namespace symfun;

TEST_SUITE("vertex") {

TEST_CASE("single operator on the unit state") {
    // pi = (1): [z^m] (1-z) M(z) . 1 = s_(m) - s_(m-1)
    LaurentState one = LaurentState::unit(1, -6, 12, 6);
    LaurentState v1 = vertex_apply(Partition{1}, 1, one);
    CHECK(v1.coeff({0}) == SymFn::unit());
    CHECK(v1.coeff({1}) == SymFn::s({1}) - SymFn::unit());
    CHECK(v1.coeff({2}) == SymFn::s({2}) - SymFn::s({1}));

    // pi = (1,1): no prefactor, perp factors fix the unit
    LaurentState v11 = vertex_apply(Partition{1, 1}, 1, one);
    CHECK(v11.coeff({0}) == SymFn::unit());
    CHECK(v11.coeff({1}) == SymFn::s({1}));

    // pi = (2): [z^2] matches the orthogonal character of (2)
    LaurentState v2 = vertex_apply(Partition{2}, 1, one);
    CHECK(v2.coeff({2}) == SymFn::s({2}) - SymFn::unit());
    CHECK(v2.coeff({2}) == h_char(Partition{2}, Partition{2}));
}

TEST_CASE("below-lo overflow raises") {
    // L^perp(1/z) skews a column down to the unit at exponent -2, below lo
    LaurentState st(1, 0, 6, 6);
    st.add({0}, SymFn::s({1, 1}));
    CHECK_THROWS_AS(vertex_apply(Partition{1}, 1, st), DomainError);
    // a wide enough window accepts the same state
    LaurentState wide(1, -6, 6, 6);
    wide.add({0}, SymFn::s({1, 1}));
    CHECK_NOTHROW(vertex_apply(Partition{1}, 1, wide));
}

TEST_CASE("vertex characters equal the series characters") {
    CHECK(vertex_char(Partition{1, 1}, Partition{1, 1}) ==
          SymFn::s({1, 1}) - SymFn::unit());
    CHECK(vertex_char(Partition{2}, Partition{3}) == SymFn::s({2}));
    CHECK(vertex_char(Partition{2, 1}, Partition{2}) ==
          h_char(Partition{2, 1}, Partition{2}));

    std::vector<Partition> pis = {{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
    for (const auto& pi : pis)
        for (const auto& lam : partitions_up_to(5)) {
            if (lam.length() > 3)
                continue;
            CHECK(vertex_char(lam, pi) == h_char(lam, pi));
        }
}

TEST_CASE("path equivalence beyond the small range") {
    CHECK(vertex_char(Partition{4, 3, 2}, Partition{2, 1}) ==
          h_char(Partition{4, 3, 2}, Partition{2, 1}));
    CHECK(vertex_char(Partition{4, 3, 2}, Partition{3}) ==
          h_char(Partition{4, 3, 2}, Partition{3}));
}

TEST_CASE("one-row prefactor in the replicated operator at alpha = 1") {
    LaurentState plain = vertex_apply(Partition{3}, 1, LaurentState::unit(1, -8, 16, 8));
    LaurentState repl = replicated_vertex(Partition{3}, Rational(1), 6, 6);
    for (int d = 0; d <= 5; ++d)
        CHECK(repl.coeff({d}) == plain.coeff({d}));
}

TEST_CASE("extra variables do not change the character") {
    CHECK(vertex_char(Partition{2, 1}, Partition{2}, 3) ==
          h_char(Partition{2, 1}, Partition{2}));
    CHECK(vertex_char(Partition{2}, Partition{1, 1}, 2) ==
          h_char(Partition{2}, Partition{1, 1}));
}

TEST_CASE("classical recovery without prefactors") {
    for (const auto& lam : partitions_up_to(5))
        CHECK(vertex_char(lam, Partition{1}, 0, false) == SymFn::s(lam));
}

TEST_CASE("operator identity for skewing past multiplication") {
    CHECK(skew_commutation_check(Partition{1}, 3, 3));
    CHECK(skew_commutation_check(Partition{2}, 3, 4));
    CHECK(skew_commutation_check(Partition{1, 1}, 3, 4));
    CHECK(skew_commutation_check(Partition{2, 1}, 2, 4));
}

TEST_CASE("tableau product formula") {
    // pi = (1), two letters: factors (1 - w z_1)(1 - w z_2)
    TableauProductResult a1 = tableau_product_identity(Partition{1}, 2, 4);
    CHECK(a1.equal);
    CHECK(a1.series_product_match);
    REQUIRE(a1.factor_weights.size() == 2);
    CHECK(a1.factor_weights[0] == std::vector<int>{1, 0});
    CHECK(a1.factor_weights[1] == std::vector<int>{0, 1});

    // pi = (2), one letter: single factor (1 - w z^2)
    TableauProductResult a2 = tableau_product_identity(Partition{2}, 1, 4);
    CHECK(a2.equal);
    REQUIRE(a2.factor_weights.size() == 1);
    CHECK(a2.factor_weights[0] == std::vector<int>{2});

    // pi = (2,1), two letters: weights (2,1) and (1,2)
    TableauProductResult a21 = tableau_product_identity(Partition{2, 1}, 2, 5);
    CHECK(a21.equal);
    CHECK(a21.series_product_match);
    REQUIRE(a21.factor_weights.size() == 2);
    CHECK(a21.factor_weights[0] == std::vector<int>{2, 1});
    CHECK(a21.factor_weights[1] == std::vector<int>{1, 2});

    // pi = (2,1), one letter: empty product
    TableauProductResult a21one = tableau_product_identity(Partition{2, 1}, 1, 4);
    CHECK(a21one.equal);
    CHECK(a21one.factor_weights.empty());

    // factor count is the dimension polynomial at l
    for (const auto& pi : partitions_up_to(3)) {
        if (pi.weight() == 0)
            continue;
        for (int l = 1; l <= 2; ++l) {
            TableauProductResult r = tableau_product_identity(pi, l, 4);
            CHECK(Rational(static_cast<long>(r.factor_weights.size())) ==
                  dim_poly(pi, Rational(l)));
        }
    }
}

TEST_CASE("replicated vertex operator") {
    // alpha = 1 agrees with the plain operator on the unit state
    LaurentState plain = vertex_apply(Partition{1}, 1, LaurentState::unit(1, -6, 12, 6));
    LaurentState repl = replicated_vertex(Partition{1}, Rational(1), 6, 6);
    for (int d = 0; d <= 4; ++d)
        CHECK(repl.coeff({d}) == plain.coeff({d}));

    // M(alpha z) slots carry sum dim_sigma(alpha) s_sigma
    LaurentState r2 = replicated_vertex(Partition{1, 1}, Rational(2), 4, 4);
    CHECK(r2.coeff({2}) == Rational(3) * SymFn::s({2}) + SymFn::s({1, 1}));

    // alpha = -1 collapses to alternating elementary terms
    LaurentState rm = replicated_vertex(Partition{1, 1}, Rational(-1), 4, 4);
    for (int k = 0; k <= 4; ++k) {
        SymFn want = SymFn::s(Partition(std::vector<int>(static_cast<size_t>(k), 1)));
        if (k % 2 == 1)
            want = -want;
        CHECK(rm.coeff({k}) == want);
    }

    // one-row pi: fractional alpha exercises the binomial prefactor
    LaurentState rh = replicated_vertex(Partition{2}, Rational(1, 2), 4, 4);
    // slot 0: binom(1/2,0) dim_()(1/2) = 1
    CHECK(rh.coeff({0}) == SymFn::unit());
    // slot 2: dim at degree 2 minus binom(1/2,1) at degree 0
    SymFn deg2;
    deg2 += dim_poly(Partition{2}, Rational(1, 2)) * SymFn::s({2});
    deg2 += dim_poly(Partition{1, 1}, Rational(1, 2)) * SymFn::s({1, 1});
    deg2 -= Rational(1, 2) * SymFn::unit();
    CHECK(rh.coeff({2}) == deg2);
}

} // TEST_SUITE
