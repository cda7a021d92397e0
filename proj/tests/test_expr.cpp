#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symfun/expr.hpp"
#include "symfun/plethysm.hpp"

using namespace symfun;

TEST_SUITE("expr") {

TEST_CASE("parsing shapes") {
    CHECK(parse("s[2] @ (2*s[2])")->kind == Expr::Kind::pleth);
    CHECK(parse("<s[2,1], s[2,1]>")->kind == Expr::Kind::dot);
    CHECK(parse("perp(s[1], s[2])")->kind == Expr::Kind::perp);
    CHECK(parse("s[1] _|_ s[2]")->kind == Expr::Kind::perp);
    CHECK(parse("s[1] \xE2\x8A\xA5 s[2]")->kind == Expr::Kind::perp);
    CHECK(parse("s[3,1] / s[2]")->kind == Expr::Kind::div);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse("s[2,");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column == 5);
    }
    CHECK_THROWS_AS(parse("s[2] +"), ParseError);
    CHECK_THROWS_AS(parse("q[2]"), ParseError);
    CHECK_THROWS_AS(parse("s[2] s[2]"), ParseError);
    CHECK_THROWS_AS(parse("(s[2]"), ParseError);
}

TEST_CASE("evaluation") {
    Value v = eval("s[1,1] @ (2*s[2])");
    CHECK(print_value(v) == "s[4] + 3*s[3,1] + s[2,2]");
    CHECK(print_value(eval("s[2] @ s[1]")) == "s[2]");
    CHECK(print_value(eval("<p[2], p[2]>")) == "2");
    CHECK(print_value(eval("s[2] * s[2]")) == "s[4] + s[3,1] + s[2,2]");
    CHECK(print_value(eval("s[3,1] / s[2]")) == "s[2] + s[1,1]");
    CHECK(print_value(eval("perp(s[1], s[2])")) == "s[1]");
    CHECK(print_value(eval("2 + 3")) == "5");
    CHECK(print_value(eval("1/2 * p[2]")) == "1/2*p[2]");
    CHECK(print_value(eval("h[2] - e[2]")) == "s[2] - s[1,1]");
    CHECK(print_value(eval("-s[2] + s[2]")) == "0");
    CHECK(print_value(eval("2/4")) == "1/2");
    // precedence: @ binds tighter than *
    CHECK(std::get<SymFn>(eval("s[1] * s[1] @ s[2]")) ==
          outer_mul(SymFn::s({1}), pleth_basis(Partition{1}, Partition{2})));
    // domain errors propagate
    CHECK_THROWS_AS(eval("1 / 0"), DomainError);
    CHECK_THROWS_AS(eval("1 / s[1]"), DomainError);
    CHECK_THROWS_AS(eval("s[2] @ (s[1] + 1/2)"), DomainError);
}

TEST_CASE("print/parse round trip is idempotent") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 100; ++rep) {
        SymFn f;
        int pieces = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < pieces; ++i)
            f += oracle::random_rational(rng, 5, 3) *
                 SymFn::s(oracle::random_partition(rng, 1 + static_cast<int>(rng() % 5)));
        Value v{f};
        std::string text = print_value(v);
        Value reparsed = eval(text);
        CHECK(print_value(reparsed) == text);
        if (f.is_zero())
            CHECK(std::get<Rational>(reparsed) == Rational(0));
        else
            CHECK(std::get<SymFn>(reparsed) == f);
    }
}

TEST_CASE("malformed input never escapes the error types") {
    std::mt19937_64 rng(73);
    // small digits keep accidental valid expressions cheap to evaluate
    const std::string alphabet = "shepm[]()<>,+-*/@ 0123_|";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(1, 24);
    for (int rep = 0; rep < 500; ++rep) {
        std::string text;
        int n = len(rng);
        for (int i = 0; i < n; ++i)
            text += alphabet[pick(rng)];
        try {
            eval(text);
        } catch (const ParseError&) {
        } catch (const DomainError&) {
        }
        // anything else (crash, bad_alloc, logic error) fails the test
    }
    CHECK(true);
}

TEST_CASE("json form") {
    CHECK(print_value_json(eval("<p[2], p[2]>")) ==
          "{\"scalar\":{\"numerator\":\"2\",\"denominator\":\"1\"}}");
    CHECK(print_value_json(eval("s[2,1]")) ==
          "{\"basis\":\"s\",\"terms\":[{\"partition\":[2,1],\"numerator\":\"1\","
          "\"denominator\":\"1\"}]}");
}

} // TEST_SUITE
