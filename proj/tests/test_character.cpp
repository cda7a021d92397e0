#include <doctest.h>

#include "oracles.hpp"
#include "symfun/character.hpp"

using namespace symfun;

TEST_SUITE("characters") {

TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& rho : partitions_of(n)) {
            CHECK(chi(Partition{n}, rho) == 1);
            long long sign = ((n - rho.length()) % 2 == 0) ? 1 : -1;
            CHECK(chi(Partition(std::vector<int>(static_cast<size_t>(n), 1)), rho) == sign);
        }
}

TEST_CASE("frozen small values") {
    CHECK(chi(Partition{2, 1}, Partition{3}) == -1);
    CHECK(chi(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(chi(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(chi(Partition{2, 2}, Partition{2, 1, 1}) == 0);
    CHECK(chi(Partition{3, 1}, Partition{2, 2}) == -1);
}

TEST_CASE("weight mismatch is an error") {
    CHECK_THROWS_AS(chi(Partition{2}, Partition{3}), DomainError);
}

TEST_CASE("agrees with the polynomial oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& rho : partitions_of(n))
                CHECK(chi(lam, rho) == oracle::character(lam, rho));
}

TEST_CASE("orthogonality") {
    for (int n = 0; n <= 7; ++n)
        CHECK(check_orthogonality(n));
}

TEST_CASE("hook length dimension") {
    for (int n = 1; n <= 8; ++n) {
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const auto& lam : partitions_of(n))
            CHECK(Integer(static_cast<long>(chi(lam, ones))) * hook_product(lam) == fact);
    }
}

} // TEST_SUITE
