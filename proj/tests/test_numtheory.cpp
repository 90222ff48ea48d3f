#include "doctest.h"

#include <stdexcept>

#include "epg/numtheory.hpp"

using namespace epg;

TEST_CASE("gcd") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(18, 12) == 6);
    CHECK(gcd(1, 99) == 1);
    CHECK(gcd(7, 7) == 7);
    CHECK_THROWS_AS(gcd(0, 5), std::invalid_argument);
}

TEST_CASE("euler_phi against a unit count") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    for (u64 n : {2, 6, 9, 12, 30, 64, 97, 100}) {
        u64 units = 0;
        for (u64 k = 1; k <= n; ++k)
            if (gcd(n, k) == 1) ++units;
        CHECK(euler_phi(n) == units);
    }
}

TEST_CASE("is_prime and factorize") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));

    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<u64, int>{2, 3});
    CHECK(f[1] == std::pair<u64, int>{3, 2});
    CHECK(f[2] == std::pair<u64, int>{5, 1});
    CHECK(factorize(1).empty());
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_mul(u64(1) << 16, u64(1) << 16) == (u64(1) << 32));
    CHECK_THROWS_AS(checked_mul(u64(1) << 40, u64(1) << 40), std::overflow_error);
    CHECK(checked_pow(2, 62) == (u64(1) << 62));
    CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
    CHECK(narrow_u64(u128(42)) == 42);
    CHECK_THROWS_AS(narrow_u64(checked_mul128(u128(1) << 64, 2)), std::overflow_error);
}
