#include <catch2/catch.hpp>

#include "modlat/bigint.hpp"

#include <cstdint>
#include <random>

using modlat::BigUint;

TEST_CASE("small values round-trip through uint64", "[bigint]") {
    CHECK(BigUint{0}.is_zero());
    CHECK(BigUint{0}.str() == "0");
    CHECK(BigUint{1}.to_uint64() == 1);
    CHECK(BigUint{123456789}.str() == "123456789");
    CHECK(BigUint{UINT64_MAX}.to_uint64() == UINT64_MAX);
    CHECK(BigUint{UINT64_MAX}.str() == "18446744073709551615");
}

TEST_CASE("arithmetic agrees with 64-bit reference on random inputs", "[bigint]") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const uint64_t a = rng() >> (rng() % 40);
        const uint64_t b = rng() >> (rng() % 40);
        if (a <= UINT64_MAX - b) CHECK((BigUint{a} + BigUint{b}).to_uint64() == a + b);
        if (a >= b) CHECK((BigUint{a} - BigUint{b}).to_uint64() == a - b);
        if (b == 0 || a <= UINT64_MAX / (b ? b : 1))
            CHECK((BigUint{a} * BigUint{b}).to_uint64() == a * b);
        CHECK((BigUint{a} < BigUint{b}) == (a < b));
        CHECK((BigUint{a} == BigUint{b}) == (a == b));
    }
}

TEST_CASE("large products and powers", "[bigint]") {
    // 2^128 = 340282366920938463463374607431768211456
    CHECK(BigUint::pow(BigUint{2}, 128).str() == "340282366920938463463374607431768211456");
    // (10^9)^4
    CHECK(BigUint::pow(BigUint{1000000000}, 4).str() == "1" + std::string(36, '0'));
    const BigUint big = BigUint::pow(BigUint{2}, 100);
    CHECK_FALSE(big.fits_uint64());
    CHECK_THROWS(big.to_uint64());
    CHECK(big - (big - BigUint{7}) == BigUint{7});
}

TEST_CASE("subtraction underflow throws", "[bigint]") {
    CHECK_THROWS(BigUint{3} - BigUint{5});
}
