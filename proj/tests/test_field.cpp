#include <catch2/catch.hpp>

#include "modlat/field.hpp"

using modlat::Field;
using modlat::field_make;

namespace {

// Exhaustive field-axiom check; feasible for q <= 16.
void check_axioms(const Field& F) {
    const unsigned q = F.q();
    REQUIRE(q >= 2);
    for (unsigned a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.mul(a, 0) == 0);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        for (unsigned b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (unsigned c = 0; c < q; ++c) {
                CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    // nonzero elements form a multiplicative group: closed and invertible
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b) CHECK(F.mul(a, b) != 0);
}

}  // namespace

TEST_CASE("prime field F_2", "[field]") {
    const Field F = field_make(2, 1);
    CHECK(F.q() == 2);
    CHECK(F.add(1, 1) == 0);
    CHECK(F.mul(1, 1) == 1);
}

TEST_CASE("F_4 has x^3 = 1 for every nonzero x", "[field]") {
    const Field F = field_make(2, 2);
    REQUIRE(F.q() == 4);
    for (unsigned x = 1; x < 4; ++x)
        CHECK(F.mul(F.mul(x, x), x) == 1);
    // least monic irreducible of degree 2 over F_2 is 1 + t + t^2
    CHECK(F.reduction_poly() == modlat::detail::Poly{1, 1, 1});
}

TEST_CASE("non-prime characteristic is rejected", "[field]") {
    CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_make(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(field_make(3, 4), std::invalid_argument);  // 81 > 64
}

TEST_CASE("field axioms hold exhaustively for q <= 16", "[field]") {
    check_axioms(field_make(2, 1));
    check_axioms(field_make(3, 1));
    check_axioms(field_make(5, 1));
    check_axioms(field_make(7, 1));
    check_axioms(field_make(11, 1));
    check_axioms(field_make(13, 1));
    check_axioms(field_make(2, 2));
    check_axioms(field_make(2, 3));
    check_axioms(field_make(2, 4));
    check_axioms(field_make(3, 2));
}

TEST_CASE("of_size resolves prime powers", "[field]") {
    CHECK(Field::of_size(9).p() == 3);
    CHECK(Field::of_size(9).e() == 2);
    CHECK(Field::of_size(27).e() == 3);
    CHECK(Field::of_size(49).p() == 7);
    CHECK(Field::of_size(61).q() == 61);
    CHECK_THROWS(Field::of_size(6));
    CHECK_THROWS(Field::of_size(1));
    CHECK_THROWS(Field::of_size(64));  // 2^6 exceeds the degree cap
}

TEST_CASE("out-of-field elements are rejected", "[field]") {
    const Field F = field_make(2, 1);
    CHECK_THROWS(F.add(2, 0));
    CHECK_THROWS(F.inv(0));
}
