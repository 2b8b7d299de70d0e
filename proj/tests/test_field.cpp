#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "zetatrace/field.hpp"

#include <stdexcept>

using namespace zetatrace;

namespace {

std::vector<Int> to_int_vec(const std::vector<long>& v) {
    std::vector<Int> out;
    for (const long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("modulus selection agrees with the independent scan") {
    const std::vector<std::pair<long, int>> cases = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                                     {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3},
                                                     {11, 2}, {13, 2}};
    for (const auto& [p, k] : cases) {
        CAPTURE(p);
        CAPTURE(k);
        const FieldDescriptor F = ff_make(Int(p), static_cast<unsigned>(k));
        CHECK(F.modulus_poly == to_int_vec(oracle::oracle_modulus(p, k)));
    }
}

TEST_CASE("frozen moduli") {
    CHECK(ff_make(Int(2), 3).modulus_poly == std::vector<Int>{1, 1, 0, 1});
    CHECK(ff_make(Int(3), 2).modulus_poly == std::vector<Int>{1, 0, 1});
    CHECK(ff_make(Int(5), 2).modulus_poly == std::vector<Int>{2, 0, 1});
    CHECK(ff_make(Int(3), 3).modulus_poly == std::vector<Int>{1, 2, 0, 1});
    CHECK(ff_make(Int(13), 2).modulus_poly == std::vector<Int>{2, 0, 1});
}

TEST_CASE("prime field is plain modular arithmetic") {
    const FieldDescriptor F = ff_make(Int(13), 1);
    for (long a = 0; a < 13; ++a) {
        for (long b = 0; b < 13; ++b) {
            const FieldElement xa = ff_from_index(F, Int(a));
            const FieldElement xb = ff_from_index(F, Int(b));
            CHECK(ff_index(ff_add(xa, xb)) == Int((a + b) % 13));
            CHECK(ff_index(ff_mul(xa, xb)) == Int((a * b) % 13));
            CHECK(ff_index(ff_sub(xa, xb)) == Int(((a - b) % 13 + 13) % 13));
        }
    }
}

TEST_CASE("extension arithmetic matches the table oracle element-by-element") {
    for (const auto& [p, k] : std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        CAPTURE(p);
        CAPTURE(k);
        const FieldDescriptor F = ff_make(Int(p), static_cast<unsigned>(k));
        const oracle::OracleField O = oracle::oracle_field(p, k);
        REQUIRE(F.q() == Int(O.q));
        for (long a = 0; a < O.q; ++a) {
            const FieldElement xa = ff_from_index(F, Int(a));
            for (long b = 0; b < O.q; ++b) {
                const FieldElement xb = ff_from_index(F, Int(b));
                CHECK(ff_index(ff_add(xa, xb)) == Int(O.add(a, b)));
                CHECK(ff_index(ff_mul(xa, xb)) == Int(O.mul(a, b)));
            }
        }
    }
}

TEST_CASE("inverses, subtraction, and powers are consistent") {
    const FieldDescriptor F = ff_make(Int(5), 3);
    const FieldElement one = ff_one(F);
    for (long i = 1; i < 125; ++i) {
        const FieldElement x = ff_from_index(F, Int(i));
        CHECK(ff_eq(ff_mul(x, ff_inv(x)), one));
        CHECK(ff_is_zero(ff_sub(x, x)));
        CHECK(ff_is_zero(ff_add(x, ff_neg(x))));
        CHECK(ff_eq(ff_pow(x, Int(124)), one));  // x^(q-1) = 1
        CHECK(ff_eq(ff_pow(x, Int(125)), x));    // x^q = x
    }
    CHECK_THROWS_AS(ff_inv(ff_zero(F)), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
    const FieldDescriptor F = ff_make(Int(13), 2);
    auto gen = oracle::rng(0x5eed0001);
    std::uniform_int_distribution<long> pick(0, 168);
    for (int it = 0; it < 1000; ++it) {
        const FieldElement x = ff_from_index(F, Int(pick(gen)));
        const FieldElement y = ff_from_index(F, Int(pick(gen)));
        const FieldElement z = ff_from_index(F, Int(pick(gen)));
        CHECK(ff_eq(ff_add(x, y), ff_add(y, x)));
        CHECK(ff_eq(ff_mul(x, y), ff_mul(y, x)));
        CHECK(ff_eq(ff_add(ff_add(x, y), z), ff_add(x, ff_add(y, z))));
        CHECK(ff_eq(ff_mul(ff_mul(x, y), z), ff_mul(x, ff_mul(y, z))));
        CHECK(ff_eq(ff_mul(x, ff_add(y, z)), ff_add(ff_mul(x, y), ff_mul(x, z))));
        CHECK(ff_eq(ff_add(x, ff_zero(F)), x));
        CHECK(ff_eq(ff_mul(x, ff_one(F)), x));
    }
}

TEST_CASE("frobenius is the p-power map and a field automorphism") {
    for (const auto& [p, k] : std::vector<std::pair<long, int>>{{2, 3}, {3, 3}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(k);
        const FieldDescriptor F = ff_make(Int(p), static_cast<unsigned>(k));
        const long q = F.q().convert_to<long>();
        auto gen = oracle::rng(0x5eed0002 + static_cast<std::uint64_t>(q));
        std::uniform_int_distribution<long> pick(0, q - 1);
        for (int it = 0; it < 200; ++it) {
            const FieldElement x = ff_from_index(F, Int(pick(gen)));
            const FieldElement y = ff_from_index(F, Int(pick(gen)));
            CHECK(ff_eq(ff_frobenius(x), ff_pow(x, Int(p))));
            CHECK(ff_eq(ff_frobenius(ff_add(x, y)), ff_add(ff_frobenius(x), ff_frobenius(y))));
            CHECK(ff_eq(ff_frobenius(ff_mul(x, y)), ff_mul(ff_frobenius(x), ff_frobenius(y))));
        }
        // Frobenius fixes exactly GF(p) inside GF(p^k): k applications are the identity.
        for (long i = 0; i < q; ++i) {
            FieldElement x = ff_from_index(F, Int(i));
            FieldElement fx = x;
            for (int j = 0; j < k; ++j) fx = ff_frobenius(fx);
            CHECK(ff_eq(fx, x));
        }
    }
}

TEST_CASE("enumeration is complete, ordered, and budgeted") {
    const FieldDescriptor F = ff_make(Int(3), 3);
    const auto all = ff_enumerate(F);
    REQUIRE(all.size() == 27);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(ff_index(all[i]) == Int(i));
        CHECK(ff_eq(ff_from_index(F, Int(i)), all[i]));
    }
    CHECK_THROWS_AS(ff_enumerate(F, 26), EnumerationTooLarge);
}

TEST_CASE("integer embedding wraps negatives") {
    const FieldDescriptor F = ff_make(Int(7), 2);
    CHECK(ff_eq(ff_from_int(F, Int(-1)), ff_neg(ff_one(F))));
    CHECK(ff_eq(ff_from_int(F, Int(15)), ff_from_int(F, Int(1))));
    CHECK(ff_is_zero(ff_from_int(F, Int(-14))));
}

TEST_CASE("rejected constructions") {
    CHECK_THROWS_AS(ff_make(Int(6), 2), CompositeModulus);
    CHECK_THROWS_AS(ff_make(Int(1), 1), CompositeModulus);
    CHECK_THROWS_AS(ff_make(Int(4), 1), CompositeModulus);
    CHECK_THROWS_AS(ff_make(Int(7), 0), InvalidDegree);
    try {
        ff_make(Int(10), 2);
        FAIL("expected CompositeModulus");
    } catch (const CompositeModulus& e) {
        CHECK(std::string(e.module()) == "field_core");
    }
}
