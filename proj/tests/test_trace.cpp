#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "zetatrace/trace_cohomology.hpp"

using namespace zetatrace;

namespace {

QuadraticNumber q1() { return qn(Rat(1)); }

}  // namespace

TEST_CASE("trace module construction enforces the shape") {
    const TraceModule M = make_trace_module({q1(), qn_root(Int(2))}, 1);
    CHECK(M.rank() == 2);
    CHECK(M.degree_index == 1);

    CHECK_THROWS_AS(make_trace_module({qn_root(Int(2))}, 1), Error);          // must start at 1
    CHECK_THROWS_AS(make_trace_module({}, 1), Error);                         // empty
    CHECK_THROWS_AS(make_trace_module({q1(), qn(Rat(2))}, 1), RankDeficient); // 2 in Z-span of 1
    CHECK_THROWS_AS(make_trace_module({q1(), qn_root(Int(2)), qn(Rat(3), Rat(1), Int(2))}, 1),
                    RankDeficient);  // 3 + sqrt(2) = 3*1 + sqrt(2)
    CHECK_THROWS_AS(make_trace_module({q1(), qn_root(Int(2)), qn_root(Int(3))}, 1),
                    FieldMismatch);
}

TEST_CASE("a denominator ladder keeps full rank") {
    const TraceModule M = make_trace_module(
        {q1(), qn(Rat(0), Rat(1, 2), Int(2)), qn(Rat(0), Rat(1, 3), Int(2)),
         qn(Rat(1, 5), Rat(1, 7), Int(2))},
        1);
    CHECK(M.rank() == 4);
}

TEST_CASE("integer span membership is a lattice test") {
    const std::vector<QuadraticNumber> basis = {q1(), qn_root(Int(2))};
    CHECK(in_z_span(qn(Rat(3), Rat(2), Int(2)), basis));
    CHECK(in_z_span(qn(Rat(0)), basis));
    CHECK_FALSE(in_z_span(qn(Rat(0), Rat(1, 2), Int(2)), basis));
    CHECK_FALSE(in_z_span(qn(Rat(1, 2)), basis));

    CHECK(in_z_span(qn(Rat(7)), {qn(Rat(2)), qn(Rat(3))}));       // 2*2 + 1*3
    CHECK_FALSE(in_z_span(qn(Rat(1)), {qn(Rat(2)), qn(Rat(4))})); // gcd 2 lattice
    // Non-obvious 2D case: (0, 1/2) against the three-generator lattice.
    CHECK_FALSE(in_z_span(qn(Rat(0), Rat(1, 2), Int(2)),
                          {q1(), qn(Rat(0), Rat(1, 3), Int(2)), qn(Rat(1, 5), Rat(1, 7), Int(2))}));
}

TEST_CASE("curve H^1 prepends 1 and checks the generator count") {
    const TraceModule h1 = curve_h1(1, {qn(Rat(-1), Rat(1), Int(6))});
    CHECK(h1.rank() == 2);
    CHECK(qn_eq(h1.gens[0], q1()));
    CHECK(h1.degree_index == 1);

    const TraceModule h2 = curve_h1(2, {qn(Rat(0), Rat(1, 2), Int(2)),
                                        qn(Rat(0), Rat(1, 3), Int(2)),
                                        qn(Rat(1, 5), Rat(1, 7), Int(2))});
    CHECK(h2.rank() == 4);

    CHECK_THROWS_AS(curve_h1(2, {qn_root(Int(2))}), Error);  // needs 2g-1 = 3 thetas
    CHECK_THROWS_AS(curve_h1(1, {qn(Rat(5))}), RankDeficient);
}

TEST_CASE("endomorphism stability of Z + Z*omega") {
    const QuadraticNumber omega = qn(Rat(-1), Rat(1), Int(6));  // E1 Frobenius
    const TraceModule M = make_trace_module({q1(), omega}, 1);
    CHECK(is_endomorphism(omega, M));
    CHECK(is_endomorphism(qn_root(Int(6)), M));
    CHECK(is_endomorphism(qn(Rat(3)), M));
    CHECK_FALSE(is_endomorphism(qn(Rat(1, 2)), M));
    CHECK_FALSE(is_endomorphism(qn(Rat(0), Rat(1, 2), Int(6)), M));
    CHECK_THROWS_AS(is_endomorphism(qn_root(Int(7)), M), FieldMismatch);

    // sqrt(6)/2 maps 1 inside Z + Z*(sqrt(6)/2) but squares to 3/2, outside.
    const TraceModule half = make_trace_module({q1(), qn(Rat(0), Rat(1, 2), Int(6))}, 1);
    CHECK_FALSE(is_endomorphism(qn(Rat(0), Rat(1, 2), Int(6)), half));
    // Any rational integer stabilizes it, as does omega = -1 + sqrt(6).
    CHECK(is_endomorphism(qn(Rat(4)), half));
    CHECK(is_endomorphism(omega, half));
}

TEST_CASE("endo_trace is the field trace on algebraic integers") {
    CHECK(endo_trace(qn(Rat(1, 2), Rat(1, 2), Int(5))) == 1);  // golden ratio
    CHECK(endo_trace(qn(Rat(-1), Rat(1), Int(6))) == -2);
    CHECK(endo_trace(qn_root(Int(2))) == 0);
    CHECK(endo_trace(qn(Rat(7))) == 7);
    CHECK_THROWS_AS(endo_trace(qn(Rat(1, 2), Rat(1, 3), Int(5))), NotAlgebraicInteger);
    CHECK_THROWS_AS(endo_trace(qn(Rat(3, 2))), NotAlgebraicInteger);
}

TEST_CASE("frobenius_cm splits the characteristic polynomial x^2 - a x - q") {
    const CMFrobenius f = frobenius_cm(Int(-2), Int(5));
    CHECK(qn_eq(f.omega, qn(Rat(-1), Rat(1), Int(6))));
    CHECK(qn_eq(f.lambda1, f.omega));
    CHECK(qn_eq(f.lambda2, qn(Rat(-1), Rat(-1), Int(6))));
    CHECK(qn_eq(qn_add(f.lambda1, f.lambda2), qn(Rat(-2))));
    CHECK(qn_eq(qn_mul(f.lambda1, f.lambda2), qn(Rat(-5))));

    auto gen = oracle::rng(0x5eed0303);
    std::uniform_int_distribution<long> apick(-6, 6);
    std::uniform_int_distribution<long> qpick(2, 30);
    for (int it = 0; it < 200; ++it) {
        const Int a(apick(gen));
        const Int q(qpick(gen));
        const CMFrobenius g = frobenius_cm(a, q);
        CHECK(qn_eq(qn_add(g.lambda1, g.lambda2), qn(Rat(a))));
        CHECK(qn_eq(qn_mul(g.lambda1, g.lambda2), qn(Rat(-q))));
    }

    // Perfect-square discriminant: a=0, q=4 gives rational eigenvalues 2, -2.
    const CMFrobenius sq = frobenius_cm(Int(0), Int(4));
    CHECK(sq.omega.b == 0);
    CHECK(qn_eq(sq.lambda1, qn(Rat(2))));
    CHECK(qn_eq(sq.lambda2, qn(Rat(-2))));
}

TEST_CASE("frobenius data validation and the two global formulas") {
    const QuadraticNumber omega = frobenius_cm(Int(-2), Int(5)).omega;
    const FrobeniusData fd = make_frobenius_data({q1(), omega, qn(Rat(-5))}, Int(5), 1);
    CHECK(point_count_formula(fd) == 8);
    CHECK(lefschetz_number(fd) == -2);
    CHECK(point_count_formula(fd) - lefschetz_number(fd) == 10);  // 2q

    CHECK_THROWS_AS(make_frobenius_data({q1(), omega}, Int(5), 1), Error);
    CHECK_THROWS_AS(make_frobenius_data({qn(Rat(2)), omega, qn(Rat(-5))}, Int(5), 1), Error);
    CHECK_THROWS_AS(make_frobenius_data({q1(), omega, qn(Rat(5))}, Int(5), 1), Error);
    CHECK_THROWS_AS(endo_trace(qn(Rat(1, 3))), NotAlgebraicInteger);

    // Surface-shaped data: n = 2, interior traces contribute with signs.
    const FrobeniusData s =
        make_frobenius_data({q1(), qn(Rat(2)), qn(Rat(3)), qn(Rat(4)), qn(Rat(-9))}, Int(3), 2);
    // 1 + 9 - 2 + 3 - 4 = 7 and 1 - 9 - 2 + 3 - 4 = -11.
    CHECK(point_count_formula(s) == 7);
    CHECK(lefschetz_number(s) == -11);
}

TEST_CASE("block determinant sign is (-1)^g for SPD matrices") {
    CHECK(block_sign({{Int(1)}}) == -1);
    CHECK(block_sign({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 1);

    auto gen = oracle::rng(0x5eed0304);
    std::uniform_int_distribution<long> pick(-3, 3);
    for (unsigned g = 1; g <= 4; ++g) {
        for (int it = 0; it < 25; ++it) {
            // B^T B + I is symmetric positive definite for any integer B.
            std::vector<std::vector<Int>> B(g, std::vector<Int>(g));
            for (auto& row : B)
                for (auto& v : row) v = pick(gen);
            std::vector<std::vector<Int>> A(g, std::vector<Int>(g, Int(0)));
            for (unsigned i = 0; i < g; ++i)
                for (unsigned j = 0; j < g; ++j) {
                    for (unsigned k = 0; k < g; ++k) A[i][j] += B[k][i] * B[k][j];
                    if (i == j) A[i][j] += 1;
                }
            CAPTURE(g);
            CHECK(block_sign(A) == (g % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("block_sign rejects non-SPD input") {
    CHECK_THROWS_AS(block_sign({}), InvalidMatrix);
    CHECK_THROWS_AS(block_sign({{Int(1), Int(2)}}), InvalidMatrix);  // not square
    CHECK_THROWS_AS(block_sign({{Int(1), Int(2)}, {Int(3), Int(1)}}), InvalidMatrix);  // asym
    CHECK_THROWS_AS(block_sign({{Int(0)}}), InvalidMatrix);  // not positive definite
    CHECK_THROWS_AS(block_sign({{Int(1), Int(2)}, {Int(2), Int(1)}}), InvalidMatrix);  // det < 0
}
