#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/numbers.hpp"
#include "zetatrace/trace_cohomology.hpp"
#include "zetatrace/variety.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace zetatrace {

// x + y*delta in the ring of integers of Q(sqrt(-d)), d positive squarefree:
// delta = sqrt(-d) for d % 4 != 3, delta = (1+sqrt(-d))/2 for d % 4 == 3.
struct ImagQuadInteger {
    Int x;
    Int y;
    Int d;
};

bool iq_half_basis(const Int& d);  // true iff d % 4 == 3

ImagQuadInteger iq(const Int& x, const Int& y, const Int& d);
ImagQuadInteger iq_add(const ImagQuadInteger& u, const ImagQuadInteger& v);
ImagQuadInteger iq_sub(const ImagQuadInteger& u, const ImagQuadInteger& v);
ImagQuadInteger iq_neg(const ImagQuadInteger& u);
ImagQuadInteger iq_mul(const ImagQuadInteger& u, const ImagQuadInteger& v);
ImagQuadInteger iq_conj(const ImagQuadInteger& u);
bool iq_eq(const ImagQuadInteger& u, const ImagQuadInteger& v);

Int iq_norm(const ImagQuadInteger& u);   // u * conj(u), nonnegative
Int iq_trace(const ImagQuadInteger& u);  // u + conj(u)

std::string iq_to_string(const ImagQuadInteger& u);

// Class-number-one fixture curve y^2 = x^3 + a4 x + a6 with CM by Q(sqrt(-d)).
struct CMCurve {
    std::string label;
    Int d;
    Int a4;
    Int a6;
    std::vector<Int> primes;
};

// Document layout: {"curves":[{"label", "d", "a4", "a6", "primes":[...]}...]}
std::vector<CMCurve> parse_cm_curves(const nlohmann::json& doc);
std::vector<CMCurve> parse_cm_curves_file(const std::string& path);

// All elements of norm p (the full unit-and-conjugation orbit of a generator
// of a prime above p), sorted by (x, y); InertPrime when p stays prime.
std::vector<ImagQuadInteger> split_prime(const Int& p, const Int& d);

// The Grossencharacter value psi with 1 + p - (psi + conj psi) = n1,
// canonicalized to nonnegative imaginary coefficient.
ImagQuadInteger gross_char(const CMCurve& curve, const Int& p, const Int& n1);

// 1 + q - (psi + conj psi); requires N(psi) = q.
Int predict_count(const ImagQuadInteger& psi, const Int& q);

// Frobenius data (omega_0, omega_1, omega_2) from a_p = psi + conj psi.
FrobeniusData cm_frobenius_bridge(const ImagQuadInteger& psi, const Int& q);

// Projective model y^2 z = x^3 + a4 x z^2 + a6 z^3 over F_p; rejects primes
// of bad reduction.
Variety cm_weierstrass_variety(const CMCurve& curve, const Int& p);

}  // namespace zetatrace
