#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/quadratic.hpp"

#include <vector>

namespace zetatrace {

// Finitely generated Z-module of real algebraic numbers, the H^i model.
// Generators live in one quadratic field, start with 1, and none is
// Z-redundant (in the Z-span of the others).
struct TraceModule {
    std::vector<QuadraticNumber> gens;
    unsigned degree_index = 0;

    unsigned rank() const { return static_cast<unsigned>(gens.size()); }
};

TraceModule make_trace_module(std::vector<QuadraticNumber> gens, unsigned degree_index);

// H^1 of a genus-g curve: Z + Z theta_1 + ... + Z theta_{2g-1}.
TraceModule curve_h1(unsigned g, const std::vector<QuadraticNumber>& thetas);

// Exact membership of x in the Z-span of gens (integer lattice in the
// (a, b) coordinate plane of the shared quadratic field).
bool in_z_span(const QuadraticNumber& x, const std::vector<QuadraticNumber>& gens);

// True iff omega * g stays in the Z-span of M.gens for every generator g.
bool is_endomorphism(const QuadraticNumber& omega, const TraceModule& M);

// Field trace of an algebraic integer: a for rational, 2a for quadratic.
Int endo_trace(const QuadraticNumber& omega);

// Frobenius action per degree: omegas[i] acts on H^i, i = 0..2n.
struct FrobeniusData {
    std::vector<QuadraticNumber> omegas;
    Int q;
    unsigned n = 0;
};

// Validates omega_0 = 1 and omega_2n = -q^n.
FrobeniusData make_frobenius_data(std::vector<QuadraticNumber> omegas, const Int& q, unsigned n);

struct CMFrobenius {
    QuadraticNumber omega;    // a/2 + (1/2) sqrt(a^2 + 4q), radicand reduced
    QuadraticNumber lambda1;  // = omega
    QuadraticNumber lambda2;  // algebraic conjugate, a - lambda1
};

CMFrobenius frobenius_cm(const Int& a_p, const Int& q);

// |V(F_{q^n...})|: 1 + q^n + sum_{i=1}^{2n-1} (-1)^i tr(omega_i).
Int point_count_formula(const FrobeniusData& fd);

// 1 - q^n + sum_{i=1}^{2n-1} (-1)^i tr(omega_i).
Int lefschetz_number(const FrobeniusData& fd);

// Sign of det [[A, I], [I, 0]] for symmetric positive definite integer A,
// by exact fraction-free elimination.
int block_sign(const std::vector<std::vector<Int>>& A);

}  // namespace zetatrace
