#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/numbers.hpp"

#include <string>

namespace zetatrace {

// Element a + b*sqrt(d) of a real or imaginary quadratic field, kept
// canonical: d squarefree and != 0, and d == 1 exactly when b == 0 (the
// rational case).  Rationals mix freely with any field; two elements with
// genuinely different radicands refuse arithmetic.
struct QuadraticNumber {
    Rat a;
    Rat b;
    Int d;
};

// Canonicalizes a + b*sqrt(D) for arbitrary integer D.
QuadraticNumber qn(const Rat& a, const Rat& b, const Int& D);
QuadraticNumber qn(const Rat& a);
QuadraticNumber qn_root(const Int& D);  // sqrt(D)

QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_sub(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber qn_neg(const QuadraticNumber& x);
QuadraticNumber qn_conj(const QuadraticNumber& x);
bool qn_eq(const QuadraticNumber& x, const QuadraticNumber& y);

Rat qn_norm(const QuadraticNumber& x);   // x * conj(x) = a^2 - b^2 d
Rat qn_trace(const QuadraticNumber& x);  // x + conj(x) = 2a

// Monic quadratic (or linear) integer minimal polynomial test.
bool qn_is_algebraic_integer(const QuadraticNumber& x);

std::string qn_to_string(const QuadraticNumber& x);

}  // namespace zetatrace
