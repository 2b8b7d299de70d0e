#pragma once

#include "zetatrace/numbers.hpp"

#include <string>
#include <vector>

namespace zetatrace {

// Dense polynomial over the rationals, coefficient of t^i at position i,
// trimmed (no trailing zeros; the zero polynomial is the empty vector).
using Poly = std::vector<Rat>;

int p_deg(const Poly& a);  // -1 for the zero polynomial
Poly p_trim(Poly a);
Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const Rat& s);
Rat p_eval(const Poly& a, const Rat& t);
Rat p_coeff(const Poly& a, std::size_t i);
bool p_eq(const Poly& a, const Poly& b);

// Quotient/remainder with b != 0.
std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b);

// Monic gcd (zero polynomial when both inputs are zero).
Poly p_gcd(Poly a, Poly b);

// Substitute t -> -t.
Poly p_negate_arg(const Poly& a);

std::string p_to_string(const Poly& a, const std::string& var = "t");

// Z(t) = numer/denom with denom(0) = 1 and gcd(numer, denom) = 1.
struct RationalFunction {
    Poly numer;
    Poly denom;
};

// Divides out the gcd and rescales so denom(0) = 1; denominator must have a
// nonzero constant term once reduced.
RationalFunction rf_normalize(Poly numer, Poly denom);
bool rf_eq(const RationalFunction& a, const RationalFunction& b);

}  // namespace zetatrace
