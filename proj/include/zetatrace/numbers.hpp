#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace zetatrace {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Default cap on point evaluations (and field enumerations) per counting call.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

Int pow_int(Int base, unsigned exp);

// Deterministic primality: Miller-Rabin with the 12-base certificate for
// n < 2^64; larger inputs fall back to trial division (desk scale never
// reaches them, but the answer stays exact).
bool is_prime(const Int& n);

// Floor of the integer square root; n >= 0.
Int isqrt_floor(const Int& n);

// Decomposes n > 0 as d * s^2 with d squarefree; returns d and stores s.
Int squarefree_part(const Int& n, Int& square_root);

bool is_integer(const Rat& r);

}  // namespace zetatrace
