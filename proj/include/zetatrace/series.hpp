#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace zetatrace {

// Truncated power series over the rationals: coefficients c_0..c_R.
struct TruncatedSeries {
    std::vector<Rat> coeffs;

    unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

// The count series sum_r N_r t^r / r, truncated at R = counts.size().
TruncatedSeries ts_from_counts(const std::vector<std::uint64_t>& counts);

// exp(f) for f(0) = 0, via the derivative recurrence g' = f' g.
TruncatedSeries ps_exp(const TruncatedSeries& f);

// log(f) for f(0) = 1; ps_exp(ps_log(f)) = f to the shared order.
TruncatedSeries ps_log(const TruncatedSeries& f);

// Taylor coefficients of numer/denom to order R (denom(0) != 0).
TruncatedSeries ts_expand(const RationalFunction& rf, unsigned R);

// Recovers numer/denom with deg bounds (max_num_deg, max_den_deg) from the
// initial segment, solving the Pade/Hankel system with the smallest
// denominator degree that reproduces EVERY given coefficient — a solution
// that merely satisfies the linear rows but misses the full segment is
// rejected as NotRational.
RationalFunction rational_reconstruct(const TruncatedSeries& f, unsigned max_num_deg,
                                      unsigned max_den_deg);

}  // namespace zetatrace
