#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/field.hpp"
#include "zetatrace/numbers.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace zetatrace {

// A projective variety cut out by homogeneous polynomials over GF(p).
// Exponent vectors index the num_vars homogeneous coordinates; coefficients
// are residues mod p.
struct Variety {
    struct Monomial {
        std::vector<unsigned> exps;
        Int coeff;
    };
    using Polynomial = std::vector<Monomial>;

    Int p;
    unsigned num_vars = 0;  // m+1 coordinates for P^m
    unsigned dim_hint = 0;  // declared n = dim V
    std::vector<unsigned> betti_hint;  // empty, or b_0..b_{2n} with b_0 = b_{2n} = 1
    std::vector<Polynomial> polys;
};

// Counts N_1..N_R; q is the base field size (the prime p for all fixtures).
struct CountSeries {
    Int q;
    std::vector<std::uint64_t> counts;

    unsigned R() const { return static_cast<unsigned>(counts.size()); }
};

// Document layout: {"p": int, "num_vars": int, "dim": int,
// "betti": [int...] (optional), "polys": [[{"exps": [...], "coeff": int}...]...]}
Variety parse_variety(const nlohmann::json& doc);
Variety parse_variety_file(const std::string& path);

// Exact |V(F_{p^r})| over normalized projective representatives (first
// nonzero coordinate = 1). The budget caps the number of point evaluations,
// i.e. |P^m(F_{p^r})| for one call. Worker subtotals are combined in a fixed
// order, so the result is identical for any worker count.
std::uint64_t count_projective(const Variety& V, unsigned r,
                               std::uint64_t budget = kDefaultBudget,
                               unsigned workers = 1);

CountSeries count_series(const Variety& V, unsigned R,
                         std::uint64_t budget = kDefaultBudget,
                         unsigned workers = 1);

// Number of points of P^m over a field of size q: (q^(m+1)-1)/(q-1).
Int projective_space_size(const Int& q, unsigned m);

namespace detail {

// Both enumeration backends are exposed so tests can cross-validate them;
// count_projective dispatches to the table backend whenever q fits.
std::uint64_t count_with_tables(const Variety& V, unsigned r, unsigned workers);
std::uint64_t count_generic(const Variety& V, unsigned r);

}  // namespace detail

}  // namespace zetatrace
