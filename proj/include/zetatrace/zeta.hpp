#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/polynomial.hpp"
#include "zetatrace/quadratic.hpp"
#include "zetatrace/series.hpp"
#include "zetatrace/variety.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace zetatrace {

enum class ZetaKind { standard, lefschetz };

// Z = prod_{i odd} P_i / prod_{i even} P_i with P_i(0) = 1 throughout.
// Standard: P_0 = 1-t, P_2n = 1-q^n t.  Lefschetz: P_2n = 1+q^n t.
// For n >= 2 the interior split is partial: the whole numerator sits in the
// P_1 slot and the leftover denominator in P_2 (no algorithm splits them).
struct FactoredZeta {
    Int q;
    unsigned n = 0;
    ZetaKind kind = ZetaKind::standard;
    std::vector<Poly> factors;  // P_0..P_{2n}
};

// Reconstructs Z from counts N_1..N_R with degree bounds taken from betti
// (numerator sum of odd b_i, denominator sum of even), then factors out
// P_0 and P_2n.  Needs R >= (sum betti) + 2 so at least two counts are
// held out beyond the linear solve.
FactoredZeta zeta_from_counts(const CountSeries& cs, const std::vector<unsigned>& betti,
                              unsigned n);

// Same reconstruction with caller-chosen degree bounds (for inputs without
// a betti hint).
FactoredZeta zeta_from_counts(const CountSeries& cs, unsigned num_deg, unsigned den_deg,
                              unsigned n);

// Z^L from per-degree Frobenius eigenvalues: P_i = prod_j (1 - lambda_ij t),
// expanded exactly in the ambient quadratic field(s); every P_i must land in
// rational coefficients.
FactoredZeta lefschetz_zeta(const std::vector<std::vector<QuadraticNumber>>& eigs,
                            const Int& q, unsigned n);

RationalFunction zeta_to_rational(const FactoredZeta& fz);
TruncatedSeries zeta_expand(const FactoredZeta& fz, unsigned R);

nlohmann::ordered_json zeta_to_json(const FactoredZeta& fz);

}  // namespace zetatrace
