#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/trace_cohomology.hpp"
#include "zetatrace/variety.hpp"
#include "zetatrace/zeta.hpp"

#include <string>
#include <vector>

namespace zetatrace {

// "reported" marks observations the tool evaluates but does not assert;
// it never affects pass/fail roll-ups.
enum class CheckStatus { pass, fail, reported };

const char* status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    bool all_pass() const;
    void sort_by_name();
};

// Every N_r in cs must be reproduced by r * [t^r] log Z; at least `holdout`
// counts beyond the factor-degree total must be present (genuine predictions).
CheckResult verify_rationality(const CountSeries& cs, const FactoredZeta& fz, unsigned holdout);

// Exact test of Z(1/(q^n t)) = sign * q^(n*chi/2) * t^chi * Z(t); determines
// the sign (written to sign_out when non-null) or fails.
CheckResult verify_functional_eq(const FactoredZeta& fz, long chi, int* sign_out = nullptr);

// deg P_i == b_i for every factor slot.
CheckResult verify_betti(const FactoredZeta& fz, const std::vector<unsigned>& betti);

// Numeric: every reciprocal root alpha of P has ||alpha| - q^(i/2)| <= tol.
// Exact side-certificate: |leading coeff|^2 == q^(i*deg P).
CheckResult verify_rh_modulus(const Poly& P, const Int& q, unsigned i, double tol);

// Which of Z = 1/Z^L, Z(t) = Z^L(-t), Z = 1/Z^L(-t) hold exactly
// (cross-multiplied polynomial identities); sorted, possibly empty.
std::vector<std::string> smale_probe(const FactoredZeta& z_std, const FactoredZeta& z_lef);

// Curve checks: (a) -[t]P1 = tr(omega_1); (b) the point-count formula gives
// N_1; (c) the r=2 analogue 1+q^2-(lambda1^2+lambda2^2) differs from N_2
// (the stated r=1-only limitation), reported with both values.
CheckResult trace_consistency(const Poly& P1_std, const FrobeniusData& fd,
                              const CountSeries& cs);

// (N1 - L)/2 must equal q^n; odd difference throws InconsistentCounts.
CheckResult index_minus_one(const Int& N1, const Int& L, const Int& q, unsigned n);

}  // namespace zetatrace
