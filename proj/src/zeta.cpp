#include "zetatrace/zeta.hpp"

#include <map>
#include <numeric>

namespace zetatrace {

namespace {

bool is_zero_poly(const Poly& p) { return p.empty(); }

// Exact division by a monic-at-0 linear factor; FactorizationMismatch if the
// remainder is nonzero.
Poly divide_out(const Poly& num, const Poly& factor, const std::string& what) {
    auto [quot, rem] = p_divmod(num, factor);
    if (!is_zero_poly(rem))
        throw FactorizationMismatch("denominator not divisible by " + what);
    return quot;
}

}  // namespace

FactoredZeta zeta_from_counts(const CountSeries& cs, const std::vector<unsigned>& betti,
                              unsigned n) {
    if (n == 0 || betti.size() != 2 * static_cast<std::size_t>(n) + 1)
        throw Error("zeta_engine", "InvalidInput",
                    "need betti b_0..b_2n for dimension n >= 1");
    const unsigned sum_b = std::accumulate(betti.begin(), betti.end(), 0u);
    if (cs.R() < sum_b + 2)
        throw InsufficientTerms("reconstruction needs R >= " + std::to_string(sum_b + 2) +
                                    " counts (sum of betti + 2 held out), have " +
                                    std::to_string(cs.R()),
                                "zeta_engine");
    unsigned num_deg = 0, den_deg = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) (i % 2 ? num_deg : den_deg) += betti[i];
    return zeta_from_counts(cs, num_deg, den_deg, n);
}

FactoredZeta zeta_from_counts(const CountSeries& cs, unsigned num_deg, unsigned den_deg,
                              unsigned n) {
    if (n == 0)
        throw Error("zeta_engine", "InvalidInput", "dimension n must be >= 1");
    const RationalFunction rf =
        rational_reconstruct(ps_exp(ts_from_counts(cs.counts)), num_deg, den_deg);

    const Int qn_top = pow_int(cs.q, n);
    Poly rest = divide_out(rf.denom, Poly{Rat(1), Rat(-1)}, "1-t");
    rest = divide_out(rest, Poly{Rat(1), Rat(Int(-qn_top))}, "1-q^n*t");

    FactoredZeta fz;
    fz.q = cs.q;
    fz.n = n;
    fz.kind = ZetaKind::standard;
    fz.factors.assign(2 * static_cast<std::size_t>(n) + 1, Poly{Rat(1)});
    fz.factors.front() = Poly{Rat(1), Rat(-1)};
    fz.factors.back() = Poly{Rat(1), Rat(Int(-qn_top))};
    fz.factors[1] = rf.numer;
    if (n == 1) {
        if (!p_eq(rest, Poly{Rat(1)}))
            throw FactorizationMismatch("curve denominator has extra factor " +
                                        p_to_string(rest));
    } else {
        fz.factors[2] = rest;
    }
    return fz;
}

namespace {

// prod_j (1 - lambda_j t) with rational result, multiplying within each
// quadratic field first so conjugate-closed lists of mixed radicands still
// land in Q[t].
Poly rational_char_poly(const std::vector<QuadraticNumber>& lambdas) {
    std::map<Int, std::vector<QuadraticNumber>> groups;
    for (const auto& l : lambdas) groups[l.b == 0 ? Int(1) : l.d].push_back(l);
    Poly result{Rat(1)};
    for (const auto& [d, group] : groups) {
        std::vector<QuadraticNumber> c{qn(Rat(1))};
        for (const auto& l : group) {
            c.push_back(qn(Rat(0)));
            for (std::size_t k = c.size() - 1; k >= 1; --k)
                c[k] = qn_sub(c[k], qn_mul(l, c[k - 1]));
        }
        Poly part;
        part.reserve(c.size());
        for (const auto& coef : c) {
            if (coef.b != 0)
                throw IrrationalCharPoly("eigenvalues over sqrt(" + d.str() +
                                         ") are not conjugate-closed: coefficient " +
                                         qn_to_string(coef));
            part.push_back(coef.a);
        }
        result = p_mul(result, p_trim(std::move(part)));
    }
    return result;
}

}  // namespace

FactoredZeta lefschetz_zeta(const std::vector<std::vector<QuadraticNumber>>& eigs,
                            const Int& q, unsigned n) {
    if (n == 0 || eigs.size() != 2 * static_cast<std::size_t>(n) + 1)
        throw Error("zeta_engine", "InvalidInput",
                    "need eigenvalue lists for degrees 0..2n, n >= 1");
    if (eigs.front().size() != 1 || !qn_eq(eigs.front()[0], qn(Rat(1))))
        throw Error("zeta_engine", "InvalidInput", "eigs[0] must be [1]");
    const Int top = -pow_int(q, n);
    if (eigs.back().size() != 1 || !qn_eq(eigs.back()[0], qn(Rat(top))))
        throw Error("zeta_engine", "InvalidInput", "eigs[2n] must be [-q^n]");
    FactoredZeta fz;
    fz.q = q;
    fz.n = n;
    fz.kind = ZetaKind::lefschetz;
    fz.factors.reserve(eigs.size());
    for (const auto& list : eigs) fz.factors.push_back(rational_char_poly(list));
    return fz;
}

RationalFunction zeta_to_rational(const FactoredZeta& fz) {
    Poly numer{Rat(1)}, denom{Rat(1)};
    for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        if (i % 2)
            numer = p_mul(numer, fz.factors[i]);
        else
            denom = p_mul(denom, fz.factors[i]);
    }
    return rf_normalize(std::move(numer), std::move(denom));
}

TruncatedSeries zeta_expand(const FactoredZeta& fz, unsigned R) {
    return ts_expand(zeta_to_rational(fz), R);
}

nlohmann::ordered_json zeta_to_json(const FactoredZeta& fz) {
    nlohmann::ordered_json j;
    j["q"] = fz.q.str();
    j["n"] = fz.n;
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : fz.factors) {
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        if (f.empty()) coeffs.push_back("0");
        for (const auto& c : f) coeffs.push_back(c.str());
        j["factors"].push_back(coeffs);
    }
    j["kind"] = fz.kind == ZetaKind::standard ? "standard" : "lefschetz";
    return j;
}

}  // namespace zetatrace
