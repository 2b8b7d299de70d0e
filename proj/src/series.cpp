#include "zetatrace/series.hpp"

namespace zetatrace {

TruncatedSeries ts_from_counts(const std::vector<std::uint64_t>& counts) {
    TruncatedSeries f;
    f.coeffs.assign(counts.size() + 1, Rat(0));
    for (std::size_t r = 1; r <= counts.size(); ++r)
        f.coeffs[r] = Rat(Int(counts[r - 1]), Int(r));
    return f;
}

TruncatedSeries ps_exp(const TruncatedSeries& f) {
    if (f.coeffs.empty() || f.coeffs[0] != 0)
        throw NotExponentiable("constant term must vanish");
    const std::size_t R = f.coeffs.size() - 1;
    TruncatedSeries g;
    g.coeffs.assign(R + 1, Rat(0));
    g.coeffs[0] = 1;
    // g' = f' g termwise: n g_n = sum_{j=1}^{n} j f_j g_{n-j}.
    for (std::size_t n = 1; n <= R; ++n) {
        Rat s(0);
        for (std::size_t j = 1; j <= n; ++j)
            s += Rat(Int(j)) * f.coeffs[j] * g.coeffs[n - j];
        g.coeffs[n] = s / Rat(Int(n));
    }
    return g;
}

TruncatedSeries ps_log(const TruncatedSeries& f) {
    if (f.coeffs.empty() || f.coeffs[0] != 1)
        throw NotLoggable("constant term must be 1");
    const std::size_t R = f.coeffs.size() - 1;
    TruncatedSeries g;
    g.coeffs.assign(R + 1, Rat(0));
    // g' f = f' termwise: n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}.
    for (std::size_t n = 1; n <= R; ++n) {
        Rat s = Rat(Int(n)) * f.coeffs[n];
        for (std::size_t k = 1; k < n; ++k)
            s -= Rat(Int(k)) * g.coeffs[k] * f.coeffs[n - k];
        g.coeffs[n] = s / Rat(Int(n));
    }
    return g;
}

TruncatedSeries ts_expand(const RationalFunction& rf, unsigned R) {
    if (p_coeff(rf.denom, 0) == 0)
        throw std::domain_error("denominator vanishes at 0");
    const Rat d0 = p_coeff(rf.denom, 0);
    TruncatedSeries g;
    g.coeffs.assign(R + 1, Rat(0));
    for (unsigned r = 0; r <= R; ++r) {
        Rat s = p_coeff(rf.numer, r);
        const unsigned jmax = std::min<unsigned>(r, static_cast<unsigned>(
                                                        rf.denom.size() > 1 ? rf.denom.size() - 1 : 0));
        for (unsigned j = 1; j <= jmax; ++j)
            s -= rf.denom[j] * g.coeffs[r - j];
        g.coeffs[r] = s / d0;
    }
    return g;
}

namespace {

// One solution of the square-ish system M x = rhs over the rationals, or
// false when inconsistent.  Free columns are pinned to zero.
bool solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs, std::vector<Rat>& x) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows == 0 ? 0 : M[0].size();
    x.assign(cols, Rat(0));
    std::vector<std::size_t> pivot_col(rows, cols);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && M[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[rank]);
        std::swap(rhs[pr], rhs[rank]);
        const Rat inv = Rat(1) / M[rank][c];
        for (std::size_t j = c; j < cols; ++j) M[rank][j] *= inv;
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const Rat f = M[r][c];
            for (std::size_t j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (rhs[r] != 0) return false;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
    return true;
}

}  // namespace

RationalFunction rational_reconstruct(const TruncatedSeries& f, unsigned max_num_deg,
                                      unsigned max_den_deg) {
    const unsigned R = f.order();
    if (R < max_num_deg + max_den_deg + 1)
        throw InsufficientTerms("need order >= " + std::to_string(max_num_deg + max_den_deg + 1) +
                                ", have " + std::to_string(R));
    const auto c = [&](long r) { return r < 0 ? Rat(0) : f.coeffs[static_cast<std::size_t>(r)]; };
    for (unsigned d = 0; d <= max_den_deg; ++d) {
        // With b_0 = 1, rows r = max_num_deg+1 .. max_num_deg+d force the
        // numerator coefficients beyond its degree bound to vanish:
        //   sum_{j=1}^{d} b_j c_{r-j} = -c_r.
        std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
        std::vector<Rat> rhs(d, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            const long r = static_cast<long>(max_num_deg) + 1 + static_cast<long>(i);
            for (unsigned j = 1; j <= d; ++j) M[i][j - 1] = c(r - static_cast<long>(j));
            rhs[i] = -c(r);
        }
        std::vector<Rat> b;
        if (!solve_linear(std::move(M), std::move(rhs), b)) continue;
        Poly denom(d + 1, Rat(0));
        denom[0] = 1;
        for (unsigned j = 1; j <= d; ++j) denom[j] = b[j - 1];
        denom = p_trim(std::move(denom));
        Poly numer(max_num_deg + 1, Rat(0));
        for (unsigned r = 0; r <= max_num_deg; ++r) {
            Rat s = c(r);
            for (unsigned j = 1; j <= std::min(r, d); ++j) s += b[j - 1] * c(static_cast<long>(r) - j);
            numer[r] = s;
        }
        numer = p_trim(std::move(numer));
        const RationalFunction rf{numer, denom};
        // A candidate counts only if it reproduces the entire segment.
        const TruncatedSeries back = ts_expand(rf, R);
        bool ok = true;
        for (unsigned r = 0; r <= R && ok; ++r) ok = back.coeffs[r] == f.coeffs[r];
        if (ok) return rf_normalize(numer, denom);
    }
    throw NotRational("no fraction of degree (" + std::to_string(max_num_deg) + "," +
                      std::to_string(max_den_deg) + ") matches the segment");
}

}  // namespace zetatrace
