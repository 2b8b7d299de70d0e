#include "zetatrace/trace_cohomology.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace zetatrace {

namespace {

Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int ilcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int l = a / igcd(a, b) * b;
    return l < 0 ? Int(-l) : l;
}

// g = s*a + t*b with g >= 0.
Int egcd(Int a, Int b, Int& s, Int& t) {
    Int old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (b != 0) {
        const Int quot = a / b;
        Int tmp = a - quot * b;
        a = b;
        b = tmp;
        tmp = old_s - quot * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - quot * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (a < 0) {
        a = -a;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return a;
}

// Sublattice of Z^2 in row-echelon shape: rows (p1, p2) and (0, g2).
struct Lattice2 {
    Int p1 = 0, p2 = 0, g2 = 0;

    void add(const Int& x, const Int& y) {
        if (x == 0) {
            g2 = igcd(g2, y);
            return;
        }
        if (p1 == 0) {
            p1 = x;
            p2 = y;
            if (p1 < 0) {
                p1 = -p1;
                p2 = -p2;
            }
            return;
        }
        Int s, t;
        const Int g = egcd(p1, x, s, t);
        const Int elim = (p1 / g) * y - (x / g) * p2;
        p2 = s * p2 + t * y;
        p1 = g;
        g2 = igcd(g2, elim);
    }

    bool contains(Int u, Int v) const {
        if (p1 == 0) {
            if (u != 0) return false;
        } else {
            if (u % p1 != 0) return false;
            v -= (u / p1) * p2;
        }
        if (g2 == 0) return v == 0;
        return v % g2 == 0;
    }
};

Int denom_of(const Rat& r) { return boost::multiprecision::denominator(r); }

Int scaled_int(const Rat& r, const Int& L) {
    return boost::multiprecision::numerator(r) * (L / denom_of(r));
}

// Radicand shared by x and the generators; FieldMismatch when two genuinely
// irrational values disagree.
Int common_radicand(const QuadraticNumber& x, const std::vector<QuadraticNumber>& gens) {
    Int d = x.b == 0 ? Int(1) : x.d;
    for (const auto& g : gens) {
        if (g.b == 0) continue;
        if (d == 1)
            d = g.d;
        else if (d != g.d)
            throw FieldMismatch("sqrt(" + d.str() + ") vs sqrt(" + g.d.str() + ")");
    }
    return d;
}

}  // namespace

bool in_z_span(const QuadraticNumber& x, const std::vector<QuadraticNumber>& gens) {
    common_radicand(x, gens);  // reject mixed fields up front
    Int L = ilcm(denom_of(x.a), denom_of(x.b));
    for (const auto& g : gens) L = ilcm(L, ilcm(denom_of(g.a), denom_of(g.b)));
    Lattice2 lat;
    for (const auto& g : gens) lat.add(scaled_int(g.a, L), scaled_int(g.b, L));
    return lat.contains(scaled_int(x.a, L), scaled_int(x.b, L));
}

TraceModule make_trace_module(std::vector<QuadraticNumber> gens, unsigned degree_index) {
    if (gens.empty() || !qn_eq(gens.front(), qn(Rat(1))))
        throw Error("trace_cohomology", "InvalidModule", "first generator must be 1");
    common_radicand(gens.front(), gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<QuadraticNumber> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (in_z_span(gens[i], rest))
            throw RankDeficient("generator " + qn_to_string(gens[i]) +
                                " lies in the Z-span of the others");
    }
    return TraceModule{std::move(gens), degree_index};
}

TraceModule curve_h1(unsigned g, const std::vector<QuadraticNumber>& thetas) {
    if (g == 0 || thetas.size() != 2 * static_cast<std::size_t>(g) - 1)
        throw Error("trace_cohomology", "InvalidModule",
                    "genus " + std::to_string(g) + " needs " + std::to_string(2 * g - 1) +
                        " generators besides 1, got " + std::to_string(thetas.size()));
    std::vector<QuadraticNumber> gens{qn(Rat(1))};
    gens.insert(gens.end(), thetas.begin(), thetas.end());
    return make_trace_module(std::move(gens), 1);
}

bool is_endomorphism(const QuadraticNumber& omega, const TraceModule& M) {
    const Int d = common_radicand(qn(Rat(1)), M.gens);
    if (omega.b != 0 && omega.d != d)
        throw FieldMismatch("endomorphism sqrt(" + omega.d.str() + ") vs module sqrt(" +
                            d.str() + ")");
    for (const auto& g : M.gens)
        if (!in_z_span(qn_mul(omega, g), M.gens)) return false;
    return true;
}

Int endo_trace(const QuadraticNumber& omega) {
    if (!qn_is_algebraic_integer(omega))
        throw NotAlgebraicInteger(qn_to_string(omega));
    const Rat tr = omega.b == 0 ? omega.a : qn_trace(omega);
    return boost::multiprecision::numerator(tr);
}

FrobeniusData make_frobenius_data(std::vector<QuadraticNumber> omegas, const Int& q, unsigned n) {
    if (omegas.size() != 2 * static_cast<std::size_t>(n) + 1)
        throw Error("trace_cohomology", "InvalidFrobeniusData",
                    "need 2n+1 endomorphisms, got " + std::to_string(omegas.size()));
    if (!qn_eq(omegas.front(), qn(Rat(1))))
        throw Error("trace_cohomology", "InvalidFrobeniusData", "omega_0 must be 1");
    const Int top = -pow_int(q, n);
    if (!qn_eq(omegas.back(), qn(Rat(top))))
        throw Error("trace_cohomology", "InvalidFrobeniusData",
                    "omega_2n must be -q^n = " + top.str());
    return FrobeniusData{std::move(omegas), q, n};
}

CMFrobenius frobenius_cm(const Int& a_p, const Int& q) {
    const Int D = a_p * a_p + 4 * q;
    const QuadraticNumber omega = qn(Rat(a_p, 2), Rat(1, 2), D);
    const QuadraticNumber lambda2 = qn_sub(qn(Rat(a_p)), omega);
    return CMFrobenius{omega, omega, lambda2};
}

namespace {

Int interior_alternating_sum(const FrobeniusData& fd) {
    Int s = 0;
    for (std::size_t i = 1; i + 1 < fd.omegas.size(); ++i) {
        const Int tr = endo_trace(fd.omegas[i]);
        s += (i % 2 == 1) ? Int(-tr) : tr;
    }
    return s;
}

}  // namespace

Int point_count_formula(const FrobeniusData& fd) {
    return 1 + pow_int(fd.q, fd.n) + interior_alternating_sum(fd);
}

Int lefschetz_number(const FrobeniusData& fd) {
    return 1 - pow_int(fd.q, fd.n) + interior_alternating_sum(fd);
}

namespace {

// Fraction-free (Bareiss) determinant; exact over Z.
Int bareiss_det(std::vector<std::vector<Int>> M) {
    const std::size_t n = M.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t sr = k + 1;
            while (sr < n && M[sr][k] == 0) ++sr;
            if (sr == n) return 0;
            std::swap(M[k], M[sr]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace

int block_sign(const std::vector<std::vector<Int>>& A) {
    const std::size_t g = A.size();
    if (g == 0) throw InvalidMatrix("empty matrix");
    for (const auto& row : A)
        if (row.size() != g) throw InvalidMatrix("matrix not square");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (A[i][j] != A[j][i]) throw InvalidMatrix("matrix not symmetric");
    // Sylvester: every leading principal minor positive.
    for (std::size_t k = 1; k <= g; ++k) {
        std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = A[i][j];
        if (bareiss_det(std::move(lead)) <= 0)
            throw InvalidMatrix("matrix not positive definite (leading minor " +
                                std::to_string(k) + ")");
    }
    std::vector<std::vector<Int>> M(2 * g, std::vector<Int>(2 * g, Int(0)));
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) M[i][j] = A[i][j];
        M[i][g + i] = 1;
        M[g + i][i] = 1;
    }
    const Int det = bareiss_det(std::move(M));
    if (det == 0) throw InvalidMatrix("block matrix unexpectedly singular");
    return det > 0 ? 1 : -1;
}

}  // namespace zetatrace
