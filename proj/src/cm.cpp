#include "zetatrace/cm.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zetatrace {

namespace {

const Int kHeegner[] = {1, 2, 3, 7, 11, 19, 43, 67, 163};

bool class_number_one(const Int& d) {
    for (const Int& h : kHeegner)
        if (d == h) return true;
    return false;
}

void require_cm_d(const Int& d) {
    if (!class_number_one(d))
        throw Error("cm_gross", "InvalidInput",
                    "d=" + d.str() + " is not a class-number-one discriminant parameter");
}

}  // namespace

bool iq_half_basis(const Int& d) { return d % 4 == 3; }

ImagQuadInteger iq(const Int& x, const Int& y, const Int& d) {
    if (d <= 0) throw Error("cm_gross", "InvalidInput", "d must be positive");
    Int s;
    if (squarefree_part(d, s) != d)
        throw Error("cm_gross", "InvalidInput", "d=" + d.str() + " is not squarefree");
    return ImagQuadInteger{x, y, d};
}

namespace {

void check_same_ring(const ImagQuadInteger& u, const ImagQuadInteger& v) {
    if (u.d != v.d)
        throw FieldMismatch("Q(sqrt(-" + u.d.str() + ")) vs Q(sqrt(-" + v.d.str() + "))",
                            "cm_gross");
}

}  // namespace

ImagQuadInteger iq_add(const ImagQuadInteger& u, const ImagQuadInteger& v) {
    check_same_ring(u, v);
    return {u.x + v.x, u.y + v.y, u.d};
}

ImagQuadInteger iq_sub(const ImagQuadInteger& u, const ImagQuadInteger& v) {
    check_same_ring(u, v);
    return {u.x - v.x, u.y - v.y, u.d};
}

ImagQuadInteger iq_neg(const ImagQuadInteger& u) { return {-u.x, -u.y, u.d}; }

ImagQuadInteger iq_mul(const ImagQuadInteger& u, const ImagQuadInteger& v) {
    check_same_ring(u, v);
    if (iq_half_basis(u.d)) {
        // delta^2 = delta - (1+d)/4
        const Int m = (1 + u.d) / 4;
        return {u.x * v.x - u.y * v.y * m, u.x * v.y + u.y * v.x + u.y * v.y, u.d};
    }
    return {u.x * v.x - u.y * v.y * u.d, u.x * v.y + u.y * v.x, u.d};
}

ImagQuadInteger iq_conj(const ImagQuadInteger& u) {
    if (iq_half_basis(u.d)) return {u.x + u.y, -u.y, u.d};
    return {u.x, -u.y, u.d};
}

bool iq_eq(const ImagQuadInteger& u, const ImagQuadInteger& v) {
    return u.x == v.x && u.y == v.y && u.d == v.d;
}

Int iq_norm(const ImagQuadInteger& u) {
    if (iq_half_basis(u.d)) return u.x * u.x + u.x * u.y + u.y * u.y * ((1 + u.d) / 4);
    return u.x * u.x + u.y * u.y * u.d;
}

Int iq_trace(const ImagQuadInteger& u) {
    if (iq_half_basis(u.d)) return 2 * u.x + u.y;
    return 2 * u.x;
}

std::string iq_to_string(const ImagQuadInteger& u) {
    // Display in the a + b*sqrt(-d) basis (exact halves when needed).
    const Rat ra = iq_half_basis(u.d) ? Rat(2 * u.x + u.y, 2) : Rat(u.x);
    const Rat rb = iq_half_basis(u.d) ? Rat(u.y, 2) : Rat(u.y);
    const std::string sym = u.d == 1 ? "i" : "sqrt(-" + u.d.str() + ")";
    std::ostringstream out;
    if (rb == 0) {
        out << ra.str();
        return out.str();
    }
    if (ra != 0) out << ra.str();
    if (rb > 0 && ra != 0) out << "+";
    if (rb == -1)
        out << "-";
    else if (rb != 1)
        out << rb.str() << "*";
    out << sym;
    return out.str();
}

namespace {

Int json_int(const nlohmann::json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw ParseError(what + " must be an integer", "cm_gross");
    return Int(v.get<long long>());
}

}  // namespace

std::vector<CMCurve> parse_cm_curves(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
        throw ParseError("expected {\"curves\": [...]}", "cm_gross");
    std::vector<CMCurve> out;
    for (const auto& c : doc["curves"]) {
        if (!c.is_object() || !c.contains("label") || !c["label"].is_string() ||
            !c.contains("d") || !c.contains("a4") || !c.contains("a6") ||
            !c.contains("primes") || !c["primes"].is_array())
            throw ParseError("curve entry needs label, d, a4, a6, primes", "cm_gross");
        CMCurve curve;
        curve.label = c["label"].get<std::string>();
        curve.d = json_int(c["d"], "d");
        curve.a4 = json_int(c["a4"], "a4");
        curve.a6 = json_int(c["a6"], "a6");
        if (!class_number_one(curve.d))
            throw ParseError("d=" + curve.d.str() + " is not class-number one", "cm_gross");
        for (const auto& p : c["primes"]) curve.primes.push_back(json_int(p, "prime"));
        out.push_back(std::move(curve));
    }
    return out;
}

std::vector<CMCurve> parse_cm_curves_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, "cm_gross");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what(), "cm_gross");
    }
    return parse_cm_curves(doc);
}

std::vector<ImagQuadInteger> split_prime(const Int& p, const Int& d) {
    require_cm_d(d);
    if (!is_prime(p))
        throw Error("cm_gross", "InvalidInput", "p=" + p.str() + " is not prime");
    std::vector<ImagQuadInteger> out;
    const bool half = iq_half_basis(d);
    const Int ybound = half ? isqrt_floor(4 * p / d) : isqrt_floor(p / d);
    const Int xbound = half ? isqrt_floor(4 * p) + 1 : isqrt_floor(p);
    for (Int y = -ybound; y <= ybound; ++y)
        for (Int x = -xbound; x <= xbound; ++x) {
            const ImagQuadInteger cand{x, y, d};
            if (iq_norm(cand) == p) out.push_back(cand);
        }
    if (out.empty())
        throw InertPrime("p=" + p.str() + " is inert in Q(sqrt(-" + d.str() + "))");
    std::sort(out.begin(), out.end(), [](const ImagQuadInteger& a, const ImagQuadInteger& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

ImagQuadInteger gross_char(const CMCurve& curve, const Int& p, const Int& n1) {
    const std::vector<ImagQuadInteger> orbit = split_prime(p, curve.d);
    const Int a = 1 + p - n1;
    for (const auto& cand : orbit)
        if (iq_trace(cand) == a && cand.y >= 0) return cand;
    throw NormalizationFailure("no norm-" + p.str() + " element has trace a=" + a.str() +
                               " (n1=" + n1.str() + ", d=" + curve.d.str() + ")");
}

Int predict_count(const ImagQuadInteger& psi, const Int& q) {
    if (iq_norm(psi) != q)
        throw NormMismatch("N(psi)=" + iq_norm(psi).str() + " but q=" + q.str());
    return 1 + q - iq_trace(psi);
}

FrobeniusData cm_frobenius_bridge(const ImagQuadInteger& psi, const Int& q) {
    if (iq_norm(psi) != q)
        throw NormMismatch("N(psi)=" + iq_norm(psi).str() + " but q=" + q.str());
    const CMFrobenius cmf = frobenius_cm(iq_trace(psi), q);
    return make_frobenius_data({qn(Rat(1)), cmf.omega, qn(Rat(Int(-q)))}, q, 1);
}

Variety cm_weierstrass_variety(const CMCurve& curve, const Int& p) {
    if (!is_prime(p))
        throw Error("cm_gross", "InvalidInput", "p=" + p.str() + " is not prime");
    const Int disc = -16 * (4 * curve.a4 * curve.a4 * curve.a4 + 27 * curve.a6 * curve.a6);
    if (disc % p == 0)
        throw Error("cm_gross", "InvalidInput",
                    curve.label + " has bad reduction at p=" + p.str());
    const auto mod_p = [&](const Int& c) { return Int(((c % p) + p) % p); };
    Variety V;
    V.p = p;
    V.num_vars = 3;
    V.dim_hint = 1;
    V.betti_hint = {1, 2, 1};
    Variety::Polynomial f;
    f.push_back({{0, 2, 1}, Int(1)});           // y^2 z
    f.push_back({{3, 0, 0}, mod_p(Int(-1))});   // -x^3
    if (mod_p(curve.a4) != 0) f.push_back({{1, 0, 2}, mod_p(-curve.a4)});
    if (mod_p(curve.a6) != 0) f.push_back({{0, 0, 3}, mod_p(-curve.a6)});
    V.polys.push_back(std::move(f));
    return V;
}

}  // namespace zetatrace
