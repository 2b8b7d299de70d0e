#include "zetatrace/field.hpp"

#include <algorithm>
#include <sstream>

namespace zetatrace {

namespace detail {

PolyP pp_trim(PolyP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PolyP pp_mul(const PolyP& a, const PolyP& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    for (auto& c : r) c %= p;
    return pp_trim(std::move(r));
}

PolyP pp_mod(PolyP a, const PolyP& f, const Int& p) {
    // f is monic.
    a = pp_trim(std::move(a));
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const Int c = a.back() % p;
        const std::size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (std::size_t j = 0; j < df; ++j) {
                a[shift + j] = ((a[shift + j] - c * f[j]) % p + p) % p;
            }
        }
        a.pop_back();
        a = pp_trim(std::move(a));
    }
    for (auto& c : a) c = ((c % p) + p) % p;
    return pp_trim(std::move(a));
}

PolyP pp_sub(const PolyP& a, const PolyP& b, const Int& p) {
    PolyP r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = ((v % p) + p) % p;
    }
    return pp_trim(std::move(r));
}

namespace {

Int inv_mod_p(const Int& a, const Int& p) {
    return boost::multiprecision::powm(((a % p) + p) % p, p - 2, p);
}

PolyP pp_scale(PolyP a, const Int& s, const Int& p) {
    for (auto& c : a) c = (c * s) % p;
    return pp_trim(std::move(a));
}

}  // namespace

PolyP pp_gcd(PolyP a, PolyP b, const Int& p) {
    a = pp_trim(std::move(a));
    b = pp_trim(std::move(b));
    while (!b.empty()) {
        const PolyP bm = pp_scale(b, inv_mod_p(b.back(), p), p);
        PolyP r = pp_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = pp_scale(a, inv_mod_p(a.back(), p), p);
    return a;
}

PolyP pp_powmod(const PolyP& base, Int e, const PolyP& f, const Int& p) {
    PolyP result{Int(1)};
    PolyP b = pp_mod(base, f, p);
    while (e > 0) {
        if ((e & 1) != 0) result = pp_mod(pp_mul(result, b, p), f, p);
        b = pp_mod(pp_mul(b, b, p), f, p);
        e >>= 1;
    }
    return result;
}

bool pp_is_irreducible(const PolyP& f, const Int& p, unsigned k) {
    // Rabin's test: x^(p^k) = x mod f, and gcd(x^(p^(k/l)) - x, f) = 1 for
    // every prime l dividing k.
    const PolyP x{Int(0), Int(1)};
    auto frob_iterate = [&](unsigned times) {
        PolyP h = x;
        for (unsigned i = 0; i < times; ++i) h = pp_powmod(h, p, f, p);
        return h;
    };
    if (!pp_sub(frob_iterate(k), x, p).empty()) return false;
    std::vector<unsigned> prime_divisors;
    unsigned rem = k;
    for (unsigned l = 2; l * l <= rem; ++l) {
        if (rem % l == 0) {
            prime_divisors.push_back(l);
            while (rem % l == 0) rem /= l;
        }
    }
    if (rem > 1) prime_divisors.push_back(rem);
    for (unsigned l : prime_divisors) {
        PolyP g = pp_gcd(pp_sub(frob_iterate(k / l), x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

namespace {

void check_same_field(const FieldElement& x, const FieldElement& y) {
    if (x.field != y.field) {
        throw std::invalid_argument("field elements belong to different descriptors");
    }
}

std::vector<Int> reduce_coeffs(std::vector<Int> c, const FieldDescriptor& F) {
    c.resize(F.k, Int(0));
    for (auto& v : c) v = ((v % F.p) + F.p) % F.p;
    return c;
}

}  // namespace

FieldDescriptor ff_make(const Int& p, unsigned k) {
    if (k == 0) throw InvalidDegree("extension degree must be >= 1");
    if (!is_prime(p)) {
        std::ostringstream os;
        os << p << " is not prime";
        throw CompositeModulus(os.str());
    }
    FieldDescriptor F;
    F.p = p;
    F.k = k;
    if (k == 1) {
        F.modulus_poly = {Int(0), Int(1)};  // x - 0; elements are residues mod p
        return F;
    }
    // Scan monic degree-k candidates in increasing integer encoding of the
    // k low coefficients. A zero constant term means x divides f, so start
    // each block at 1 conceptually; the scan below just skips those fast.
    const Int limit = pow_int(p, k);
    for (Int v = 1; v < limit; ++v) {
        if (v % p == 0) continue;  // constant term 0 -> reducible
        detail::PolyP f(k + 1, Int(0));
        Int rest = v;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if (detail::pp_is_irreducible(f, p, k)) {
            F.modulus_poly = std::move(f);
            return F;
        }
    }
    // Unreachable: irreducible polynomials of every degree exist over GF(p).
    throw InvalidDegree("no irreducible modulus found (internal)");
}

FieldElement ff_zero(const FieldDescriptor& F) {
    return FieldElement{&F, std::vector<Int>(F.k, Int(0))};
}

FieldElement ff_one(const FieldDescriptor& F) {
    auto e = ff_zero(F);
    e.coeffs[0] = 1;
    return e;
}

FieldElement ff_from_int(const FieldDescriptor& F, const Int& c) {
    auto e = ff_zero(F);
    e.coeffs[0] = ((c % F.p) + F.p) % F.p;
    return e;
}

FieldElement ff_from_index(const FieldDescriptor& F, Int index) {
    auto e = ff_zero(F);
    for (unsigned i = 0; i < F.k && index > 0; ++i) {
        e.coeffs[i] = index % F.p;
        index /= F.p;
    }
    return e;
}

Int ff_index(const FieldElement& x) {
    Int idx = 0;
    for (std::size_t i = x.coeffs.size(); i-- > 0;) {
        idx = idx * x.field->p + x.coeffs[i];
    }
    return idx;
}

bool ff_is_zero(const FieldElement& x) {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](const Int& c) { return c == 0; });
}

bool ff_eq(const FieldElement& x, const FieldElement& y) {
    check_same_field(x, y);
    return x.coeffs == y.coeffs;
}

FieldElement ff_add(const FieldElement& x, const FieldElement& y) {
    check_same_field(x, y);
    const auto& F = *x.field;
    FieldElement r = ff_zero(F);
    for (unsigned i = 0; i < F.k; ++i) {
        r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % F.p;
    }
    return r;
}

FieldElement ff_neg(const FieldElement& x) {
    const auto& F = *x.field;
    FieldElement r = ff_zero(F);
    for (unsigned i = 0; i < F.k; ++i) {
        r.coeffs[i] = (F.p - x.coeffs[i]) % F.p;
    }
    return r;
}

FieldElement ff_sub(const FieldElement& x, const FieldElement& y) {
    return ff_add(x, ff_neg(y));
}

FieldElement ff_mul(const FieldElement& x, const FieldElement& y) {
    check_same_field(x, y);
    const auto& F = *x.field;
    auto prod = detail::pp_mod(detail::pp_mul(x.coeffs, y.coeffs, F.p), F.modulus_poly, F.p);
    FieldElement r = ff_zero(F);
    r.coeffs = reduce_coeffs(std::move(prod), F);
    return r;
}

FieldElement ff_pow(const FieldElement& x, Int e) {
    const auto& F = *x.field;
    if (e < 0) return ff_pow(ff_inv(x), -e);
    FieldElement result = ff_one(F);
    FieldElement base = x;
    while (e > 0) {
        if ((e & 1) != 0) result = ff_mul(result, base);
        base = ff_mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement ff_inv(const FieldElement& x) {
    if (ff_is_zero(x)) throw std::domain_error("ff_inv: zero has no inverse");
    return ff_pow(x, x.field->q() - 2);
}

FieldElement ff_frobenius(const FieldElement& x) {
    return ff_pow(x, x.field->p);
}

std::vector<FieldElement> ff_enumerate(const FieldDescriptor& F, std::uint64_t budget) {
    const Int q = F.q();
    if (q > budget) {
        std::ostringstream os;
        os << "enumerating GF(" << F.p << "^" << F.k << ") needs " << q
           << " elements, budget " << budget;
        throw EnumerationTooLarge(os.str(), "field_core");
    }
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(q));
    for (Int i = 0; i < q; ++i) out.push_back(ff_from_index(F, i));
    return out;
}

}  // namespace zetatrace
