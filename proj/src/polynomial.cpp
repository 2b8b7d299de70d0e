#include "zetatrace/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace zetatrace {

int p_deg(const Poly& a) {
    return static_cast<int>(a.size()) - 1;
}

Poly p_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly p_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return p_trim(std::move(r));
}

Poly p_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return p_trim(std::move(r));
}

Poly p_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return p_trim(std::move(r));
}

Poly p_scale(const Poly& a, const Rat& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

Rat p_eval(const Poly& a, const Rat& t) {
    Rat acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * t + a[i];
    return acc;
}

Rat p_coeff(const Poly& a, std::size_t i) {
    return i < a.size() ? a[i] : Rat(0);
}

bool p_eq(const Poly& a, const Poly& b) {
    return a == b;
}

std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("p_divmod: division by zero polynomial");
    Poly rem = a;
    Poly quot;
    const int db = p_deg(b);
    if (p_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rat(0));
    while (p_deg(rem) >= db) {
        const Rat c = rem.back() / b.back();
        const std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
        rem = p_trim(std::move(rem));
    }
    return {p_trim(std::move(quot)), std::move(rem)};
}

Poly p_gcd(Poly a, Poly b) {
    a = p_trim(std::move(a));
    b = p_trim(std::move(b));
    while (!b.empty()) {
        Poly r = p_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly p_negate_arg(const Poly& a) {
    Poly r = a;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

std::string p_to_string(const Poly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Rat c = a[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const bool unit = (c == 1) && i > 0;
        if (!unit) os << c;
        if (i == 1) os << (unit ? "" : "*") << var;
        if (i > 1) os << (unit ? "" : "*") << var << "^" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

RationalFunction rf_normalize(Poly numer, Poly denom) {
    numer = p_trim(std::move(numer));
    denom = p_trim(std::move(denom));
    if (denom.empty()) throw std::domain_error("rf_normalize: zero denominator");
    if (!numer.empty()) {
        const Poly g = p_gcd(numer, denom);
        if (p_deg(g) > 0) {
            numer = p_divmod(numer, g).first;
            denom = p_divmod(denom, g).first;
        }
    }
    if (denom.front() == 0) {
        throw std::domain_error("rf_normalize: denominator has zero constant term");
    }
    const Rat c = denom.front();
    for (auto& x : denom) x /= c;
    for (auto& x : numer) x /= c;
    return RationalFunction{std::move(numer), std::move(denom)};
}

bool rf_eq(const RationalFunction& a, const RationalFunction& b) {
    return p_eq(a.numer, b.numer) && p_eq(a.denom, b.denom);
}

}  // namespace zetatrace
