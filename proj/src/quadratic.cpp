#include "zetatrace/quadratic.hpp"

#include <sstream>

namespace zetatrace {

QuadraticNumber qn(const Rat& a, const Rat& b, const Int& D) {
    if (b == 0 || D == 0) return {a, Rat(0), Int(1)};
    Int s;
    const Int d0 = squarefree_part(D < 0 ? Int(-D) : D, s);
    const Rat bs = b * Rat(s);
    if (D > 0 && d0 == 1) return {a + bs, Rat(0), Int(1)};
    return {a, bs, D < 0 ? Int(-d0) : d0};
}

QuadraticNumber qn(const Rat& a) { return {a, Rat(0), Int(1)}; }

QuadraticNumber qn_root(const Int& D) { return qn(Rat(0), Rat(1), D); }

namespace {

// Shared radicand of two canonical elements; rationals adopt the other side.
Int join_field(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    if (x.d != y.d)
        throw FieldMismatch("sqrt(" + x.d.str() + ") vs sqrt(" + y.d.str() + ")");
    return x.d;
}

}  // namespace

QuadraticNumber qn_add(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Int d = join_field(x, y);
    const Rat b = x.b + y.b;
    return b == 0 ? QuadraticNumber{x.a + y.a, Rat(0), Int(1)}
                  : QuadraticNumber{x.a + y.a, b, d};
}

QuadraticNumber qn_sub(const QuadraticNumber& x, const QuadraticNumber& y) {
    return qn_add(x, qn_neg(y));
}

QuadraticNumber qn_mul(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Int d = join_field(x, y);
    const Rat a = x.a * y.a + x.b * y.b * Rat(d);
    const Rat b = x.a * y.b + x.b * y.a;
    return b == 0 ? QuadraticNumber{a, Rat(0), Int(1)} : QuadraticNumber{a, b, d};
}

QuadraticNumber qn_neg(const QuadraticNumber& x) { return {-x.a, -x.b, x.d}; }

QuadraticNumber qn_conj(const QuadraticNumber& x) {
    return x.b == 0 ? x : QuadraticNumber{x.a, -x.b, x.d};
}

bool qn_eq(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a == y.a && x.b == y.b && x.d == y.d;
}

Rat qn_norm(const QuadraticNumber& x) { return x.a * x.a - x.b * x.b * Rat(x.d); }

Rat qn_trace(const QuadraticNumber& x) { return x.a + x.a; }

bool qn_is_algebraic_integer(const QuadraticNumber& x) {
    if (x.b == 0) return is_integer(x.a);
    return is_integer(qn_trace(x)) && is_integer(qn_norm(x));
}

std::string qn_to_string(const QuadraticNumber& x) {
    std::ostringstream out;
    if (x.b == 0) {
        out << x.a;
        return out.str();
    }
    if (x.a != 0) out << x.a;
    if (x.b > 0 && x.a != 0) out << "+";
    if (x.b == -1)
        out << "-";
    else if (x.b != 1)
        out << x.b << "*";
    out << "sqrt(" << x.d << ")";
    return out.str();
}

}  // namespace zetatrace
