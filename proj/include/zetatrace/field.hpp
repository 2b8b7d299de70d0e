#pragma once

#include "zetatrace/errors.hpp"
#include "zetatrace/numbers.hpp"

#include <cstdint>
#include <vector>

namespace zetatrace {

// GF(p^k) presented as GF(p)[x]/(modulus_poly). Construction is deterministic:
// the modulus is the first irreducible monic polynomial of degree k in
// increasing integer encoding sum c_i p^i (so GF(8) gets x^3+x+1, not
// x^3+x^2+1). For k=1 the modulus is x-0 and elements are plain residues.
struct FieldDescriptor {
    Int p;
    unsigned k = 1;
    std::vector<Int> modulus_poly;  // monic, size k+1, coefficients low-to-high

    Int q() const { return pow_int(p, k); }
};

// A field element is a length-k coefficient vector over GF(p), low-to-high.
// Elements hold a non-owning pointer to their descriptor; descriptors are
// immutable after construction and must outlive their elements.
struct FieldElement {
    const FieldDescriptor* field = nullptr;
    std::vector<Int> coeffs;
};

FieldDescriptor ff_make(const Int& p, unsigned k);

FieldElement ff_zero(const FieldDescriptor& F);
FieldElement ff_one(const FieldDescriptor& F);
FieldElement ff_from_int(const FieldDescriptor& F, const Int& c);

// Elements correspond to integers 0..q-1 via base-p digits (c_0 least
// significant); ff_enumerate yields them in that order.
FieldElement ff_from_index(const FieldDescriptor& F, Int index);
Int ff_index(const FieldElement& x);

bool ff_is_zero(const FieldElement& x);
bool ff_eq(const FieldElement& x, const FieldElement& y);

FieldElement ff_add(const FieldElement& x, const FieldElement& y);
FieldElement ff_sub(const FieldElement& x, const FieldElement& y);
FieldElement ff_neg(const FieldElement& x);
FieldElement ff_mul(const FieldElement& x, const FieldElement& y);
FieldElement ff_inv(const FieldElement& x);
FieldElement ff_pow(const FieldElement& x, Int e);

// x -> x^p, the field-level Frobenius map.
FieldElement ff_frobenius(const FieldElement& x);

std::vector<FieldElement> ff_enumerate(const FieldDescriptor& F,
                                       std::uint64_t budget = kDefaultBudget);

namespace detail {

// Polynomial helpers over GF(p), coefficients low-to-high with no trailing
// zeros. Shared by ff_make's irreducibility scan and the element arithmetic.
using PolyP = std::vector<Int>;

PolyP pp_trim(PolyP a);
PolyP pp_mul(const PolyP& a, const PolyP& b, const Int& p);
PolyP pp_mod(PolyP a, const PolyP& f, const Int& p);
PolyP pp_sub(const PolyP& a, const PolyP& b, const Int& p);
PolyP pp_gcd(PolyP a, PolyP b, const Int& p);
PolyP pp_powmod(const PolyP& base, Int e, const PolyP& f, const Int& p);
bool pp_is_irreducible(const PolyP& f, const Int& p, unsigned k);

}  // namespace detail

}  // namespace zetatrace
