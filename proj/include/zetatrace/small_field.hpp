#pragma once

#include "zetatrace/field.hpp"

#include <cstdint>
#include <vector>

namespace zetatrace::detail {

// Discrete-log presentation of GF(q) for q up to 2^24: elements are the
// integers 0..q-1 (base-p digit encoding of their coefficient vectors), and
// multiplication/addition happen in the exponent domain via log/exp/Zech
// tables. log(0) is the sentinel -1 throughout; zech[n] = log(1 + g^n), with
// -1 where 1 + g^n = 0.
//
// This is the enumeration workhorse: evaluating a monomial at a point costs a
// few table reads instead of polynomial arithmetic.
class SmallField {
public:
    static constexpr std::uint64_t kMaxQ = 1u << 24;

    explicit SmallField(const FieldDescriptor& F);

    std::uint32_t p() const { return p_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t qm1() const { return qm1_; }

    // Exponent of a nonzero element index, or -1 for zero.
    std::int32_t log(std::uint32_t index) const { return logt_[index]; }
    // Element index of g^e, e in [0, 2*(q-1)) so a single add needs no mod.
    std::uint32_t exp(std::uint32_t e) const { return expt_[e]; }
    std::int32_t zech(std::uint32_t n) const { return zecht_[n]; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;  // digit-wise
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    // log-domain sum: arguments and result are logs with -1 meaning zero.
    std::int32_t log_add(std::int32_t la, std::int32_t lb) const;

    // Index of the image of an integer constant (embedding of GF(p)).
    std::uint32_t embed_int(const Int& c) const;

private:
    std::uint32_t p_ = 0, k_ = 0, q_ = 0, qm1_ = 0;
    std::vector<std::uint32_t> expt_;
    std::vector<std::int32_t> logt_;
    std::vector<std::int32_t> zecht_;

    std::uint32_t index_mul_poly(std::uint32_t a, std::uint32_t b,
                                 const std::vector<std::uint32_t>& modulus) const;
};

}  // namespace zetatrace::detail
