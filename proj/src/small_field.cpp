#include "zetatrace/small_field.hpp"

#include <sstream>

namespace zetatrace::detail {

namespace {

std::vector<std::uint32_t> factor_u32(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    for (std::uint32_t f = 2; static_cast<std::uint64_t>(f) * f <= n; ++f) {
        if (n % f == 0) {
            primes.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace

std::uint32_t SmallField::add(std::uint32_t a, std::uint32_t b) const {
    // Digit-wise addition mod p in the base-p index encoding.
    std::uint32_t result = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        result += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return result;
}

std::uint32_t SmallField::neg(std::uint32_t a) const {
    std::uint32_t result = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t da = a % p_;
        result += (da == 0 ? 0 : p_ - da) * place;
        place *= p_;
        a /= p_;
    }
    return result;
}

std::uint32_t SmallField::index_mul_poly(std::uint32_t a, std::uint32_t b,
                                         const std::vector<std::uint32_t>& modulus) const {
    // Schoolbook product of digit vectors, then reduction by the monic
    // modulus. Only used while building the tables.
    std::vector<std::uint64_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    std::uint32_t ta = a, tb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        da[i] = ta % p_;
        ta /= p_;
        db[i] = tb % p_;
        tb /= p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += da[i] * db[j];
    }
    for (auto& c : prod) c %= p_;
    for (std::uint32_t d = 2 * k_ - 2; d >= k_ && d < prod.size(); --d) {
        const std::uint64_t c = prod[d] % p_;
        if (c != 0) {
            for (std::uint32_t j = 0; j < k_; ++j) {
                // x^k = -(f_0 + ... + f_{k-1} x^{k-1})
                const std::uint64_t sub = c * modulus[j] % p_;
                prod[d - k_ + j] = (prod[d - k_ + j] + p_ - sub) % p_;
            }
        }
        prod[d] = 0;
    }
    std::uint32_t result = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        result += static_cast<std::uint32_t>(prod[i] % p_) * place;
        place *= p_;
    }
    return result;
}

std::uint32_t SmallField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return expt_[static_cast<std::uint32_t>(logt_[a]) + static_cast<std::uint32_t>(logt_[b])];
}

std::int32_t SmallField::log_add(std::int32_t la, std::int32_t lb) const {
    if (la < 0) return lb;
    if (lb < 0) return la;
    std::int32_t d = lb - la;
    if (d < 0) d += static_cast<std::int32_t>(qm1_);
    const std::int32_t z = zecht_[static_cast<std::uint32_t>(d)];
    if (z < 0) return -1;
    std::int32_t r = la + z;
    if (r >= static_cast<std::int32_t>(qm1_)) r -= static_cast<std::int32_t>(qm1_);
    return r;
}

std::uint32_t SmallField::embed_int(const Int& c) const {
    return static_cast<std::uint32_t>(((c % p_) + p_) % p_);
}

SmallField::SmallField(const FieldDescriptor& F) {
    const Int q_big = F.q();
    if (q_big > kMaxQ) {
        std::ostringstream os;
        os << "field of size " << q_big << " exceeds the table limit " << kMaxQ;
        throw std::length_error(os.str());
    }
    p_ = static_cast<std::uint32_t>(F.p);
    k_ = F.k;
    q_ = static_cast<std::uint32_t>(q_big);
    qm1_ = q_ - 1;

    std::vector<std::uint32_t> modulus(k_);
    for (std::uint32_t i = 0; i < k_; ++i) modulus[i] = static_cast<std::uint32_t>(F.modulus_poly[i]);

    // Find a generator of the multiplicative group: the first index whose
    // order divides no proper qm1/l.
    const auto prime_divisors = factor_u32(qm1_);
    auto pow_index = [&](std::uint32_t base, std::uint32_t e) {
        std::uint32_t result = 1, b = base;
        while (e) {
            if (e & 1u) result = index_mul_poly(result, b, modulus);
            b = index_mul_poly(b, b, modulus);
            e >>= 1u;
        }
        return result;
    };
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (std::uint32_t l : prime_divisors) {
            if (pow_index(cand, qm1_ / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }

    expt_.assign(2 * qm1_, 0);
    logt_.assign(q_, -1);
    expt_[0] = 1;
    logt_[1] = 0;
    for (std::uint32_t i = 1; i < qm1_; ++i) {
        expt_[i] = index_mul_poly(expt_[i - 1], g, modulus);
        logt_[expt_[i]] = static_cast<std::int32_t>(i);
    }
    for (std::uint32_t i = 0; i < qm1_; ++i) expt_[qm1_ + i] = expt_[i];

    // zech[n] = log(1 + g^n); adding 1 only touches the low digit.
    zecht_.assign(qm1_, -1);
    for (std::uint32_t n = 0; n < qm1_; ++n) {
        const std::uint32_t e = expt_[n];
        const std::uint32_t d0 = e % p_;
        const std::uint32_t plus_one = e - d0 + (d0 + 1) % p_;
        zecht_[n] = (plus_one == 0) ? -1 : logt_[plus_one];
    }
}

}  // namespace zetatrace::detail
