#include "zetatrace/numbers.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace zetatrace {

Int pow_int(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1u;
    }
    return r;
}

bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    // These twelve bases decide primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return miller_rabin_u64(static_cast<std::uint64_t>(n));
    }
    if (n % 2 == 0) return false;
    for (Int f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative input");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

Int squarefree_part(const Int& n, Int& square_root) {
    if (n <= 0) throw std::domain_error("squarefree_part: input must be positive");
    Int d = n;
    square_root = 1;
    for (Int f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            square_root *= f;
        }
    }
    return d;
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

}  // namespace zetatrace
