#ifndef EHALL_FF_HPP
#define EHALL_FF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ehall {

/// Retryable error: an evaluation point hit a vanishing denominator or a
/// degenerate parameter specialization. Distinct from argument errors.
struct bad_point_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t ff_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t ff_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = ff_mul(r, a, p);
        a = ff_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t ff_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw bad_point_error("ff_inv: zero");
    return ff_pow(a, p - 2, p);
}

inline std::uint64_t ff_neg(std::uint64_t a, std::uint64_t p) {
    return a % p == 0 ? 0 : p - a % p;
}

inline std::uint64_t ff_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + b) % p;
}

inline std::uint64_t ff_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a + p - b % p) % p;
}

/// Integer-power with possibly negative exponent.
inline std::uint64_t ff_pow_signed(std::uint64_t a, long e, std::uint64_t p) {
    if (e >= 0) return ff_pow(a, static_cast<std::uint64_t>(e), p);
    return ff_pow(ff_inv(a, p), static_cast<std::uint64_t>(-e), p);
}

/// An element of F_p carrying its modulus.
struct FFElem {
    std::uint64_t value = 0;
    std::uint64_t p = 0;

    FFElem() = default;
    FFElem(std::uint64_t v, std::uint64_t prime) : value(v % prime), p(prime) {}

    friend FFElem operator+(FFElem a, FFElem b) { return {ff_add(a.value, b.value, a.p), a.p}; }
    friend FFElem operator-(FFElem a, FFElem b) { return {ff_sub(a.value, b.value, a.p), a.p}; }
    friend FFElem operator*(FFElem a, FFElem b) { return {ff_mul(a.value, b.value, a.p), a.p}; }
    FFElem inv() const { return {ff_inv(value, p), p}; }
    bool operator==(const FFElem& o) const { return value == o.value && p == o.p; }
};

/// Modular assignment of the parameters (and optionally oracle variables).
struct EvalAssign {
    std::uint64_t p = 0;
    std::uint64_t q1 = 0;
    std::uint64_t q2 = 0;
    std::vector<std::uint64_t> xs; // optional x_1..x_n values

    std::uint64_t x(size_t i) const {
        if (i >= xs.size()) throw std::invalid_argument("EvalAssign: missing x value");
        return xs[i];
    }
};

/// Default 31-bit primes used by reports and the CLI.
inline constexpr std::uint64_t kDefaultPrimes[3] = {2147483647ULL, 2147483629ULL,
                                                    2147483587ULL};

} // namespace ehall

#endif
