#ifndef EHALL_PARAM_LAURENT_HPP
#define EHALL_PARAM_LAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace ehall {

using Int = mpz_class;

/// Exponent pair (a, b) of a monomial q1^a * q2^b.
using QExp = std::pair<long, long>;

/// Sparse Laurent polynomial in the parameters q1, q2 over Z.
/// Invariant: no zero coefficients are stored.
class ParamLaurent {
public:
    using TermMap = std::map<QExp, Int>;

    ParamLaurent() = default;
    ParamLaurent(long n) { if (n != 0) terms_[{0, 0}] = n; }
    ParamLaurent(const Int& n) { if (n != 0) terms_[{0, 0}] = n; }

    static ParamLaurent monomial(const Int& c, long a, long b);
    static ParamLaurent q1(long e = 1) { return monomial(1, e, 0); }
    static ParamLaurent q2(long e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    ParamLaurent operator-() const;
    ParamLaurent& operator+=(const ParamLaurent& o);
    ParamLaurent& operator-=(const ParamLaurent& o);
    friend ParamLaurent operator+(ParamLaurent a, const ParamLaurent& b) { return a += b; }
    friend ParamLaurent operator-(ParamLaurent a, const ParamLaurent& b) { return a -= b; }
    friend ParamLaurent operator*(const ParamLaurent& a, const ParamLaurent& b);
    ParamLaurent& operator*=(const ParamLaurent& o) { return *this = *this * o; }

    bool operator==(const ParamLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamLaurent& o) const { return !(*this == o); }

    /// Componentwise minimum of exponents over all terms; (0,0) for the zero polynomial.
    QExp min_exponents() const;
    /// Multiply by q1^a q2^b.
    ParamLaurent shifted(long a, long b) const;

    /// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
    Int content() const;
    ParamLaurent divided_by_int(const Int& d) const;

    /// Coefficient of q1^a q2^b.
    Int coeff(long a, long b) const;

    /// Evaluate at q1 = v1, q2 = v2 mod p. v1, v2 must be invertible when
    /// negative exponents occur.
    std::uint64_t eval_mod(std::uint64_t v1, std::uint64_t v2, std::uint64_t p) const;

    /// Canonical text: sorted monomials "c*q1^a*q2^b" joined by " + " ("0" when zero).
    std::string str() const;

private:
    TermMap terms_;
    void insert(const QExp& e, const Int& c);
    friend ParamLaurent laurent_gcd(const ParamLaurent&, const ParamLaurent&);
    friend ParamLaurent laurent_exact_div(const ParamLaurent&, const ParamLaurent&);
};

/// gcd of the underlying polynomials (Laurent shifts stripped first);
/// result is a true polynomial with positive content-normalized sign.
ParamLaurent laurent_gcd(const ParamLaurent& a, const ParamLaurent& b);

/// Exact division; throws std::domain_error if b does not divide a.
ParamLaurent laurent_exact_div(const ParamLaurent& a, const ParamLaurent& b);

} // namespace ehall

#endif
