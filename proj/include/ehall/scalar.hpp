#ifndef EHALL_SCALAR_HPP
#define EHALL_SCALAR_HPP

#include "ehall/param_laurent.hpp"

namespace ehall {

/// Rational function in q1, q2: num/den with gcd(num, den) = 1, den a true
/// polynomial with nonzero, positive constant term (monomial shifts live in num).
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : num_(n) {}
    Scalar(const Int& n) : num_(n) {}
    explicit Scalar(ParamLaurent n) : num_(std::move(n)) {}
    Scalar(ParamLaurent n, ParamLaurent d);

    static Scalar q1(long e = 1) { return Scalar(ParamLaurent::q1(e)); }
    static Scalar q2(long e = 1) { return Scalar(ParamLaurent::q2(e)); }
    /// q3 = (q1*q2)^-1 as a Laurent monomial.
    static Scalar q3(long e = 1) { return Scalar(ParamLaurent::monomial(1, -e, -e)); }
    static Scalar frac(long n, long d) { return Scalar(ParamLaurent(n), ParamLaurent(d)); }

    const ParamLaurent& num() const { return num_; }
    const ParamLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    /// Canonical text: "num" or "num/den", ParamLaurent::str on both sides.
    std::string str() const;

private:
    ParamLaurent num_;
    ParamLaurent den_ = ParamLaurent(1);
    void normalize();
};

} // namespace ehall

#endif
