#include "ehall/scalar.hpp"

namespace ehall {

Scalar::Scalar(ParamLaurent n, ParamLaurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = ParamLaurent(1);
        return;
    }
    // Strip the denominator's monomial shift into the numerator.
    auto [a, b] = den_.min_exponents();
    if (a != 0 || b != 0) {
        den_ = den_.shifted(-a, -b);
        num_ = num_.shifted(-a, -b);
    }
    if (den_.terms().size() == 1) {
        // constant denominator after the shift: reduce the integer content only
        Int d = den_.coeff(0, 0);
        Int g, n = num_.content();
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g > 1) {
            num_ = num_.divided_by_int(g);
            den_ = den_.divided_by_int(g);
        }
    } else if (!den_.is_one()) {
        ParamLaurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = laurent_exact_div(num_, g);
            den_ = laurent_exact_div(den_, g);
        }
        auto [da, db] = den_.min_exponents();
        if (da != 0 || db != 0) {
            // gcd stripped a shift the denominator shared with the numerator.
            den_ = den_.shifted(-da, -db);
            num_ = num_.shifted(-da, -db);
        }
    } else {
        Int c = num_.content();
        // nothing to reduce against an integral denominator of 1
        (void)c;
    }
    // canonical sign: first stored term of the denominator is positive
    if (den_.terms().begin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (a.is_zero()) return Scalar();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(den_, num_);
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_.terms() != o.num_.terms()) return num_.terms() < o.num_.terms();
    return den_.terms() < o.den_.terms();
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

} // namespace ehall
