#include "ehall/symrat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ehall {

XLaurent XLaurent::constant(int n_vars, Scalar c) {
    XLaurent r(n_vars);
    if (!c.is_zero()) r.terms_.emplace(Exps(n_vars, 0), std::move(c));
    return r;
}

XLaurent XLaurent::monomial(int n_vars, Exps e, Scalar c) {
    if (static_cast<int>(e.size()) != n_vars)
        throw std::invalid_argument("XLaurent::monomial: exponent arity mismatch");
    XLaurent r(n_vars);
    if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
    return r;
}

XLaurent XLaurent::power(int n_vars, int i, int e) {
    Exps exps(n_vars, 0);
    exps.at(i) = e;
    return monomial(n_vars, std::move(exps), Scalar(1));
}

void XLaurent::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

XLaurent XLaurent::operator-() const {
    XLaurent r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XLaurent& XLaurent::operator+=(const XLaurent& o) {
    if (n_ != o.n_) throw std::invalid_argument("XLaurent: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

XLaurent& XLaurent::operator-=(const XLaurent& o) {
    if (n_ != o.n_) throw std::invalid_argument("XLaurent: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("XLaurent: arity mismatch");
    XLaurent r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            XLaurent::Exps e(ea);
            for (int i = 0; i < a.n_; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

XLaurent operator*(const Scalar& c, const XLaurent& a) {
    XLaurent r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
    return r;
}

XLaurent XLaurent::permuted(const std::vector<int>& perm) const {
    XLaurent r(n_);
    for (const auto& [e, c] : terms_) {
        Exps pe(n_, 0);
        for (int i = 0; i < n_; ++i) pe[perm.at(i)] = e[i];
        r.terms_.emplace(std::move(pe), c);
    }
    return r;
}

XLaurent XLaurent::embedded(int new_n, const std::vector<int>& map) const {
    XLaurent r(new_n);
    for (const auto& [e, c] : terms_) {
        Exps ne(new_n, 0);
        for (int i = 0; i < n_; ++i) ne.at(map.at(i)) = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

bool XLaurent::is_symmetric() const {
    // adjacent transpositions generate S_n
    for (int i = 0; i + 1 < n_; ++i) {
        std::vector<int> perm(n_);
        for (int j = 0; j < n_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (!(permuted(perm) == *this)) return false;
    }
    return true;
}

bool XLaurent::divide_by_diff(int i, int j, XLaurent* q) const {
    if (is_zero()) {
        *q = XLaurent(n_);
        return true;
    }
    // collect as a polynomial in x_i with XLaurent coefficients
    std::map<int, XLaurent> by_deg;
    for (const auto& [e, c] : terms_) {
        Exps rest(e);
        int deg = rest[i];
        rest[i] = 0;
        auto it = by_deg.find(deg);
        if (it == by_deg.end()) it = by_deg.emplace(deg, XLaurent(n_)).first;
        it->second.add_term(rest, c);
    }
    int lo = by_deg.begin()->first, hi = by_deg.rbegin()->first;
    if (lo == hi) return false; // single x_i-degree: x_i - x_j cannot divide
    auto coeff_at = [&](int d) -> XLaurent {
        auto it = by_deg.find(d);
        return it == by_deg.end() ? XLaurent(n_) : it->second;
    };
    XLaurent xj = XLaurent::power(n_, j, 1);
    // synthetic division by the monic linear factor (x_i - x_j)
    std::map<int, XLaurent> quo;
    XLaurent carry = coeff_at(hi);
    for (int d = hi - 1; d >= lo; --d) {
        quo.emplace(d, carry);
        carry = coeff_at(d) + xj * carry;
    }
    if (!carry.is_zero()) return false;
    XLaurent r(n_);
    for (const auto& [d, part] : quo)
        for (const auto& [e, c] : part.terms()) {
            Exps ne(e);
            ne[i] += d;
            r.add_term(ne, c);
        }
    *q = std::move(r);
    return true;
}

XLaurent XLaurent::times_diff(int i, int j) const {
    return *this * (XLaurent::power(n_, i, 1) - XLaurent::power(n_, j, 1));
}

std::uint64_t XLaurent::eval(const EvalAssign& a) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = specialize(c, a).value;
        for (int i = 0; i < n_; ++i)
            if (e[i]) t = ff_mul(t, ff_pow_signed(a.x(i), e[i], a.p), a.p);
        acc = ff_add(acc, t, a.p);
    }
    return acc;
}

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (int i = 0; i < n_; ++i)
            if (e[i]) out << "*x" << (i + 1) << "^" << e[i];
    }
    return out.str();
}

XLaurent vandermonde(int n_vars) {
    XLaurent v = XLaurent::constant(n_vars, Scalar(1));
    for (int i = 0; i < n_vars; ++i)
        for (int j = i + 1; j < n_vars; ++j) v = v.times_diff(i, j);
    return v;
}

SymRat::SymRat(int n_vars, XLaurent num, int denom_exp)
    : n_(n_vars), num_(std::move(num)), d_(denom_exp) {
    if (num_.n_vars() != n_) throw std::invalid_argument("SymRat: arity mismatch");
    if (d_ < 0) throw std::invalid_argument("SymRat: negative denominator exponent");
    normalize();
}

SymRat SymRat::x_power(int d) {
    return SymRat(1, XLaurent::power(1, 0, d), 0);
}

void SymRat::normalize() {
    if (num_.is_zero()) {
        d_ = 0;
        return;
    }
    if (n_ < 2) {
        d_ = 0;
        return;
    }
    while (d_ > 0) {
        XLaurent cur = num_;
        bool ok = true;
        for (int i = 0; i < n_ && ok; ++i)
            for (int j = i + 1; j < n_ && ok; ++j) {
                XLaurent q(n_);
                ok = cur.divide_by_diff(i, j, &q);
                if (ok) cur = std::move(q);
            }
        if (!ok) break;
        num_ = std::move(cur);
        --d_;
    }
}

SymRat SymRat::operator-() const {
    SymRat r(*this);
    r.num_ = -r.num_;
    return r;
}

SymRat operator+(const SymRat& a, const SymRat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("SymRat: arity mismatch");
    int e = std::max(a.d_, b.d_);
    XLaurent num = a.num_, bn = b.num_;
    for (int k = a.d_; k < e; ++k) num = num * vandermonde(a.n_);
    for (int k = b.d_; k < e; ++k) bn = bn * vandermonde(a.n_);
    return SymRat(a.n_, num + bn, e);
}

SymRat operator-(const SymRat& a, const SymRat& b) { return a + (-b); }

SymRat operator*(const Scalar& c, const SymRat& a) {
    return SymRat(a.n_, c * a.num_, a.d_);
}

SymRat SymRat::times_poly(const XLaurent& p) const {
    return SymRat(n_, num_ * p, d_);
}

bool SymRat::operator==(const SymRat& o) const {
    if (n_ != o.n_) return false;
    return (*this - o).is_zero();
}

bool SymRat::is_symmetric() const {
    // the Vandermonde is alternating: num must flip sign under transpositions
    // when d_ is odd, stay fixed when even
    for (int i = 0; i + 1 < n_; ++i) {
        std::vector<int> perm(n_);
        for (int j = 0; j < n_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        XLaurent p = num_.permuted(perm);
        if (d_ % 2) p = -p;
        if (!(p == num_)) return false;
    }
    return true;
}

int SymRat::max_pole_order() const {
    if (num_.is_zero()) return 0;
    int worst = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            XLaurent cur = num_;
            int mult = 0;
            while (mult < d_) {
                XLaurent q(n_);
                if (!cur.divide_by_diff(i, j, &q)) break;
                cur = std::move(q);
                ++mult;
            }
            worst = std::max(worst, d_ - mult);
        }
    return worst;
}

std::uint64_t SymRat::eval(const EvalAssign& a) const {
    std::uint64_t den = 1;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            std::uint64_t diff = ff_sub(a.x(i), a.x(j), a.p);
            if (!diff) throw bad_point_error("SymRat::eval: coincident variables");
            den = ff_mul(den, diff, a.p);
        }
    return ff_mul(num_.eval(a), ff_pow_signed(den, -d_, a.p), a.p);
}

std::string SymRat::str() const {
    if (d_ == 0) return num_.str();
    std::ostringstream out;
    out << "[" << num_.str() << "] / V^" << d_;
    return out.str();
}

} // namespace ehall
