#include "ehall/param_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ehall {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Dense univariate polynomials over Z (coefficients low to high), used only
// inside the bivariate gcd.
using UPoly = std::vector<Int>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

UPoly uneg(UPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (uzero(a) || uzero(b)) return {};
    UPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

Int ucontent(const UPoly& a) {
    Int g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly udiv_int(UPoly a, const Int& d) {
    for (auto& c : a) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw std::domain_error("udiv_int: not divisible");
        c = q;
    }
    return a;
}

// Exact division in Z[x]; throws if not divisible.
UPoly udiv_exact(UPoly a, const UPoly& b) {
    if (uzero(b)) throw std::domain_error("udiv_exact: division by zero");
    if (uzero(a)) return {};
    if (a.size() < b.size()) throw std::domain_error("udiv_exact: not divisible");
    UPoly q(a.size() - b.size() + 1, Int(0));
    const Int& lb = b.back();
    for (size_t i = q.size(); i-- > 0;) {
        Int c = a[i + b.size() - 1];
        if (c == 0) continue;
        Int qi, r;
        mpz_tdiv_qr(qi.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw std::domain_error("udiv_exact: not divisible");
        q[i] = qi;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= qi * b[j];
    }
    utrim(a);
    if (!uzero(a)) throw std::domain_error("udiv_exact: nonzero remainder");
    return q;
}

UPoly uprim(const UPoly& a) {
    if (uzero(a)) return a;
    Int g = ucontent(a);
    UPoly r = udiv_int(a, g);
    if (r.back() < 0) r = uneg(std::move(r));
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b). Content is stripped after
// every elimination step; the result is only used up to units (gcd).
UPoly uprem(UPoly a, const UPoly& b) {
    const Int& lb = b.back();
    while (!uzero(a) && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Int la = a.back();
        for (auto& c : a) c *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        utrim(a);
        if (!uzero(a)) {
            Int g = ucontent(a);
            if (g > 1) a = udiv_int(std::move(a), g);
        }
    }
    return a;
}

UPoly usignfix(UPoly a) {
    if (!uzero(a) && a.back() < 0) return uneg(std::move(a));
    return a;
}

UPoly ugcd_prs(UPoly a, UPoly b) {
    Int ca = ucontent(a), cb = ucontent(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = uprim(a);
    b = uprim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!uzero(b)) {
        UPoly r = uprem(a, b);
        a = std::move(b);
        b = uprim(r);
    }
    for (auto& c : a) c *= cg;
    return a;
}

Int unorm(const UPoly& a) {
    Int m = 0;
    for (const auto& c : a) {
        Int v = abs(c);
        if (v > m) m = v;
    }
    return m;
}

Int ueval_int(const UPoly& a, const Int& xi) {
    Int v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * xi + a[i];
    return v;
}

// Balanced xi-adic digit expansion of an integer.
UPoly u_from_int(Int g, const Int& xi) {
    UPoly r;
    Int half = xi / 2;
    while (g != 0) {
        Int c = g % xi;
        if (c > half) c -= xi;
        if (c < -half) c += xi;
        r.push_back(c);
        g = (g - c) / xi;
    }
    utrim(r);
    return r;
}

bool udivides(const UPoly& g, const UPoly& a, UPoly* quot = nullptr) {
    try {
        UPoly q = udiv_exact(a, g);
        if (quot) *quot = std::move(q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Heuristic gcd (evaluate at a large integer, take the integer gcd,
// reconstruct, verify by exact division). Falls back to primitive PRS.
UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    if (uzero(a)) return usignfix(std::move(b));
    if (uzero(b)) return usignfix(std::move(a));
    Int ca = ucontent(a), cb = ucontent(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = uprim(a);
    b = uprim(b);
    Int na = unorm(a), nb = unorm(b);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 7; ++attempt) {
        Int g;
        mpz_gcd(g.get_mpz_t(), ueval_int(a, xi).get_mpz_t(), ueval_int(b, xi).get_mpz_t());
        UPoly cand = uprim(u_from_int(g, xi));
        if (!uzero(cand) && udivides(cand, a) && udivides(cand, b)) {
            for (auto& c : cand) c *= cg;
            return cand;
        }
        xi = xi * 73794 / 27011 + 37;
    }
    UPoly r = ugcd_prs(a, b);
    for (auto& c : r) c *= cg;
    return r;
}

// Dense bivariate polynomials: coefficient i (in q1^i) is a UPoly in q2.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && uzero(p.back())) p.pop_back();
}

bool bzero(const BPoly& p) { return p.empty(); }

UPoly bcontent(const BPoly& a) {
    UPoly g;
    for (const auto& c : a) g = ugcd(g, c);
    return g;
}

BPoly bdiv_u(const BPoly& a, const UPoly& d) {
    BPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(uzero(c) ? UPoly{} : udiv_exact(c, d));
    return r;
}

BPoly bprim(const BPoly& a) {
    if (bzero(a)) return a;
    BPoly r = bdiv_u(a, bcontent(a));
    if (r.back().back() < 0)
        for (auto& c : r) c = uneg(std::move(c));
    return r;
}

BPoly bmul_u(const BPoly& a, const UPoly& m) {
    BPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(umul(c, m));
    btrim(r);
    return r;
}

// Pseudo-remainder in q1 with UPoly coefficient arithmetic. As above, the
// intermediate is re-primitivized each step; gcd callers only need it up to
// UPoly units.
BPoly bprem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!bzero(a) && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        UPoly la = a.back();
        for (auto& c : a) c = umul(c, lb);
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = uadd(a[shift + j], uneg(umul(la, b[j])));
        btrim(a);
        if (!bzero(a)) {
            UPoly g = bcontent(a);
            if (!(g.size() == 1 && g[0] == 1)) a = bdiv_u(a, g);
        }
    }
    return a;
}

BPoly bsignfix(BPoly a) {
    if (!bzero(a) && a.back().back() < 0)
        for (auto& c : a) c = uneg(std::move(c));
    return a;
}

BPoly bgcd_prs(const BPoly& a0, const BPoly& b0) {
    BPoly a = a0, b = b0;
    UPoly cg = ugcd(bcontent(a), bcontent(b));
    a = bprim(a);
    b = bprim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!bzero(b)) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        b = bprim(r);
    }
    return bmul_u(a, cg);
}

Int bnorm_int(const BPoly& a) {
    Int m = 0;
    for (const auto& c : a) {
        Int v = unorm(c);
        if (v > m) m = v;
    }
    return m;
}

Int bcontent_int(const BPoly& a) {
    Int g = 0;
    for (const auto& c : a)
        for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

BPoly bdiv_int(BPoly a, const Int& d) {
    for (auto& c : a) c = udiv_int(std::move(c), d);
    return a;
}

// Evaluate q2 = xi; result is a univariate polynomial in q1.
UPoly beval_q2(const BPoly& a, const Int& xi) {
    UPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(ueval_int(c, xi));
    utrim(r);
    return r;
}

bool bdivides(const BPoly& g, const BPoly& a) {
    if (a.size() < g.size()) return false;
    try {
        BPoly rem = a;
        while (!bzero(rem)) {
            if (rem.size() < g.size()) return false;
            size_t shift = rem.size() - g.size();
            UPoly qc = udiv_exact(rem.back(), g.back());
            for (size_t j = 0; j < g.size(); ++j)
                rem[shift + j] = uadd(rem[shift + j], uneg(umul(qc, g[j])));
            btrim(rem);
        }
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Heuristic bivariate gcd: evaluate q2 at a large integer, recurse to the
// univariate heuristic, reconstruct the q2-digits, verify by division.
BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (bzero(a)) return bsignfix(std::move(b));
    if (bzero(b)) return bsignfix(std::move(a));
    Int ca = bcontent_int(a), cb = bcontent_int(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = bdiv_int(std::move(a), ca);
    b = bdiv_int(std::move(b), cb);
    Int na = bnorm_int(a), nb = bnorm_int(b);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 7; ++attempt) {
        UPoly gu = ugcd(beval_q2(a, xi), beval_q2(b, xi));
        BPoly cand;
        cand.reserve(gu.size());
        for (const auto& c : gu) cand.push_back(u_from_int(c, xi));
        btrim(cand);
        if (!bzero(cand)) {
            Int cc = bcontent_int(cand);
            if (cc > 1) cand = bdiv_int(std::move(cand), cc);
            cand = bsignfix(std::move(cand));
            if (bdivides(cand, a) && bdivides(cand, b)) {
                for (auto& c : cand)
                    for (auto& x : c) x *= cg;
                return cand;
            }
        }
        xi = xi * 73794 / 27011 + 37;
    }
    BPoly r = bgcd_prs(a, b);
    for (auto& c : r)
        for (auto& x : c) x *= cg;
    return r;
}

// Conversions: ParamLaurent with nonnegative exponents <-> BPoly.
BPoly to_bpoly(const ParamLaurent& p) {
    BPoly r;
    for (const auto& [e, c] : p.terms()) {
        size_t i = static_cast<size_t>(e.first), j = static_cast<size_t>(e.second);
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() <= j) r[i].resize(j + 1, Int(0));
        r[i][j] = c;
    }
    for (auto& c : r) utrim(c);
    btrim(r);
    return r;
}

ParamLaurent from_bpoly(const BPoly& p) {
    ParamLaurent r;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                r += ParamLaurent::monomial(p[i][j], static_cast<long>(i), static_cast<long>(j));
    return r;
}

} // namespace

ParamLaurent ParamLaurent::monomial(const Int& c, long a, long b) {
    ParamLaurent r;
    if (c != 0) r.terms_[{a, b}] = c;
    return r;
}

bool ParamLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QExp{0, 0} &&
           terms_.begin()->second == 1;
}

void ParamLaurent::insert(const QExp& e, const Int& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamLaurent ParamLaurent::operator-() const {
    ParamLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamLaurent& ParamLaurent::operator+=(const ParamLaurent& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

ParamLaurent& ParamLaurent::operator-=(const ParamLaurent& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

ParamLaurent operator*(const ParamLaurent& a, const ParamLaurent& b) {
    ParamLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

QExp ParamLaurent::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    long a = terms_.begin()->first.first, b = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        a = std::min(a, e.first);
        b = std::min(b, e.second);
    }
    return {a, b};
}

ParamLaurent ParamLaurent::shifted(long a, long b) const {
    ParamLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(QExp{e.first + a, e.second + b}, c);
    return r;
}

Int ParamLaurent::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ParamLaurent ParamLaurent::divided_by_int(const Int& d) const {
    ParamLaurent r;
    for (const auto& [e, c] : terms_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) throw std::domain_error("divided_by_int: not divisible");
        r.terms_.emplace(e, q);
    }
    return r;
}

Int ParamLaurent::coeff(long a, long b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Int(0) : it->second;
}

std::uint64_t ParamLaurent::eval_mod(std::uint64_t v1, std::uint64_t v2,
                                     std::uint64_t p) const {
    std::uint64_t i1 = 0, i2 = 0;
    auto [ma, mb] = min_exponents();
    if (ma < 0) i1 = powmod(v1, p - 2, p);
    if (mb < 0) i2 = powmod(v2, p - 2, p);
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms_) {
        Int cm = c % static_cast<unsigned long>(p);
        if (cm < 0) cm += static_cast<unsigned long>(p);
        std::uint64_t t = cm.get_ui();
        t = mulmod(t, e.first >= 0 ? powmod(v1, e.first, p) : powmod(i1, -e.first, p), p);
        t = mulmod(t, e.second >= 0 ? powmod(v2, e.second, p) : powmod(i2, -e.second, p), p);
        acc = (acc + t) % p;
    }
    return acc;
}

std::string ParamLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e.first != 0) os << "*q1^" << e.first;
        if (e.second != 0) os << "*q2^" << e.second;
    }
    return os.str();
}

ParamLaurent laurent_gcd(const ParamLaurent& a, const ParamLaurent& b) {
    if (a.is_zero() && b.is_zero()) return ParamLaurent(0);
    auto [aa, ab] = a.min_exponents();
    auto [ba, bb] = b.min_exponents();
    BPoly g = bgcd(to_bpoly(a.shifted(-aa, -ab)), to_bpoly(b.shifted(-ba, -bb)));
    return from_bpoly(g);
}

ParamLaurent laurent_exact_div(const ParamLaurent& a, const ParamLaurent& b) {
    if (b.is_zero()) throw std::domain_error("laurent_exact_div: division by zero");
    if (a.is_zero()) return ParamLaurent(0);
    auto [aa, ab] = a.min_exponents();
    auto [ba, bb] = b.min_exponents();
    BPoly pa = to_bpoly(a.shifted(-aa, -ab));
    BPoly pb = to_bpoly(b.shifted(-ba, -bb));
    // Long division in q1 with exact UPoly coefficient division.
    BPoly q(pa.size() >= pb.size() ? pa.size() - pb.size() + 1 : 0);
    while (!bzero(pa)) {
        if (pa.size() < pb.size()) throw std::domain_error("laurent_exact_div: not divisible");
        size_t shift = pa.size() - pb.size();
        UPoly qc = udiv_exact(pa.back(), pb.back());
        q[shift] = qc;
        for (size_t j = 0; j < pb.size(); ++j)
            pa[shift + j] = uadd(pa[shift + j], uneg(umul(qc, pb[j])));
        btrim(pa);
    }
    return from_bpoly(q).shifted(aa - ba, ab - bb);
}

} // namespace ehall
