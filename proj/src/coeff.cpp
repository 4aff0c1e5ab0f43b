#include "ehall/coeff.hpp"

namespace ehall {

Scalar elem_sym(int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("elem_sym: k out of [0,3]");
    const Scalar q1 = Scalar::q1(), q2 = Scalar::q2(), q3 = Scalar::q3();
    switch (k) {
        case 0: return Scalar(1);
        case 1: return q1 + q2 + q3;
        case 2: return q1 * q2 + q1 * q3 + q2 * q3;
        default: return q1 * q2 * q3; // = 1
    }
}

Scalar alpha(int k) {
    if (k < 1) throw std::invalid_argument("alpha: k must be >= 1");
    Scalar s;
    const Scalar qs[3] = {Scalar::q1(k), Scalar::q2(k), Scalar::q3(k)};
    for (const auto& q : qs) s += q - q.inverse();
    return s / Scalar(k);
}

void ZWPoly::add(int ze, int we, const Scalar& c) {
    auto key = std::make_pair(ze, we);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Scalar ZWPoly::coeff(int ze, int we) const {
    auto it = terms.find({ze, we});
    return it == terms.end() ? Scalar() : it->second;
}

ZWPoly kernel_chi(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("kernel_chi: eps must be +-1");
    // prod (z - q_i^eps w) = sum_j (-1)^j e_j^(eps) z^(3-j) w^j,
    // e_j^(+1) = e_j, e_j^(-1) = e_{3-j} (since e_3 = 1).
    ZWPoly chi;
    for (int j = 0; j <= 3; ++j) {
        Scalar e = elem_sym(eps == 1 ? j : 3 - j);
        if (j % 2 == 1) e = -e;
        chi.add(3 - j, j, e);
    }
    return chi;
}

FFElem specialize(const Scalar& s, const EvalAssign& a) {
    if (a.p == 0 || a.q1 % a.p == 0 || a.q2 % a.p == 0)
        throw std::invalid_argument("specialize: invalid assignment");
    std::uint64_t d = s.den().eval_mod(a.q1, a.q2, a.p);
    if (d == 0) throw bad_point_error("specialize: denominator vanishes");
    std::uint64_t n = s.num().eval_mod(a.q1, a.q2, a.p);
    return {ff_mul(n, ff_inv(d, a.p), a.p), a.p};
}

EvalAssign draw_param_point(std::uint64_t p, std::mt19937_64& rng, int max_order) {
    std::uniform_int_distribution<std::uint64_t> dist(2, p - 2);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::uint64_t v1 = dist(rng), v2 = dist(rng);
        std::uint64_t q3 = ff_inv(ff_mul(v1, v2, p), p);
        std::uint64_t qs[3] = {v1, v2, q3};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            std::uint64_t acc = 1;
            for (int k = 1; k <= max_order && ok; ++k) {
                acc = ff_mul(acc, qs[i], p);
                if (acc == 1) ok = false;
            }
        }
        if (ok && (v1 == v2 || v1 == q3 || v2 == q3)) ok = false;
        if (ok) return EvalAssign{p, v1, v2, {}};
    }
    throw bad_point_error("draw_param_point: could not find a generic point");
}

} // namespace ehall
