#include "ehall/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ehall/coeff.hpp"

namespace ehall {

namespace {

// Cross-kernel numerator chi_{-1}(x_i, x_j) = prod_k (x_i - q_k^-1 x_j)
//   = x_i^3 - e2 x_i^2 x_j + e1 x_i x_j^2 - x_j^3.
// The left factor of a shuffle product is paired through chi_{-1}, i.e.
// w(left, right) = chi_1(right, left)/(right - left)^3: with chi_1 in this
// slot the quadratic relation family does not vanish in the model.
XLaurent chi_cross(int n, int i, int j) {
    XLaurent r(n);
    XLaurent::Exps e(n, 0);
    e[i] = 3;
    r.add_term(e, Scalar(1));
    e[i] = 2;
    e[j] = 1;
    r.add_term(e, -elem_sym(2));
    e[i] = 1;
    e[j] = 2;
    r.add_term(e, elem_sym(1));
    e[i] = 0;
    e[j] = 3;
    r.add_term(e, Scalar(-1));
    return r;
}

void enumerate_subsets(int n, int k, int start, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, i + 1, cur, emit);
        cur.pop_back();
    }
}

std::uint64_t pow3_diff(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t d = ff_sub(a, b, p);
    return ff_mul(d, ff_mul(d, d, p), p);
}

// w(a, b) = chi_{-1}(a, b) / (a - b)^3, numerically (a = left-factor variable)
std::uint64_t omega_eval(std::uint64_t a, std::uint64_t b, std::uint64_t q1,
                         std::uint64_t q2, std::uint64_t p) {
    std::uint64_t q1i = ff_inv(q1, p), q2i = ff_inv(q2, p);
    std::uint64_t q3i = ff_mul(q1, q2, p);
    std::uint64_t chi = ff_mul(ff_sub(a, ff_mul(q1i, b, p), p),
                               ff_mul(ff_sub(a, ff_mul(q2i, b, p), p),
                                      ff_sub(a, ff_mul(q3i, b, p), p), p),
                               p);
    std::uint64_t d = pow3_diff(a, b, p);
    if (!d) throw bad_point_error("omega_eval: coincident variables");
    return ff_mul(chi, ff_inv(d, p), p);
}

// h_k at a concrete assignment; phis = specialized series coefficients 0..k
std::uint64_t h_eval(int k, const std::vector<std::uint64_t>& xs,
                     const std::vector<std::uint64_t>& phis, std::uint64_t p) {
    // DP over variables: H[j] = coefficient of z^-j so far
    std::vector<std::uint64_t> H(k + 1, 0);
    H[0] = 1;
    for (std::uint64_t x : xs) {
        std::vector<std::uint64_t> nxt(k + 1, 0);
        std::uint64_t xpow = 1;
        for (int t = 0; t <= k; ++t) {
            std::uint64_t f = ff_mul(phis[t], xpow, p);
            if (f)
                for (int j = t; j <= k; ++j)
                    nxt[j] = ff_add(nxt[j], ff_mul(H[j - t], f, p), p);
            xpow = ff_mul(xpow, x, p);
        }
        H = std::move(nxt);
    }
    return H[k];
}

std::uint64_t fresh_x(std::mt19937_64& rng, std::uint64_t p,
                      const std::vector<std::uint64_t>& taken) {
    std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
    for (;;) {
        std::uint64_t v = d(rng);
        if (std::find(taken.begin(), taken.end(), v) == taken.end()) return v;
    }
}

EvalAssign fresh_point(std::uint64_t p, std::mt19937_64& rng, int n_vars) {
    EvalAssign a = draw_param_point(p, rng);
    for (int i = 0; i < n_vars; ++i) a.xs.push_back(fresh_x(rng, p, a.xs));
    return a;
}

std::uint64_t eval_image_rec(const std::vector<Generator>& letters, std::size_t idx,
                             const SymRat& probe, std::vector<std::uint64_t> xs,
                             const EvalAssign& base,
                             const std::vector<std::uint64_t>& phis) {
    std::uint64_t p = base.p;
    if (idx == letters.size()) {
        EvalAssign sub{p, base.q1, base.q2, std::move(xs)};
        return probe.eval(sub);
    }
    const Generator& g = letters[idx];
    if (g.level == 0) {
        int k = g.index;
        std::uint64_t h = h_eval(k, xs, phis, p);
        if (!h) return 0;
        return ff_mul(h, eval_image_rec(letters, idx + 1, probe, std::move(xs), base, phis),
                      p);
    }
    // u[1,d]: sum over which variable the new letter occupies
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::uint64_t f = ff_pow_signed(xs[i], g.index, p);
        for (std::size_t t = 0; t < xs.size(); ++t)
            if (t != i) f = ff_mul(f, omega_eval(xs[i], xs[t], base.q1, base.q2, p), p);
        if (!f) continue;
        std::vector<std::uint64_t> rest;
        rest.reserve(xs.size() - 1);
        for (std::size_t t = 0; t < xs.size(); ++t)
            if (t != i) rest.push_back(xs[t]);
        acc = ff_add(acc,
                     ff_mul(f, eval_image_rec(letters, idx + 1, probe, std::move(rest),
                                              base, phis),
                            p),
                     p);
    }
    return acc;
}

int max_theta_index(const AlgElem& x) {
    int k = 0;
    for (const auto& [w, c] : x.terms())
        for (const Generator& g : w.letters)
            if (g.level == 0) k = std::max(k, g.index);
    return k;
}

} // namespace

EvalPointSet draw_point_set(std::uint64_t prime, std::uint64_t seed, int n_vars,
                            int count) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL ^ prime);
    EvalPointSet s;
    s.prime = prime;
    s.seed = seed;
    for (int i = 0; i < count; ++i) s.points.push_back(fresh_point(prime, rng, n_vars));
    return s;
}

SymRat shuffle_mul(const SymRat& F, const SymRat& G) {
    int n = F.n_vars(), m = G.n_vars(), N = n + m;
    if (N > 3)
        throw std::invalid_argument("shuffle_mul: exact mode limited to 3 variables");
    int e_out = std::max({F.denom_exp(), G.denom_exp(), n > 0 && m > 0 ? 3 : 0});

    XLaurent total(N);
    std::vector<int> cur;
    enumerate_subsets(N, n, 0, cur, [&](const std::vector<int>& S) {
        std::vector<bool> in_s(N, false);
        for (int i : S) in_s[i] = true;
        std::vector<int> T;
        for (int i = 0; i < N; ++i)
            if (!in_s[i]) T.push_back(i);

        XLaurent term = F.num().embedded(N, S) * G.num().embedded(N, T);
        int sign = 1;
        auto pad = [&](const std::vector<int>& block, int have) {
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b)
                    for (int k = have; k < e_out; ++k)
                        term = term.times_diff(block[a], block[b]);
        };
        pad(S, F.denom_exp());
        pad(T, G.denom_exp());
        for (int s : S)
            for (int t : T) {
                term = term * chi_cross(N, s, t);
                if (s > t) sign = -sign;
                int a = std::min(s, t), b = std::max(s, t);
                for (int k = 3; k < e_out; ++k) term = term.times_diff(a, b);
            }
        if (sign < 0) term = -term;
        total += term;
    });
    return SymRat(N, std::move(total), e_out);
}

SymRat can_map(const AlgElem& x) {
    if (x.is_zero()) throw std::invalid_argument("can_map: zero element has no arity");
    SymRat acc(Scalar(0));
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        SymRat img = SymRat::one();
        for (const Generator& g : w.letters) {
            if (g.level != 1)
                throw std::invalid_argument("can_map: level-0 letter present");
            img = shuffle_mul(img, SymRat::x_power(g.index));
        }
        img = c * img;
        acc = first ? img : acc + img;
        first = false;
    }
    return acc;
}

std::vector<Scalar> phi_coeffs(int k) {
    // (1 - e2 t + e1 t^2 - t^3) / (1 - e1 t + e2 t^2 - t^3) as a power series
    Scalar e1 = elem_sym(1), e2 = elem_sym(2);
    std::vector<Scalar> num{Scalar(1), -e2, e1, Scalar(-1)};
    std::vector<Scalar> den{Scalar(1), -e1, e2, Scalar(-1)};
    std::vector<Scalar> c(k + 1);
    for (int j = 0; j <= k; ++j) {
        Scalar v = j < 4 ? num[j] : Scalar(0);
        for (int i = 1; i <= std::min(j, 3); ++i) v -= den[i] * c[j - i];
        c[j] = v;
    }
    return c;
}

XLaurent h_poly(int k, int n_vars) {
    std::vector<Scalar> phi = phi_coeffs(k);
    XLaurent h(n_vars);
    XLaurent::Exps e(n_vars, 0);
    // compositions of k into n_vars nonnegative parts
    std::function<void(int, int, Scalar)> rec = [&](int pos, int rem, Scalar coeff) {
        if (pos == n_vars) {
            if (rem == 0) h.add_term(e, coeff);
            return;
        }
        for (int t = 0; t <= rem; ++t) {
            e[pos] = t;
            rec(pos + 1, rem - t, coeff * phi[t]);
        }
        e[pos] = 0;
    };
    rec(0, k, Scalar(1));
    return h;
}

SymRat theta_op(int k, const SymRat& F) {
    if (k < 0) throw std::invalid_argument("theta_op: negative index");
    if (k == 0) return F;
    static std::map<std::pair<int, int>, XLaurent> cache;
    auto key = std::make_pair(k, F.n_vars());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, h_poly(k, F.n_vars())).first;
    return F.times_poly(it->second);
}

SymRat apply_word(const Word& word, const SymRat& probe) {
    SymRat cur = probe;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        if (it->level == 0)
            cur = theta_op(it->index, cur);
        else
            cur = shuffle_mul(SymRat::x_power(it->index), cur);
    }
    return cur;
}

std::uint64_t eval_word_image(const Word& word, const SymRat& probe,
                              const EvalAssign& a) {
    int n_u = 0, kmax = 0;
    for (const Generator& g : word.letters) {
        if (g.level == 1)
            ++n_u;
        else
            kmax = std::max(kmax, g.index);
    }
    std::size_t n_tot = static_cast<std::size_t>(probe.n_vars() + n_u);
    if (a.xs.size() < n_tot)
        throw std::invalid_argument("eval_word_image: not enough x values");
    std::vector<std::uint64_t> phis;
    for (const Scalar& c : phi_coeffs(kmax)) phis.push_back(specialize(c, a).value);
    std::vector<std::uint64_t> xs(a.xs.begin(), a.xs.begin() + n_tot);
    return eval_image_rec(word.letters, 0, probe, std::move(xs), a, phis);
}

std::uint64_t eval_elem_image(const AlgElem& x, const SymRat& probe,
                              const EvalAssign& a) {
    std::uint64_t acc = 0;
    for (const auto& [w, c] : x.terms())
        acc = ff_add(acc, ff_mul(specialize(c, a).value, eval_word_image(w, probe, a), a.p),
                     a.p);
    return acc;
}

bool rep_check_relator(const Relator& rel, int test_level, const EvalPointSet& pts) {
    if (test_level < 0 || test_level > 2)
        throw std::invalid_argument("rep_check_relator: test_level out of range");
    if (rel.elem.is_zero()) return true;

    std::vector<SymRat> probes;
    if (test_level == 0) {
        probes.push_back(SymRat::one());
    } else if (test_level == 1) {
        for (int s = -2; s <= 2; ++s) probes.push_back(SymRat::x_power(s));
    } else {
        for (int s = -1; s <= 1; ++s)
            for (int t = -1; t <= 1; ++t)
                probes.push_back(can_map(AlgElem::gen(Generator::u(s)) *
                                         AlgElem::gen(Generator::u(t))));
    }

    int rel_level = rel.elem.bidegree().level;
    int max_th = max_theta_index(rel.elem);
    std::mt19937_64 rng(pts.seed * 0x517CC1B727220A95ULL + 1);
    for (const SymRat& probe : probes) {
        int n_tot = probe.n_vars() + rel_level;
        // the exact image blows up with both the arity and the Theta index;
        // past that, several modular points are just as convincing and fast
        bool exact = n_tot <= 3 && (n_tot <= 2 || max_th <= 2);
        if (exact) {
            SymRat img(Scalar(0));
            bool first = true;
            for (const auto& [w, c] : rel.elem.terms()) {
                SymRat part = c * apply_word(w, probe);
                img = first ? part : img + part;
                first = false;
            }
            if (!img.is_zero()) return false;
            continue;
        }
        for (EvalAssign pt : pts.points) {
            for (int attempt = 0;; ++attempt) {
                try {
                    if (eval_elem_image(rel.elem, probe, pt) != 0) return false;
                    break;
                } catch (const bad_point_error&) {
                    if (attempt >= 8) throw;
                    pt = fresh_point(pts.prime, rng, n_tot);
                }
            }
        }
    }
    return true;
}

std::size_t eval_rank(const std::vector<SymRat>& elems, const EvalPointSet& pts) {
    if (elems.empty()) return 0;
    if (pts.points.size() < elems.size())
        throw std::invalid_argument("eval_rank: fewer points than elements");
    int n = elems[0].n_vars();
    for (const SymRat& e : elems)
        if (e.n_vars() != n) throw std::invalid_argument("eval_rank: mixed arities");

    std::mt19937_64 rng(pts.seed * 0x2545F4914F6CDD1DULL + 3);
    std::vector<std::vector<std::uint64_t>> m(elems.size(),
                                              std::vector<std::uint64_t>(pts.points.size()));
    // one parameter specialization for the whole matrix: a dependency among
    // the elems has q-dependent coefficients, so mixing parameter points
    // would inflate the rank past the span dimension
    std::uint64_t q1 = pts.points[0].q1, q2 = pts.points[0].q2;
    for (std::size_t j = 0; j < pts.points.size(); ++j) {
        EvalAssign pt = pts.points[j];
        pt.q1 = q1;
        pt.q2 = q2;
        for (int attempt = 0;; ++attempt) {
            try {
                for (std::size_t i = 0; i < elems.size(); ++i) m[i][j] = elems[i].eval(pt);
                break;
            } catch (const bad_point_error&) {
                if (attempt >= 8) throw;
                pt = fresh_point(pts.prime, rng, n);
                pt.q1 = q1;
                pt.q2 = q2;
            }
        }
    }
    return mod_rank(std::move(m), pts.prime);
}

} // namespace ehall
