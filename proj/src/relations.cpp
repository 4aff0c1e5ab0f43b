#include "ehall/relations.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "ehall/coeff.hpp"

namespace ehall {

namespace {

int theta_degree(const Word& w) {
    int d = 0;
    for (const auto& g : w.letters)
        if (g.level == 0) d += g.index;
    return d;
}

int max_theta_degree(const AlgElem& x) {
    int d = 0;
    for (const auto& [w, c] : x.terms()) d = std::max(d, theta_degree(w));
    return d;
}

Word uword(std::initializer_list<int> idx) {
    Word w;
    for (int d : idx) w.letters.push_back(Generator::u(d));
    return w;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::THETA_COMM: return "THETA_COMM";
        case Family::QUAD_TT: return "QUAD_TT";
        case Family::MIXED: return "MIXED";
        case Family::CUBIC: return "CUBIC";
        case Family::R_SYM: return "R_SYM";
    }
    return "?";
}

std::string Relator::id() const {
    std::ostringstream os;
    os << family_name(family) << '(';
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        os << params[i];
    }
    os << ')';
    return os.str();
}

Relator relator_theta_comm(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("relator_theta_comm: indices >= 1");
    AlgElem tm = AlgElem::gen(Generator::th(m)), tn = AlgElem::gen(Generator::th(n));
    return Relator{commutator(tm, tn), Family::THETA_COMM, {m, n}};
}

Relator relator_quad(int a, int b) {
    // coefficient of z^-a w^-b in chi_1(z,w) T1(z) T1(w) - chi_{-1}(z,w) T1(w) T1(z)
    AlgElem e;
    for (const auto& [ze_we, c] : kernel_chi(+1).terms) {
        auto [ze, we] = ze_we;
        e += c * AlgElem::term(uword({a + ze, b + we}), Scalar(1));
    }
    for (const auto& [ze_we, c] : kernel_chi(-1).terms) {
        auto [ze, we] = ze_we;
        e -= c * AlgElem::term(uword({b + we, a + ze}), Scalar(1));
    }
    return Relator{std::move(e), Family::QUAD_TT, {a, b}};
}

Relator relator_mixed(int a, int b) {
    // as relator_quad, with the z-series T0+(z): Th[0,k], Th[0,0] = 1, k < 0 dropped
    AlgElem e;
    auto theta_factor = [](int k) -> std::optional<AlgElem> {
        if (k < 0) return std::nullopt;
        if (k == 0) return AlgElem::one();
        return AlgElem::gen(Generator::th(k));
    };
    for (const auto& [ze_we, c] : kernel_chi(+1).terms) {
        auto [ze, we] = ze_we;
        if (auto th = theta_factor(a + ze))
            e += c * (*th * AlgElem::gen(Generator::u(b + we)));
    }
    for (const auto& [ze_we, c] : kernel_chi(-1).terms) {
        auto [ze, we] = ze_we;
        if (auto th = theta_factor(a + ze))
            e -= c * (AlgElem::gen(Generator::u(b + we)) * *th);
    }
    return Relator{std::move(e), Family::MIXED, {a, b}};
}

Relator relator_cubic(int m) {
    // residue extraction: coefficient of z^-1 y^-1 w^-1 in
    // (zyw)^m (z+w)(y^2 - zw) T1(z) T1(y) T1(w)
    struct Mono {
        int z, y, w, c;
    };
    const Mono kernel[] = {{1, 2, 0, 1}, {2, 0, 1, -1}, {0, 2, 1, 1}, {1, 0, 2, -1}};
    AlgElem e;
    for (const auto& t : kernel) {
        Word w = uword({m + t.z + 1, m + t.y + 1, m + t.w + 1});
        e += Scalar(t.c) * AlgElem::term(std::move(w), Scalar(1));
    }
    return Relator{std::move(e), Family::CUBIC, {m}};
}

Relator relator_R(int m, int n, int l) {
    const int t[3] = {m, n, l};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    AlgElem e;
    for (const auto& p : perms) {
        AlgElem a = AlgElem::gen(Generator::u(-1 + t[p[0]]));
        AlgElem b = AlgElem::gen(Generator::u(1 + t[p[1]]));
        AlgElem c = AlgElem::gen(Generator::u(t[p[2]]));
        e += commutator(commutator(a, b), c);
    }
    return Relator{std::move(e), Family::R_SYM, {m, n, l}};
}

std::vector<Relator> enumerate_relators(const Window& w, bool include_r_sym) {
    std::vector<Relator> out;
    auto keep = [&](Relator r) {
        if (r.elem.is_zero()) return;
        if (!r.elem.in_window(w)) return;
        out.push_back(std::move(r));
    };
    for (int m = 1; m <= w.th_index_max; ++m)
        for (int n = m + 1; n <= w.th_index_max; ++n) keep(relator_theta_comm(m, n));
    if (w.n_max >= 2)
        for (int a = w.u_index_min; a + 3 <= w.u_index_max; ++a)
            for (int b = w.u_index_min; b + 3 <= w.u_index_max; ++b) keep(relator_quad(a, b));
    if (w.n_max >= 1)
        for (int a = -2; a + 3 <= w.th_index_max; ++a)
            for (int b = w.u_index_min; b + std::min(3, a + 3) <= w.u_index_max; ++b)
                keep(relator_mixed(a, b));
    if (w.n_max >= 3)
        for (int m = w.u_index_min - 1; m + 3 <= w.u_index_max; ++m) keep(relator_cubic(m));
    if (include_r_sym && w.n_max >= 3)
        for (int m = w.u_index_min + 1; m <= w.u_index_max - 1; ++m)
            for (int n = m; n <= w.u_index_max - 1; ++n)
                for (int l = n; l <= w.u_index_max - 1; ++l) keep(relator_R(m, n, l));
    return out;
}

std::vector<Word> component_words(Bidegree b, const Window& w, int theta_cap) {
    std::vector<Word> out;
    if (b.level < 0 || b.level > w.n_max) return out;
    std::vector<Generator> cur;
    // place letters left to right; u_rem level-1 letters still owed,
    // th_rem the remaining total Theta weight allowance (-1 = unbounded)
    auto rec = [&](auto&& self, int u_rem, int deg_rem, int th_rem) -> void {
        if (u_rem == 0 && deg_rem == 0) {
            out.emplace_back(cur);
            // Th letters could only extend the degree further (Th >= 1)
            return;
        }
        // feasibility: remaining u letters contribute within [u_rem*min, u_rem*max]
        if (deg_rem < u_rem * w.u_index_min) return;
        // deg_rem beyond u_rem*max must come from Th letters
        if (th_rem >= 0 && deg_rem > u_rem * w.u_index_max + th_rem) return;
        if (w.th_index_max >= 1) {
            int k_max = std::min(w.th_index_max, deg_rem - u_rem * w.u_index_min);
            if (th_rem >= 0) k_max = std::min(k_max, th_rem);
            for (int k = 1; k <= k_max; ++k) {
                cur.push_back(Generator::th(k));
                self(self, u_rem, deg_rem - k, th_rem >= 0 ? th_rem - k : th_rem);
                cur.pop_back();
            }
        }
        if (u_rem > 0) {
            for (int d = w.u_index_min; d <= w.u_index_max; ++d) {
                cur.push_back(Generator::u(d));
                self(self, u_rem - 1, deg_rem - d, th_rem);
                cur.pop_back();
            }
        }
    };
    rec(rec, b.level, b.degree, theta_cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Translate> relator_translates(Bidegree b, const Window& w,
                                          const std::vector<Relator>& defining,
                                          int theta_cap) {
    std::vector<Translate> out;
    if (b.level > w.n_max) return out;
    auto thdeg_ok = [&](const Word& word) {
        return theta_cap < 0 || theta_degree(word) <= theta_cap;
    };
    for (const auto& rel : defining) {
        Bidegree br = rel.elem.bidegree();
        int rel_thdeg = max_theta_degree(rel.elem);
        if (theta_cap >= 0 && rel_thdeg > theta_cap) continue;
        for (int nl = 0; nl + br.level <= b.level; ++nl) {
            int nr = b.level - br.level - nl;
            int dl_min = nl * w.u_index_min;
            int dl_max = b.degree - br.degree - nr * w.u_index_min;
            if (theta_cap >= 0) {
                dl_max = std::min(dl_max, nl * w.u_index_max + theta_cap);
                dl_min = std::max(dl_min,
                                  b.degree - br.degree - nr * w.u_index_max - theta_cap);
            }
            for (int dl = dl_min; dl <= dl_max; ++dl) {
                int dr = b.degree - br.degree - dl;
                int sub_cap = theta_cap >= 0 ? theta_cap - rel_thdeg : -1;
                auto lws = component_words({nl, dl}, w, sub_cap);
                if (lws.empty()) continue;
                auto rws = component_words({nr, dr}, w, sub_cap);
                if (rws.empty()) continue;
                for (const auto& wl : lws) {
                    if (!thdeg_ok(wl)) continue;
                    int tl = theta_degree(wl);
                    for (const auto& wr : rws) {
                        if (theta_cap >= 0 &&
                            tl + rel_thdeg + theta_degree(wr) > theta_cap)
                            continue;
                        out.push_back(Translate{wl, &rel, wr});
                    }
                }
            }
        }
    }
    return out;
}

EvalAssign generic_point(std::uint64_t prime, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL ^ prime);
    return draw_param_point(prime, rng);
}

SparseRow coordinates(const AlgElem& x, const std::vector<Word>& words,
                      const EvalAssign& a) {
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    SparseRow row;
    for (const auto& [w, c] : x.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw std::invalid_argument("coordinates: word out of component");
        std::uint64_t v = specialize(c, a).value;
        if (v) row.emplace_back(it->second, v);
    }
    std::sort(row.begin(), row.end());
    return row;
}

namespace {

SparseRow translate_row(const Translate& t, const std::map<Word, std::size_t>& index,
                        const EvalAssign& a, bool* in_window_ok) {
    SparseRow row;
    std::map<std::size_t, std::uint64_t> acc;
    for (const auto& [w, c] : t.relator->elem.terms()) {
        Word full = t.left.concat(w).concat(t.right);
        auto it = index.find(full);
        if (it == index.end()) {
            *in_window_ok = false; // strict policy: whole translate drops out
            return row;
        }
        std::uint64_t v = specialize(c, a).value;
        if (!v) continue;
        std::uint64_t& slot = acc[it->second];
        slot = ff_add(slot, v, a.p);
    }
    *in_window_ok = true;
    for (const auto& [col, v] : acc)
        if (v) row.emplace_back(col, v);
    return row;
}

} // namespace

RankReport rank_quotient(Bidegree b, const Window& w, std::uint64_t prime,
                         std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    RankReport rep;
    rep.bidegree = b;
    rep.window = w;
    rep.prime = prime;
    rep.seed = seed;
    auto words = component_words(b, w);
    rep.n_words = words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    auto defining = enumerate_relators(w, /*include_r_sym=*/false);
    auto translates = relator_translates(b, w, defining);

    for (int retry = 0; retry < 8; ++retry) {
        try {
            EvalAssign a = generic_point(prime, seed + 1000003ULL * retry);
            SparseSolver solver(prime);
            std::size_t tag = 0, used = 0;
            for (const auto& t : translates) {
                bool ok = false;
                SparseRow row = translate_row(t, index, a, &ok);
                if (!ok || row.empty()) {
                    ++tag;
                    continue;
                }
                ++used;
                solver.add_row(row, tag++);
            }
            rep.n_relators = used;
            rep.relator_rank = solver.rank();
            rep.quotient_rank = rep.n_words - rep.relator_rank;
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return rep;
        } catch (const bad_point_error&) {
            continue;
        }
    }
    throw bad_point_error("rank_quotient: no good evaluation point found");
}

namespace {

// One escalation run in a fixed window: raise the Theta-weight cap of the
// translate set until a certificate appears or the component-wide cap fails.
std::optional<Certificate> membership_tier(const AlgElem& x, const Window& w,
                                           const EvalAssign& a) {
    Bidegree b = x.bidegree();
    auto defining = enumerate_relators(w, /*include_r_sym=*/false);
    int full_cap = std::max(0, b.degree - b.level * w.u_index_min);
    if (w.th_index_max == 0) full_cap = 0;
    int cap = max_theta_degree(x);
    for (;; cap = (cap < full_cap && cap + 2 > full_cap) ? full_cap : cap + 2) {
        std::vector<Word> words = component_words(b, w, cap);
        if (words.size() > 200000)
            throw std::runtime_error("membership: component too large for this window");
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
        auto translates = relator_translates(b, w, defining, cap);
        SparseSolver solver(a.p);
        for (std::size_t tag = 0; tag < translates.size(); ++tag) {
            bool ok = false;
            SparseRow row = translate_row(translates[tag], index, a, &ok);
            if (ok && !row.empty()) solver.add_row(row, tag);
        }
        if (auto comb = solver.solve(coordinates(x, words, a))) {
            Certificate cert;
            cert.target = x;
            cert.prime = a.p;
            cert.theta_weight_cap = cap;
            for (const auto& [tag, coeff] : *comb)
                cert.combination.push_back(
                    CertEntry{coeff, translates[tag].left, *translates[tag].relator,
                              translates[tag].right});
            return cert;
        }
        if (cap >= full_cap) return std::nullopt;
    }
}

} // namespace

MembershipResult membership(const AlgElem& x, const Window& w, const EvalAssign& a) {
    if (x.is_zero()) return Certificate{x, {}, a.p, 0};
    if (!x.is_homogeneous()) throw std::invalid_argument("membership: inhomogeneous input");
    if (!x.in_window(w)) throw std::invalid_argument("membership: input not in window");
    // A certificate over a subset of the window's translates is still a
    // certificate, and certificates tend to live near the target's support,
    // where the elimination is far cheaper. Try a support-local subwindow
    // first; only a failure in the full window is conclusive.
    int lo = w.u_index_max, hi = w.u_index_min;
    for (const auto& [word, c] : x.terms())
        for (const auto& g : word.letters)
            if (g.level == 1) {
                lo = std::min(lo, g.index);
                hi = std::max(hi, g.index);
            }
    Window sub = w;
    sub.u_index_min = std::max(w.u_index_min, lo - 1);
    sub.u_index_max = std::min(w.u_index_max, hi + 1);
    if (lo <= hi && (sub.u_index_min != w.u_index_min || sub.u_index_max != w.u_index_max))
        if (auto cert = membership_tier(x, sub, a)) return *cert;
    if (auto cert = membership_tier(x, w, a)) return *cert;
    return NotInWindowedSpan{};
}

bool verify_certificate(const Certificate& cert, const EvalAssign& a) {
    std::map<Word, std::uint64_t> acc;
    auto add = [&](const Word& w, std::uint64_t v) {
        std::uint64_t& slot = acc[w];
        slot = ff_add(slot, v, a.p);
        if (!slot) acc.erase(w);
    };
    for (const auto& e : cert.combination)
        for (const auto& [w, c] : e.relator.elem.terms())
            add(e.left.concat(w).concat(e.right),
                ff_mul(e.coeff, specialize(c, a).value, a.p));
    for (const auto& [w, c] : cert.target.terms())
        add(w, ff_neg(specialize(c, a).value, a.p));
    return acc.empty();
}

std::optional<Certificate> membership_checked(const AlgElem& x, const Window& w,
                                              const std::vector<std::uint64_t>& primes,
                                              std::uint64_t seed) {
    std::optional<Certificate> first;
    for (std::uint64_t p : primes) {
        for (int retry = 0;; ++retry) {
            if (retry == 8) return std::nullopt;
            try {
                EvalAssign a = generic_point(p, seed + 1000003ULL * retry);
                MembershipResult r = membership(x, w, a);
                auto* cert = std::get_if<Certificate>(&r);
                if (!cert) return std::nullopt;
                if (!verify_certificate(*cert, a)) return std::nullopt;
                if (!first) first = std::move(*cert);
                break;
            } catch (const bad_point_error&) {
                continue;
            }
        }
    }
    return first;
}

} // namespace ehall
