#include "ehall/freealg.hpp"

#include <algorithm>
#include <sstream>

#include "ehall/coeff.hpp"

namespace ehall {

Generator Generator::th(int k) {
    if (k < 1) throw std::invalid_argument("Generator::th: index must be >= 1");
    return {0, k};
}

Bidegree Word::bidegree() const {
    Bidegree b;
    for (const auto& g : letters) {
        b.level += g.level;
        b.degree += g.index;
    }
    return b;
}

Word Word::concat(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

std::string Word::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        if (letters[i].level == 1)
            os << "u1[" << letters[i].index << ']';
        else
            os << "th[" << letters[i].index << ']';
    }
    return os.str();
}

bool Window::contains(const Generator& g) const {
    if (g.level == 1) return g.index >= u_index_min && g.index <= u_index_max;
    return g.index <= th_index_max;
}

bool Window::contains(const Word& w) const {
    int lv = 0;
    for (const auto& g : w.letters) {
        if (!contains(g)) return false;
        lv += g.level;
    }
    return lv <= n_max;
}

AlgElem AlgElem::gen(Generator g, Scalar c) {
    return term(Word{{g}}, std::move(c));
}

AlgElem AlgElem::term(Word w, Scalar c) {
    AlgElem r;
    if (!c.is_zero()) r.terms_.emplace(std::move(w), std::move(c));
    return r;
}

void AlgElem::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElem AlgElem::operator-() const {
    AlgElem r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    AlgElem r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa.concat(wb), ca * cb);
    return r;
}

AlgElem operator*(const Scalar& c, const AlgElem& a) {
    AlgElem r;
    for (const auto& [w, cw] : a.terms_) r.add_term(w, c * cw);
    return r;
}

bool AlgElem::is_homogeneous() const {
    if (terms_.empty()) return true;
    Bidegree b = terms_.begin()->first.bidegree();
    for (const auto& [w, c] : terms_)
        if (w.bidegree() != b) return false;
    return true;
}

Bidegree AlgElem::bidegree() const {
    if (terms_.empty()) throw std::invalid_argument("bidegree of zero element");
    if (!is_homogeneous()) throw std::invalid_argument("bidegree of inhomogeneous element");
    return terms_.begin()->first.bidegree();
}

bool AlgElem::in_window(const Window& w) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return w.contains(t.first); });
}

std::string AlgElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " ; ";
        first = false;
        os << '(' << c.str() << ", " << w.str() << ')';
    }
    return os.str();
}

AlgElem project(const AlgElem& x, Bidegree b) {
    AlgElem r;
    for (const auto& [w, c] : x.terms())
        if (w.bidegree() == b) r.add_term(w, c);
    return r;
}

std::vector<Bidegree> support_bidegrees(const AlgElem& x) {
    std::vector<Bidegree> out;
    for (const auto& [w, c] : x.terms()) out.push_back(w.bidegree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Word sorted_theta_word(std::vector<int> ks) {
    std::sort(ks.begin(), ks.end());
    Word w;
    for (int k : ks) w.letters.push_back(Generator::th(k));
    return w;
}

} // namespace

AlgElem u0_as_theta(int k) {
    if (k < 1) throw std::invalid_argument("u0_as_theta: k must be >= 1");
    // log(1 + S) = sum_{j>=1} (-1)^{j+1} S^j / j with S = sum Th[0,m] z^-m;
    // z^-k coefficient = sum over compositions (m_1..m_j) of k. Theta letters
    // commute modulo the relations, so each monomial is stored index-sorted.
    AlgElem r;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            int j = static_cast<int>(parts.size());
            Scalar c = Scalar::frac(j % 2 == 1 ? 1 : -1, j);
            r.add_term(sorted_theta_word(parts), c);
            return;
        }
        for (int m = 1; m <= remaining; ++m) {
            parts.push_back(m);
            self(self, remaining - m);
            parts.pop_back();
        }
    };
    rec(rec, k);
    return r;
}

AlgElem ad_u0(int k, const AlgElem& x) {
    if (k < 1) throw std::invalid_argument("ad_u0: k must be >= 1");
    const Scalar ak = alpha(k);
    AlgElem r;
    for (const auto& [w, c] : x.terms()) {
        for (size_t i = 0; i < w.letters.size(); ++i) {
            if (w.letters[i].level != 1) continue; // Th letters are killed
            Word shifted = w;
            shifted.letters[i].index += k;
            r.add_term(shifted, c * ak);
        }
    }
    return r;
}

} // namespace ehall
