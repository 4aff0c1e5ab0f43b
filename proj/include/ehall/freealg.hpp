#ifndef EHALL_FREEALG_HPP
#define EHALL_FREEALG_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ehall/scalar.hpp"

namespace ehall {

/// One letter: u[1,d] (level 1, any d) or Th[0,k] (level 0, k >= 1).
struct Generator {
    int level; // 0 or 1
    int index;

    static Generator u(int d) { return {1, d}; }
    static Generator th(int k);

    // word order: level-0 letters sort before level-1, then by index
    auto operator<=>(const Generator&) const = default;
};

struct Bidegree {
    int level = 0; // number of level-1 letters
    int degree = 0; // sum of indices

    friend Bidegree operator+(Bidegree a, Bidegree b) {
        return {a.level + b.level, a.degree + b.degree};
    }
    auto operator<=>(const Bidegree&) const = default;
};

struct Word {
    std::vector<Generator> letters;

    Word() = default;
    explicit Word(std::vector<Generator> ls) : letters(std::move(ls)) {}

    Bidegree bidegree() const;
    bool empty() const { return letters.empty(); }
    Word concat(const Word& o) const;

    /// "u1[d]" / "th[k]" letters separated by single spaces; "1" for the empty word.
    std::string str() const;

    // (length, letter sequence) lexicographic
    bool operator<(const Word& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
    bool operator==(const Word& o) const { return letters == o.letters; }
};

/// Truncation box making graded components finite-dimensional.
/// th_index_max = 0 excludes Th letters entirely.
struct Window {
    int n_max = 0;
    int u_index_min = 0;
    int u_index_max = 0;
    int th_index_max = 0;

    bool contains(const Generator& g) const;
    bool contains(const Word& w) const;
};

/// Finite Scalar-linear combination of words.
class AlgElem {
public:
    using TermMap = std::map<Word, Scalar>;

    AlgElem() = default;
    static AlgElem one() { return term(Word{}, Scalar(1)); }
    static AlgElem gen(Generator g, Scalar c = Scalar(1));
    static AlgElem term(Word w, Scalar c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const Scalar& c);

    AlgElem operator-() const;
    AlgElem& operator+=(const AlgElem& o);
    AlgElem& operator-=(const AlgElem& o);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const Scalar& c, const AlgElem& a);
    bool operator==(const AlgElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    /// true when all words share one bidegree (or the element is 0)
    bool is_homogeneous() const;
    /// bidegree of a nonzero homogeneous element
    Bidegree bidegree() const;
    bool in_window(const Window& w) const;

    /// list of "(scalar-text, word-text)" pairs in word order
    std::string str() const;

private:
    TermMap terms_;
};

inline AlgElem commutator(const AlgElem& a, const AlgElem& b) { return a * b - b * a; }

/// Bilinear concatenation product (same as operator*, named per the free
/// algebra surface).
inline AlgElem mul(const AlgElem& a, const AlgElem& b) { return a * b; }

/// Homogeneous component of bidegree b.
AlgElem project(const AlgElem& x, Bidegree b);

/// All bidegrees occurring in x, sorted.
std::vector<Bidegree> support_bidegrees(const AlgElem& x);

/// u[0,k] realized inside the Th-subalgebra: k-th coefficient of
/// log(1 + sum_{j>=1} Th[0,j] z^-j), Th-monomials kept in sorted
/// (commutative-normal) order.
AlgElem u0_as_theta(int k);

/// Derivation with ad(u[1,l]) = alpha_k u[1,l+k], ad(Th[0,m]) = 0.
AlgElem ad_u0(int k, const AlgElem& x);

} // namespace ehall

#endif
