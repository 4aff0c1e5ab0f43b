#ifndef EHALL_COPRODUCT_HPP
#define EHALL_COPRODUCT_HPP

#include <set>

#include "ehall/relations.hpp"

namespace ehall {

/// Windowed element of the tensor square. Terms whose words fall outside the
/// window are not stored; their bidegree pairs are recorded instead, so a
/// kept component knows whether it is exact or truncated.
class TensorElem {
public:
    using Key = std::pair<Word, Word>;
    using TermMap = std::map<Key, Scalar>;
    using BidegPair = std::pair<Bidegree, Bidegree>;

    explicit TensorElem(Window w) : window_(w) {}
    static TensorElem tensor(const AlgElem& x, const AlgElem& y, const Window& w);

    const Window& window() const { return window_; }
    const TermMap& terms() const { return terms_; }
    const std::set<BidegPair>& clipped() const { return clipped_; }
    bool is_zero() const { return terms_.empty(); }

    /// Route the term: keep it when both words are in-window, otherwise
    /// record its bidegree pair as clipped.
    void add_term(const Word& l, const Word& r, const Scalar& c);
    void mark_clipped(const BidegPair& p) { clipped_.insert(p); }

    TensorElem operator-() const;
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    /// componentwise product (ac (x) bd), no sign rule
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b);
    friend TensorElem operator*(const Scalar& c, const TensorElem& a);
    bool operator==(const TensorElem& o) const { return terms_ == o.terms_; }

    /// Bidegree pairs with at least one kept term, sorted.
    std::vector<BidegPair> components() const;
    /// Kept terms of one component.
    TermMap component(const BidegPair& p) const;
    /// A kept component is exact when no term of it was clipped away.
    bool is_exact(const BidegPair& p) const { return !clipped_.count(p); }

    /// Left legs sorted letterwise (used to compare pure-Theta legs up to the
    /// Theta commutativity that the quotient imposes).
    TensorElem left_sorted() const;

    std::string str() const;

private:
    Window window_;
    TermMap terms_;
    std::set<BidegPair> clipped_;
};

/// Coproduct: algebra map with
///   delta(u[1,d])  = u[1,d] (x) 1 + sum_{k>=0} Th[0,k] (x) u[1,d-k]
///   delta(Th[0,m]) = sum_{i+j=m} Th[0,i] (x) Th[0,j]
/// truncated to the window; every kept component is exact, truncation is
/// tracked per component. Throws std::invalid_argument when x is not
/// in-window.
TensorElem delta(const AlgElem& x, const Window& w);

/// Counit: projection to bidegree (0,0), i.e. the empty-word coefficient.
Scalar counit(const AlgElem& x);

struct Eq1Decomposition {
    TensorElem term1; // left level 3 — equals r (x) 1
    TensorElem E;     // left level 1 or 2
    TensorElem term3; // left level 0 — triple-Theta (x) nested commutator
    bool term1_matches = false;
    bool term3_matches = false;
};

/// Split delta(r), r = [[u[1,-1],u[1,1]],u[1,0]], by left-leg level and match
/// the outer terms against their closed forms. Throws std::invalid_argument
/// when the window cannot hold r.
Eq1Decomposition eq1_decompose(const Window& w);

enum class CheckStatus { PASS, FAIL, INCONCLUSIVE };

const char* check_status_name(CheckStatus s);

struct ComponentCheck {
    Bidegree left;
    Bidegree right;
    CheckStatus status = CheckStatus::INCONCLUSIVE;
    bool membership = false;  // component reduced to 0 mod I (x) A + A (x) I
    bool oracle_zero = false; // legwise oracle evaluation vanished
};

struct CheckReport {
    std::string relator_id;
    CheckStatus status = CheckStatus::INCONCLUSIVE;
    std::vector<ComponentCheck> components;
};

/// Verify that every exact component of delta(rel) dies in the windowed
/// quotient tensor square: its image under NF (x) NF is zero, where NF is the
/// per-component normal form modulo relator translates at the generic point a.
/// Truncated components are reported INCONCLUSIVE (never silently passed) but
/// do not veto the verdict on the exact ones: overall status is FAIL when any
/// exact component fails, else PASS when at least one was checked. Each component
/// also gets the legwise oracle evaluation as an independent fallback signal.
CheckReport delta_check_relator(const Relator& rel, const Window& w, const EvalAssign& a);

/// Batch form of delta_check_relator: the per-component leg normal forms
/// depend only on (window, point) and are shared across the whole batch.
std::vector<CheckReport> delta_check_relators(const std::vector<Relator>& rels,
                                              const Window& w, const EvalAssign& a);

/// Legwise oracle evaluation: every kept component of t, applied as
/// operator (x) operator to probe pairs, vanishes at `trials` random points
/// over a.p. The computational form of "can (x) can annihilates E".
bool oracle_tensor_zero(const TensorElem& t, const EvalAssign& a, int trials = 3);

} // namespace ehall

#endif
