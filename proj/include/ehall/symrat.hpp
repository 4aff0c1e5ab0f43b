#ifndef EHALL_SYMRAT_HPP
#define EHALL_SYMRAT_HPP

#include <vector>

#include "ehall/coeff.hpp"
#include "ehall/scalar.hpp"

namespace ehall {

/// Sparse Laurent polynomial in x_1..x_n over Scalar.
class XLaurent {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Scalar>;

    XLaurent() = default;
    explicit XLaurent(int n_vars) : n_(n_vars) {}
    static XLaurent constant(int n_vars, Scalar c);
    static XLaurent monomial(int n_vars, Exps e, Scalar c);
    /// x_i^e (0-based variable index)
    static XLaurent power(int n_vars, int i, int e);

    int n_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const Exps& e, const Scalar& c);

    XLaurent operator-() const;
    XLaurent& operator+=(const XLaurent& o);
    XLaurent& operator-=(const XLaurent& o);
    friend XLaurent operator+(XLaurent a, const XLaurent& b) { return a += b; }
    friend XLaurent operator-(XLaurent a, const XLaurent& b) { return a -= b; }
    friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
    friend XLaurent operator*(const Scalar& c, const XLaurent& a);
    bool operator==(const XLaurent& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Image under a variable permutation: x_i -> x_{perm[i]}.
    XLaurent permuted(const std::vector<int>& perm) const;
    /// Reinterpret in a larger variable set, variable i -> map[i].
    XLaurent embedded(int new_n, const std::vector<int>& map) const;
    bool is_symmetric() const;

    /// Try exact division by (x_i - x_j); quotient stored in *q on success.
    bool divide_by_diff(int i, int j, XLaurent* q) const;
    /// Multiply by (x_i - x_j).
    XLaurent times_diff(int i, int j) const;

    /// Evaluate modulo a.p with x-values a.xs (parameters from a).
    std::uint64_t eval(const EvalAssign& a) const;

    std::string str() const;

private:
    int n_ = 0;
    TermMap terms_;
};

/// Symmetric rational function: num / Vandermonde^denom_exp, with
/// Vandermonde = prod_{i<j} (x_i - x_j). Result of normalize() has the
/// smallest nonnegative denom_exp.
class SymRat {
public:
    SymRat() = default;
    explicit SymRat(Scalar c) : n_(0), num_(XLaurent::constant(0, std::move(c))) {}
    SymRat(int n_vars, XLaurent num, int denom_exp);

    static SymRat one() { return SymRat(Scalar(1)); }
    /// x_1^d in one variable
    static SymRat x_power(int d);

    int n_vars() const { return n_; }
    const XLaurent& num() const { return num_; }
    int denom_exp() const { return d_; }
    bool is_zero() const { return num_.is_zero(); }

    SymRat operator-() const;
    friend SymRat operator+(const SymRat& a, const SymRat& b);
    friend SymRat operator-(const SymRat& a, const SymRat& b);
    friend SymRat operator*(const Scalar& c, const SymRat& a);
    /// multiply by a (symmetric) Laurent polynomial
    SymRat times_poly(const XLaurent& p) const;
    bool operator==(const SymRat& o) const;

    bool is_symmetric() const;
    /// largest pole order on any diagonal x_i = x_j
    int max_pole_order() const;

    /// Throws bad_point_error when the Vandermonde vanishes at the point.
    std::uint64_t eval(const EvalAssign& a) const;

    std::string str() const;

private:
    int n_ = 0;
    XLaurent num_ = XLaurent::constant(0, Scalar());
    int d_ = 0;
    void normalize();
};

/// Vandermonde product of n variables.
XLaurent vandermonde(int n_vars);

} // namespace ehall

#endif
