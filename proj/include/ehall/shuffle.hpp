#ifndef EHALL_SHUFFLE_HPP
#define EHALL_SHUFFLE_HPP

#include "ehall/relations.hpp"
#include "ehall/symrat.hpp"

namespace ehall {

/// Modular evaluation points sharing one prime; each carries enough x-values
/// for the largest arity in play.
struct EvalPointSet {
    std::vector<EvalAssign> points;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
};

/// Draw `count` points with `n_vars` pairwise-distinct nonzero x-values each
/// and a nondegenerate parameter pair. Deterministic in (prime, seed).
EvalPointSet draw_point_set(std::uint64_t prime, std::uint64_t seed, int n_vars, int count);

/// Symmetrized product with kernel w(x,y) = chi_1(x,y)/(x-y)^3.
/// Exact mode only: throws std::invalid_argument when n+m > 3.
SymRat shuffle_mul(const SymRat& F, const SymRat& G);

/// Algebra map u[1,d] -> x_1^d extended by shuffle_mul. The argument must use
/// level-1 letters only and have at most 3 of them per word.
SymRat can_map(const AlgElem& x);

/// Series coefficients of chi_{-1}(z,x)/chi_1(z,x) in powers of x/z, degrees 0..k.
std::vector<Scalar> phi_coeffs(int k);

/// The diagonal-action multiplier: coefficient of z^-k in
/// prod_i chi_{-1}(z,x_i)/chi_1(z,x_i).
XLaurent h_poly(int k, int n_vars);

/// Multiplication by h_poly(k, n).
SymRat theta_op(int k, const SymRat& F);

/// Apply a word as an operator (rightmost letter first) to a probe:
/// u[1,d] acts by left shuffle multiplication with x^d, Th[0,k] by theta_op.
/// Exact mode; total arity must stay <= 3.
SymRat apply_word(const Word& word, const SymRat& probe);

/// Value of the word-operator image at a point, computed recursively without
/// constructing the rational function. a.xs must hold probe.n_vars() + (number
/// of level-1 letters) values.
std::uint64_t eval_word_image(const Word& word, const SymRat& probe, const EvalAssign& a);

/// Linear extension of eval_word_image over an AlgElem (all words one level).
std::uint64_t eval_elem_image(const AlgElem& x, const SymRat& probe, const EvalAssign& a);

/// Check that the relator annihilates every generic probe of the given level:
/// {1} (level 0), {x^s : s in [-2,2]} (level 1), {can(u[1,s]u[1,t]) : s,t in
/// [-1,1]} (level 2). Exact when the total arity is <= 3, otherwise evaluated
/// at pts (bad points are redrawn).
bool rep_check_relator(const Relator& rel, int test_level, const EvalPointSet& pts);

/// Rank of the evaluation matrix (elems x points) over F_p: a lower bound for
/// the dimension of the span. All elems must share one arity.
std::size_t eval_rank(const std::vector<SymRat>& elems, const EvalPointSet& pts);

} // namespace ehall

#endif
