#ifndef EHALL_COEFF_HPP
#define EHALL_COEFF_HPP

#include <map>
#include <random>

#include "ehall/ff.hpp"
#include "ehall/scalar.hpp"

namespace ehall {

/// Elementary symmetric function e_k(q1, q2, q3), q3 = (q1*q2)^-1, 0 <= k <= 3.
Scalar elem_sym(int k);

/// Structure constant of the degree-raising adjoint action:
/// alpha_k = (1/k) * sum_i (q_i^k - q_i^-k), k >= 1.
Scalar alpha(int k);

/// Bivariate polynomial over Scalar in formal symbols (z, w), exponents >= 0.
struct ZWPoly {
    std::map<std::pair<int, int>, Scalar> terms; // (z-exp, w-exp) -> coefficient

    void add(int ze, int we, const Scalar& c);
    Scalar coeff(int ze, int we) const;
    bool operator==(const ZWPoly& o) const { return terms == o.terms; }
};

/// chi_eps(z, w) = prod_{i=1..3} (z - q_i^eps * w), eps in {+1, -1}.
ZWPoly kernel_chi(int eps);

/// Evaluate s at the modular point a. Throws bad_point_error when the
/// denominator vanishes at a.
FFElem specialize(const Scalar& s, const EvalAssign& a);

/// Draw a parameter point over F_p avoiding degenerate specializations
/// (q_i = 0, q_i^k = 1 for small k, equal q_i); redraws on collision.
EvalAssign draw_param_point(std::uint64_t p, std::mt19937_64& rng, int max_order = 24);

} // namespace ehall

#endif
