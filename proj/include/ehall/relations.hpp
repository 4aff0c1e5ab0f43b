#ifndef EHALL_RELATIONS_HPP
#define EHALL_RELATIONS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ehall/freealg.hpp"
#include "ehall/linalg.hpp"

namespace ehall {

enum class Family { THETA_COMM, QUAD_TT, MIXED, CUBIC, R_SYM };

const char* family_name(Family f);

/// Homogeneous element whose vanishing is imposed (or, for R_SYM, derived),
/// with the family and parameters that reproduce it.
struct Relator {
    AlgElem elem;
    Family family;
    std::vector<int> params;

    std::string id() const; // "FAMILY(p1,p2,...)"
};

/// Th[0,m]Th[0,n] - Th[0,n]Th[0,m], bidegree (0, m+n).
Relator relator_theta_comm(int m, int n);

/// Coefficient of z^-a w^-b in chi_1(z,w)T1(z)T1(w) - chi_{-1}(z,w)T1(w)T1(z),
/// bidegree (2, a+b+3).
Relator relator_quad(int a, int b);

/// Coefficient of z^-a w^-b in chi_1(z,w)T0+(z)T1(w) - chi_{-1}(z,w)T1(w)T0+(z),
/// Th[0,0] = 1, negative Th indices dropped; bidegree (1, a+b+3).
Relator relator_mixed(int a, int b);

/// Residue (z^-1 y^-1 w^-1 coefficient) of
/// (zyw)^m (z+w)(y^2 - zw) T1(z)T1(y)T1(w); bidegree (3, 3m+6).
Relator relator_cubic(int m);

/// Six-permutation symmetrization of [[u[1,-1+m], u[1,1+n]], u[1,l]],
/// bidegree (3, m+n+l).
Relator relator_R(int m, int n, int l);

/// All relators of the given families with every word in-window, ordered by
/// (family, params). The defining ideal uses the first four families; R_SYM
/// members are derived consequences and excluded from span computations.
std::vector<Relator> enumerate_relators(const Window& w,
                                        bool include_r_sym = true);

/// All in-window words of bidegree b, sorted in canonical word order.
std::vector<Word> component_words(Bidegree b, const Window& w, int theta_cap = -1);

struct RankReport {
    Bidegree bidegree;
    Window window;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t n_words = 0;
    std::size_t n_relators = 0; // number of contributing translate rows
    std::size_t relator_rank = 0;
    std::size_t quotient_rank = 0;
    double elapsed_ms = 0.0;
};

/// One summand of a membership certificate: coeff * wl * relator * wr.
struct CertEntry {
    std::uint64_t coeff;
    Word left;
    Relator relator;
    Word right;
};

struct Certificate {
    AlgElem target;
    std::vector<CertEntry> combination;
    std::uint64_t prime = 0;
    int theta_weight_cap = -1; // smallest Th-degree cap that worked
};

struct NotInWindowedSpan {};
using MembershipResult = std::variant<Certificate, NotInWindowedSpan>;

/// Two-sided in-window translate of a relator contributing to bidegree b.
struct Translate {
    Word left;
    const Relator* relator;
    Word right;
};

/// All strict-policy translates of the defining relators landing in
/// component (b, w); deterministic order. When theta_cap >= 0, only
/// translates all of whose words have Th-degree <= theta_cap are kept.
std::vector<Translate> relator_translates(Bidegree b, const Window& w,
                                          const std::vector<Relator>& defining,
                                          int theta_cap = -1);

/// Modular rank of the relator-translate span in component (b, w) and the
/// quotient dimension. Deterministic given (prime, seed).
RankReport rank_quotient(Bidegree b, const Window& w, std::uint64_t prime,
                         std::uint64_t seed);

/// Ideal-membership test for a homogeneous in-window x via linear solve over
/// F_p at a generic parameter point. Searches over growing Th-degree caps and
/// records the smallest cap that produced a certificate.
MembershipResult membership(const AlgElem& x, const Window& w, const EvalAssign& a);

/// membership over each prime in `primes` (fresh generic point per prime,
/// derived from seed); every certificate is re-verified by exact modular
/// recombination. Returns the first certificate, or nullopt if any prime fails.
std::optional<Certificate> membership_checked(const AlgElem& x, const Window& w,
                                              const std::vector<std::uint64_t>& primes,
                                              std::uint64_t seed);

/// Re-multiply the certificate's combination and compare with the target
/// specialized at the same parameter point.
bool verify_certificate(const Certificate& cert, const EvalAssign& a);

/// Deterministic generic parameter point for (prime, seed).
EvalAssign generic_point(std::uint64_t prime, std::uint64_t seed);

/// Sparse F_p coordinate vector of x w.r.t. the sorted word list (missing
/// words are an error).
SparseRow coordinates(const AlgElem& x, const std::vector<Word>& words,
                      const EvalAssign& a);

} // namespace ehall

#endif
