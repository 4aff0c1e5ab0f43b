#ifndef EHALL_LINALG_HPP
#define EHALL_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ehall/ff.hpp"

namespace ehall {

/// Sparse row over F_p: sorted (column, value) pairs, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

/// Incremental Gaussian eliminator over F_p that remembers, for every basis
/// row, its expression in the original tagged rows. Used for quotient ranks
/// and for extracting ideal-membership certificates.
class OnlineSolver {
public:
    OnlineSolver(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {}

    /// Reduce the row against the basis; keep it if independent.
    /// Returns true when the row enlarged the basis.
    bool add_row(const SparseRow& row, std::size_t tag);

    /// Express target as a combination of previously added rows.
    /// Returns tag -> coefficient, or nullopt when target is outside the span.
    std::optional<std::map<std::size_t, std::uint64_t>> solve(const SparseRow& target) const;

    /// Normal form: the row reduced against the basis (no bookkeeping).
    std::vector<std::uint64_t> residual(const SparseRow& row) const;

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }

private:
    struct BasisRow {
        std::vector<std::uint64_t> vals; // dense, pivot normalized to 1
        std::size_t pivot;
        std::map<std::size_t, std::uint64_t> comb; // original-tag combination
    };
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<BasisRow> basis_;
    std::map<std::size_t, std::size_t> pivot_of_; // pivot col -> basis idx
};

/// Sparse incremental eliminator for the very sparse translate systems:
/// rows keep only their nonzeros, and the expression of a basis row in the
/// original tagged rows is not carried through the elimination (which costs
/// O(rank) per step in OnlineSolver) but recorded as an elimination trace and
/// expanded lazily — only for the pivots a solve target actually touches.
class SparseSolver {
public:
    explicit SparseSolver(std::uint64_t p) : p_(p) {}

    /// Reduce the row against the pivots; keep it if independent.
    bool add_row(const SparseRow& row, std::size_t tag);

    /// Express target as a combination of previously added rows.
    std::optional<std::map<std::size_t, std::uint64_t>> solve(const SparseRow& target);

    /// Fully reduced form (supported on non-pivot columns only).
    SparseRow reduce(const SparseRow& row) const { return reduce(row, nullptr); }

    std::size_t rank() const { return pivots_.size(); }

private:
    struct Pivot {
        SparseRow row;       // normalized, leading coefficient 1
        std::size_t tag;     // original row this pivot came from
        std::uint64_t scale; // applied to normalize the leading coefficient
        std::vector<std::pair<std::size_t, std::uint64_t>> steps; // (col, factor)
    };

    SparseRow reduce(const SparseRow& row,
                     std::vector<std::pair<std::size_t, std::uint64_t>>* steps) const;
    const std::map<std::size_t, std::uint64_t>& comb(std::size_t col);

    std::uint64_t p_;
    std::map<std::size_t, Pivot> pivots_;
    std::map<std::size_t, std::map<std::size_t, std::uint64_t>> comb_cache_;
};

/// Check ker(f (x) f) = V (x) ker(f) + ker(f) (x) V for a surjective matrix f
/// over F_p (rows x cols, rows <= cols, full row rank required).
bool kernel_tensor_check_matrix(const std::vector<std::vector<std::uint64_t>>& f,
                                std::uint64_t p);

/// Run `trials` random instances with dim V <= max_dim.
bool kernel_tensor_check(int trials, int max_dim, std::uint64_t p, std::mt19937_64& rng);

} // namespace ehall

#endif
