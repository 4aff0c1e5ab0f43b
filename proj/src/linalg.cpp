#include "ehall/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehall {

std::size_t mod_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint64_t inv = ff_inv(rows[rank][c], p);
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] = ff_mul(rows[rank][j] % p, inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            std::uint64_t f = rows[r][c] % p;
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] = ff_sub(rows[r][j], ff_mul(f, rows[rank][j], p), p);
        }
        ++rank;
    }
    return rank;
}

bool OnlineSolver::add_row(const SparseRow& row, std::size_t tag) {
    std::vector<std::uint64_t> w(cols_, 0);
    for (const auto& [c, v] : row) w[c] = v % p_;
    std::map<std::size_t, std::uint64_t> comb{{tag, 1}};
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!w[c]) continue;
        auto it = pivot_of_.find(c);
        if (it == pivot_of_.end()) {
            // new pivot: normalize and store
            std::uint64_t inv = ff_inv(w[c], p_);
            for (auto& v : w) v = ff_mul(v, inv, p_);
            for (auto& [t, v] : comb) v = ff_mul(v, inv, p_);
            pivot_of_[c] = basis_.size();
            basis_.push_back(BasisRow{std::move(w), c, std::move(comb)});
            return true;
        }
        const BasisRow& b = basis_[it->second];
        std::uint64_t f = w[c];
        for (std::size_t j = c; j < cols_; ++j)
            if (b.vals[j]) w[j] = ff_sub(w[j], ff_mul(f, b.vals[j], p_), p_);
        for (const auto& [t, v] : b.comb) {
            std::uint64_t& slot = comb[t];
            slot = ff_sub(slot, ff_mul(f, v, p_), p_);
            if (!slot) comb.erase(t);
        }
    }
    return false;
}

std::optional<std::map<std::size_t, std::uint64_t>>
OnlineSolver::solve(const SparseRow& target) const {
    std::vector<std::uint64_t> w(cols_, 0);
    for (const auto& [c, v] : target) w[c] = v % p_;
    std::map<std::size_t, std::uint64_t> comb;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!w[c]) continue;
        auto it = pivot_of_.find(c);
        if (it == pivot_of_.end()) return std::nullopt;
        const BasisRow& b = basis_[it->second];
        std::uint64_t f = w[c];
        for (std::size_t j = c; j < cols_; ++j)
            if (b.vals[j]) w[j] = ff_sub(w[j], ff_mul(f, b.vals[j], p_), p_);
        for (const auto& [t, v] : b.comb) {
            std::uint64_t& slot = comb[t];
            slot = ff_add(slot, ff_mul(f, v, p_), p_);
            if (!slot) comb.erase(t);
        }
    }
    return comb;
}

std::vector<std::uint64_t> OnlineSolver::residual(const SparseRow& row) const {
    std::vector<std::uint64_t> w(cols_, 0);
    for (const auto& [c, v] : row) w[c] = v % p_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!w[c]) continue;
        auto it = pivot_of_.find(c);
        if (it == pivot_of_.end()) continue;
        const BasisRow& b = basis_[it->second];
        std::uint64_t f = w[c];
        for (std::size_t j = c; j < cols_; ++j)
            if (b.vals[j]) w[j] = ff_sub(w[j], ff_mul(f, b.vals[j], p_), p_);
    }
    return w;
}

SparseRow SparseSolver::reduce(
    const SparseRow& row,
    std::vector<std::pair<std::size_t, std::uint64_t>>* steps) const {
    std::map<std::size_t, std::uint64_t> acc;
    for (const auto& [c, v] : row)
        if (v % p_) acc[c] = v % p_;
    for (auto it = acc.begin(); it != acc.end();) {
        if (!it->second) {
            it = acc.erase(it);
            continue;
        }
        auto pv = pivots_.find(it->first);
        if (pv == pivots_.end()) {
            ++it;
            continue;
        }
        std::uint64_t f = it->second;
        if (steps) steps->emplace_back(pv->first, f);
        it = acc.erase(it);
        for (const auto& [col, v] : pv->second.row) {
            if (col == pv->first) continue;
            std::uint64_t& slot = acc[col];
            slot = ff_sub(slot, ff_mul(f, v, p_), p_);
        }
        // elimination only introduces columns to the right of the cleared one
        it = acc.lower_bound(pv->first);
    }
    return SparseRow(acc.begin(), acc.end());
}

bool SparseSolver::add_row(const SparseRow& row, std::size_t tag) {
    std::vector<std::pair<std::size_t, std::uint64_t>> steps;
    SparseRow red = reduce(row, &steps);
    if (red.empty()) return false;
    std::uint64_t scale = ff_inv(red.front().second, p_);
    for (auto& [c, v] : red) v = ff_mul(v, scale, p_);
    std::size_t lead = red.front().first;
    pivots_.emplace(lead, Pivot{std::move(red), tag, scale, std::move(steps)});
    return true;
}

const std::map<std::size_t, std::uint64_t>& SparseSolver::comb(std::size_t col) {
    auto it = comb_cache_.find(col);
    if (it != comb_cache_.end()) return it->second;
    const Pivot& pv = pivots_.at(col);
    std::map<std::size_t, std::uint64_t> out{{pv.tag, 1}};
    for (const auto& [c, f] : pv.steps)
        for (const auto& [t, v] : comb(c)) {
            std::uint64_t& slot = out[t];
            slot = ff_sub(slot, ff_mul(f, v, p_), p_);
            if (!slot) out.erase(t);
        }
    for (auto& [t, v] : out) v = ff_mul(v, pv.scale, p_);
    return comb_cache_.emplace(col, std::move(out)).first->second;
}

std::optional<std::map<std::size_t, std::uint64_t>>
SparseSolver::solve(const SparseRow& target) {
    std::vector<std::pair<std::size_t, std::uint64_t>> steps;
    if (!reduce(target, &steps).empty()) return std::nullopt;
    std::map<std::size_t, std::uint64_t> out;
    for (const auto& [c, f] : steps)
        for (const auto& [t, v] : comb(c)) {
            std::uint64_t& slot = out[t];
            slot = ff_add(slot, ff_mul(f, v, p_), p_);
            if (!slot) out.erase(t);
        }
    return out;
}

namespace {

// Kernel basis of an m x n full-row-rank matrix via RREF.
std::vector<std::vector<std::uint64_t>> kernel_basis(std::vector<std::vector<std::uint64_t>> m,
                                                     std::size_t n, std::uint64_t p) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] % p == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        std::uint64_t inv = ff_inv(m[rank][c], p);
        for (auto& v : m[rank]) v = ff_mul(v % p, inv, p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            std::uint64_t f = m[r][c] % p;
            if (!f) continue;
            for (std::size_t j = 0; j < n; ++j)
                m[r][j] = ff_sub(m[r][j], ff_mul(f, m[rank][j], p), p);
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> ker;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_cols[r]] = ff_neg(m[r][c], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

} // namespace

bool kernel_tensor_check_matrix(const std::vector<std::vector<std::uint64_t>>& f,
                                std::uint64_t p) {
    std::size_t m = f.size();
    if (m == 0) throw std::invalid_argument("kernel_tensor_check: empty matrix");
    std::size_t n = f[0].size();
    if (mod_rank(f, p) != m)
        throw std::invalid_argument("kernel_tensor_check: matrix not surjective");

    // f (x) f as an m^2 x n^2 matrix
    std::vector<std::vector<std::uint64_t>> ff(m * m, std::vector<std::uint64_t>(n * n, 0));
    for (std::size_t r1 = 0; r1 < m; ++r1)
        for (std::size_t r2 = 0; r2 < m; ++r2)
            for (std::size_t c1 = 0; c1 < n; ++c1)
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    ff[r1 * m + r2][c1 * n + c2] = ff_mul(f[r1][c1], f[r2][c2], p);
    std::size_t ker_ff_dim = n * n - mod_rank(ff, p);

    auto ker = kernel_basis(f, n, p);
    // generators of V (x) K + K (x) V
    std::vector<std::vector<std::uint64_t>> span;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& k : ker) {
            std::vector<std::uint64_t> a(n * n, 0), b(n * n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                a[i * n + j] = k[j];
                b[j * n + i] = k[j];
            }
            span.push_back(std::move(a));
            span.push_back(std::move(b));
        }
    }
    std::size_t span_dim = span.empty() ? 0 : mod_rank(span, p);

    // containment: f (x) f annihilates every generator of the span
    for (const auto& v : span)
        for (const auto& row : ff) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n * n; ++j)
                acc = ff_add(acc, ff_mul(row[j], v[j], p), p);
            if (acc != 0) return false;
        }
    return span_dim == ker_ff_dim;
}

bool kernel_tensor_check(int trials, int max_dim, std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<std::uint64_t> entry(0, p - 1);
    for (int t = 0; t < trials; ++t) {
        int n = dim(rng);
        std::uniform_int_distribution<int> md(1, n);
        int m = md(rng);
        std::vector<std::vector<std::uint64_t>> f;
        do {
            f.assign(m, std::vector<std::uint64_t>(n));
            for (auto& row : f)
                for (auto& v : row) v = entry(rng);
        } while (mod_rank(f, p) != static_cast<std::size_t>(m));
        if (!kernel_tensor_check_matrix(f, p)) return false;
    }
    return true;
}

} // namespace ehall
