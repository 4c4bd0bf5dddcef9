#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncgeo/errors.hpp"

namespace ncgeo {

// Dense matrix over an exact field. All elimination below is exact; pivoting
// is deterministic (first nonzero column, first row in order), so bases come
// out in a reproducible order.
template <class F>
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const F& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    // Reduced row echelon form in place; returns the pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t sel = r;
            while (sel < rows_ && at(sel, c) == F(0)) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            F inv = F(1) / at(r, c);
            for (size_t j = c; j < cols_; ++j)
                if (!(at(r, j) == F(0))) at(r, j) = at(r, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                F f = at(i, c);
                if (f == F(0)) continue;
                for (size_t j = c; j < cols_; ++j)
                    if (!(at(r, j) == F(0))) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

  private:
    size_t rows_, cols_;
    std::vector<F> a_;
};

template <class F>
size_t rank(ExactMatrix<F> m) {
    return m.rref().size();
}

// Basis of the right nullspace {v : Mv = 0}. One basis vector per free
// column, carrying a 1 in that column; this is the standard reduced-echelon
// parametrisation and is unique given the pivoting order.
template <class F>
std::vector<std::vector<F>> nullspace(ExactMatrix<F> m) {
    const size_t n = m.cols();
    std::vector<size_t> pivots = m.rref();
    std::vector<long> pivot_row(n, -1);
    for (size_t k = 0; k < pivots.size(); ++k) pivot_row[pivots[k]] = static_cast<long>(k);
    std::vector<std::vector<F>> basis;
    for (size_t c = 0; c < n; ++c) {
        if (pivot_row[c] >= 0) continue;
        std::vector<F> v(n, F(0));
        v[c] = F(1);
        for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m.at(p, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves Mx = b exactly. Returns a particular solution with all free
// variables set to zero, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const ExactMatrix<F>& m, const std::vector<F>& b) {
    ExactMatrix<F> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<F> x(m.cols(), F(0));
    for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug.at(p, m.cols());
    return x;
}

// True when v lies in the span of the given vectors.
template <class F>
bool in_span(const std::vector<std::vector<F>>& basis, const std::vector<F>& v) {
    if (basis.empty()) {
        for (const F& e : v)
            if (!(e == F(0))) return false;
        return true;
    }
    const size_t n = basis[0].size();
    ExactMatrix<F> with(basis.size() + 1, n), without(basis.size(), n);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < n; ++j) {
            with.at(i, j) = basis[i][j];
            without.at(i, j) = basis[i][j];
        }
    for (size_t j = 0; j < n; ++j) with.at(basis.size(), j) = v[j];
    return rank(std::move(with)) == rank(std::move(without));
}

template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b) {
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    return true;
}

// Incremental builder for the exact linear systems assembled by the solvers.
// Rows are discovered on the fly and keyed so assembly order cannot affect
// the resulting matrix.
template <class F>
class LinearSystem {
  public:
    using RowKey = std::array<long, 4>;

    explicit LinearSystem(size_t cols) : cols_(cols) {}

    void add(const RowKey& key, size_t col, const F& coeff) {
        if (coeff == F(0)) return;
        auto [it, fresh] = row_index_.try_emplace(key, rows_.size());
        if (fresh) rows_.emplace_back();
        rows_[it->second][col] += coeff;
    }

    void add_rhs(const RowKey& key, const F& value) {
        if (value == F(0)) return;
        auto [it, fresh] = row_index_.try_emplace(key, rows_.size());
        if (fresh) rows_.emplace_back();
        rhs_[it->second] += value;
    }

    size_t cols() const { return cols_; }
    size_t row_count() const { return rows_.size(); }

    ExactMatrix<F> matrix() const {
        ExactMatrix<F> m(rows_.size(), cols_);
        size_t i = 0;
        for (const auto& [key, idx] : row_index_) {
            (void)key;
            for (const auto& [col, val] : rows_[idx]) m.at(i, col) = val;
            ++i;
        }
        return m;
    }

    std::vector<F> rhs() const {
        std::vector<F> b(rows_.size(), F(0));
        size_t i = 0;
        for (const auto& [key, idx] : row_index_) {
            (void)key;
            auto it = rhs_.find(idx);
            if (it != rhs_.end()) b[i] = it->second;
            ++i;
        }
        return b;
    }

  private:
    size_t cols_;
    std::map<RowKey, size_t> row_index_;
    std::vector<std::map<size_t, F>> rows_;
    std::map<size_t, F> rhs_;
};

} // namespace ncgeo
