#pragma once

// Sparse vectors and column-major sparse matrices over an exact field.
// Modules met during projective resolutions reach tens of thousands of
// dimensions but each action matrix has only a handful of entries per
// column.

#include "quiverlab/matrix.hpp"
#include "quiverlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace quiverlab {

using Index = std::uint32_t;

template <class F>
struct SparseEntry {
    Index index;
    F value;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no explicit zeros.
template <class F>
using SparseVector = std::vector<SparseEntry<F>>;

template <class F>
F sparse_get(const SparseVector<F>& v, Index i)
{
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.index < k; });
    return (it != v.end() && it->index == i) ? it->value : F(0);
}

/// y + a x
template <class F>
SparseVector<F> sparse_axpy(const SparseVector<F>& y, const F& a, const SparseVector<F>& x)
{
    SparseVector<F> out;
    out.reserve(y.size() + x.size());
    auto i = y.begin();
    auto j = x.begin();
    while (i != y.end() || j != x.end()) {
        if (j == x.end() || (i != y.end() && i->index < j->index)) {
            out.push_back(*i++);
        } else if (i == y.end() || j->index < i->index) {
            out.push_back({j->index, a * j->value});
            ++j;
        } else {
            F v = i->value + a * j->value;
            if (v != 0) out.push_back({i->index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Accumulates an unsorted stream of (index, value) terms into a sparse vector.
template <class F>
SparseVector<F> sparse_from_terms(std::vector<SparseEntry<F>> terms)
{
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    SparseVector<F> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().index == t.index)
            out.back().value += t.value;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const auto& e) { return e.value == 0; });
    return out;
}

/// Column-major sparse matrix.
template <class F>
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<Index>(i), F(1)});
        return m;
    }

    static SparseMatrix from_dense(const Matrix<F>& d)
    {
        SparseMatrix m(d.rows(), d.cols());
        for (std::size_t j = 0; j < d.cols(); ++j)
            for (std::size_t i = 0; i < d.rows(); ++i)
                if (d(i, j) != 0) m.columns_[j].push_back({static_cast<Index>(i), d(i, j)});
        return m;
    }

    Matrix<F> to_dense() const
    {
        Matrix<F> d(rows_, columns_.size());
        for (std::size_t j = 0; j < columns_.size(); ++j)
            for (const auto& e : columns_[j]) d(e.index, j) = e.value;
        return d;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const SparseVector<F>& column(std::size_t j) const { return columns_[j]; }
    SparseVector<F>& column(std::size_t j) { return columns_[j]; }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    SparseVector<F> apply(const SparseVector<F>& x) const
    {
        std::vector<SparseEntry<F>> terms;
        for (const auto& e : x)
            for (const auto& c : columns_[e.index]) terms.push_back({c.index, e.value * c.value});
        return sparse_from_terms(std::move(terms));
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols() != b.rows()) throw Error("sparse product: inner dimensions differ");
        SparseMatrix c(a.rows(), b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) c.columns_[j] = a.apply(b.columns_[j]);
        return c;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector<F>> columns_;
};

} // namespace quiverlab
