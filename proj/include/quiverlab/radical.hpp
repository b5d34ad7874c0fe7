#pragma once

// Jacobson radical via Dickson's trace criterion (characteristic zero):
// rad A = { x : tr(L_{b x}) = 0 for every basis element b }.

#include "quiverlab/algebra.hpp"
#include "quiverlab/matrix.hpp"

#include <vector>

namespace quiverlab {

namespace detail {

inline LinComb to_lincomb(const std::vector<Rational>& dense)
{
    LinComb v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) v.push_back({static_cast<Index>(i), dense[i]});
    return v;
}

// T(i, j) = tr(L_{b_i b_j})
inline RatMatrix trace_form(const SCAlgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<Rational> tr(n, Rational(0));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) tr[m] += sparse_get(a.product(m, k), static_cast<Index>(k));
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : a.product(i, j)) t(i, j) += e.value * tr[e.index];
    return t;
}

inline bool in_kernel(const RatMatrix& t, const LinComb& v)
{
    for (std::size_t i = 0; i < t.rows(); ++i) {
        Rational s = 0;
        for (const auto& e : v) s += t(i, e.index) * e.value;
        if (s != 0) return false;
    }
    return true;
}

// Rank of a family of sparse vectors of length n.
inline std::size_t span_rank(const std::vector<LinComb>& vs, std::size_t n)
{
    RatMatrix m(vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (const auto& e : vs[r]) m(r, e.index) = e.value;
    return rank(m);
}

} // namespace detail

/// Basis of rad A made of vectors that each live in one block e_j A e_i.
/// The result is checked to be a nilpotent two-sided ideal.
inline std::vector<LinComb> jacobson_radical(const SCAlgebra& a)
{
    const std::size_t n = a.dim();
    const RatMatrix t = detail::trace_form(a);

    std::vector<LinComb> rad;
    for (std::size_t tv = 0; tv < a.vertex_count(); ++tv)
        for (std::size_t sv = 0; sv < a.vertex_count(); ++sv) {
            const auto idx = a.block(tv, sv);
            if (idx.empty()) continue;
            RatMatrix sub(n, idx.size());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < idx.size(); ++c) sub(i, c) = t(i, idx[c]);
            for (const auto& k : nullspace(sub)) {
                std::vector<Rational> full(n, Rational(0));
                for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = k[c];
                rad.push_back(detail::to_lincomb(full));
            }
        }

    for (const auto& r : rad)
        for (std::size_t b = 0; b < n; ++b) {
            if (!detail::in_kernel(t, a.multiply(basis_vector(b), r)) || !detail::in_kernel(t, a.multiply(r, basis_vector(b))))
                throw Error("jacobson_radical: trace kernel is not an ideal");
        }

    // rad^k must vanish for some k <= dim + 1.
    std::vector<LinComb> layer = rad;
    for (std::size_t step = 0; !layer.empty(); ++step) {
        if (step > n + 1) throw Error("jacobson_radical: trace kernel is not nilpotent");
        std::vector<LinComb> next;
        for (const auto& r : rad)
            for (const auto& y : layer) {
                auto p = a.multiply(r, y);
                if (!p.empty()) next.push_back(std::move(p));
            }
        // keep a basis only
        RatMatrix m(next.size(), n);
        for (std::size_t r = 0; r < next.size(); ++r)
            for (const auto& e : next[r]) m(r, e.index) = e.value;
        rref(m);
        layer.clear();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<Rational> row(n);
            bool nz = false;
            for (std::size_t c = 0; c < n; ++c) {
                row[c] = m(r, c);
                nz = nz || row[c] != 0;
            }
            if (nz) layer.push_back(detail::to_lincomb(row));
        }
    }
    return rad;
}

/// Radical data used by the resolution engine.
struct RadicalData {
    std::vector<LinComb> basis;
    /// Homogeneous elements spanning rad modulo rad^2 (the arrows, for path-like algebras).
    std::vector<LinComb> generators;
    /// top[v][b]: coefficient of e_v when b in e_v A e_v is written as c e_v + (radical).
    std::vector<std::vector<Rational>> top;
};

/// Radical, its generators and the top functionals. Requires A basic:
/// A / rad A is a product of copies of the ground field, one per vertex.
inline RadicalData radical_data(const SCAlgebra& a)
{
    const std::size_t n = a.dim();
    RadicalData out;
    out.basis = jacobson_radical(a);

    auto block_of = [&](const LinComb& v) {
        const auto& b = a.basis(v.front().index);
        return std::pair{b.target, b.source};
    };

    // rad^2, blockwise
    std::vector<LinComb> squares;
    for (const auto& r : out.basis)
        for (const auto& s : out.basis) {
            auto p = a.multiply(r, s);
            if (!p.empty()) squares.push_back(std::move(p));
        }

    out.top.assign(a.vertex_count(), std::vector<Rational>(n, Rational(0)));
    for (std::size_t tv = 0; tv < a.vertex_count(); ++tv)
        for (std::size_t sv = 0; sv < a.vertex_count(); ++sv) {
            const auto idx = a.block(tv, sv);
            if (idx.empty()) continue;
            std::vector<LinComb> rad_here, sq_here;
            for (const auto& r : out.basis)
                if (block_of(r) == std::pair{tv, sv}) rad_here.push_back(r);
            for (const auto& s : squares)
                if (block_of(s) == std::pair{tv, sv}) sq_here.push_back(s);

            const std::size_t expected = idx.size() - (tv == sv ? 1 : 0);
            if (rad_here.size() != expected)
                throw Error("algebra is not basic at block (" + a.vertices()[tv] + ", " + a.vertices()[sv] + ")");

            // extend a basis of rad^2 here by radical vectors
            std::vector<LinComb> span = sq_here;
            std::size_t r0 = detail::span_rank(span, n);
            for (const auto& r : rad_here) {
                span.push_back(r);
                const std::size_t r1 = detail::span_rank(span, n);
                if (r1 > r0) {
                    out.generators.push_back(r);
                    r0 = r1;
                } else {
                    span.pop_back();
                }
            }

            if (tv == sv) {
                // columns: e_v, then the radical basis of the block
                RatMatrix m(idx.size(), idx.size());
                auto pos = [&](Index i) {
                    for (std::size_t k = 0; k < idx.size(); ++k)
                        if (idx[k] == i) return k;
                    throw Error("radical_data: element outside its block");
                };
                m(pos(static_cast<Index>(a.idempotent(tv))), 0) = 1;
                for (std::size_t c = 0; c < rad_here.size(); ++c)
                    for (const auto& e : rad_here[c]) m(pos(e.index), c + 1) = e.value;
                const RatMatrix inv = inverse(m);
                for (std::size_t k = 0; k < idx.size(); ++k) out.top[tv][idx[k]] = inv(0, k);
            }
        }
    return out;
}

} // namespace quiverlab
