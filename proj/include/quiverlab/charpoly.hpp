#pragma once

// Characteristic and minimal polynomials of exact rational matrices.

#include "quiverlab/matrix.hpp"
#include "quiverlab/polynomial.hpp"

#include <utility>
#include <vector>

namespace quiverlab {

namespace detail {

// Upper Hessenberg form by elementary similarity transforms (no square
// roots, so it stays inside the rationals).
inline RatMatrix hessenberg(RatMatrix h)
{
    const std::size_t n = h.rows();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const Rational pivot_inv = Rational(1) / h(m, m - 1);
        for (std::size_t j = m + 1; j < n; ++j) {
            if (h(j, m - 1) == 0) continue;
            const Rational u = h(j, m - 1) * pivot_inv;
            for (std::size_t k = 0; k < n; ++k) h(j, k) -= u * h(m, k);
            for (std::size_t k = 0; k < n; ++k) h(k, m) += u * h(k, j);
        }
    }
    return h;
}

// Incrementally maintained echelon basis that remembers how each stored
// vector was combined from the inserted originals.
class KrylovBasis {
public:
    explicit KrylovBasis(std::size_t dim) : dim_(dim) {}

    // Reduces v against the basis. If v is dependent, returns the
    // coefficients c with v = sum c_j * original_j; otherwise stores v and
    // returns an empty vector.
    std::vector<Rational> insert(std::vector<Rational> v)
    {
        std::vector<Rational> comb(originals_ + 1, Rational(0));
        comb[originals_] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& x = v[pivots_[r]];
            if (x == 0) continue;
            const Rational f = x / rows_[r][pivots_[r]];
            for (std::size_t k = 0; k < dim_; ++k)
                if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
            for (std::size_t k = 0; k < combs_[r].size(); ++k)
                if (combs_[r][k] != 0) comb[k] -= f * combs_[r][k];
        }
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) {
            // 0 = comb . originals, comb[last] = 1
            std::vector<Rational> dep(originals_);
            for (std::size_t k = 0; k < originals_; ++k) dep[k] = -comb[k];
            return dep;
        }
        rows_.push_back(std::move(v));
        combs_.push_back(std::move(comb));
        pivots_.push_back(p);
        ++originals_;
        return {};
    }

    std::size_t size() const noexcept { return originals_; }

private:
    std::size_t dim_;
    std::size_t originals_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::vector<Rational>> combs_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

/// det(xI - M), monic of degree dim M.
inline Polynomial char_poly(const RatMatrix& m)
{
    if (!m.is_square()) throw Error("char_poly: matrix is not square");
    const std::size_t n = m.rows();
    const RatMatrix h = detail::hessenberg(m);

    // p[k] is the characteristic polynomial of the leading k x k block.
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = Polynomial({-h(k - 1, k - 1), Rational(1)}) * p[k - 1];
        Rational sub = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            sub *= h(i, i - 1);
            if (sub == 0) break;
            if (h(i - 1, k - 1) != 0) p[k] -= p[i - 1] * (h(i - 1, k - 1) * sub);
        }
    }
    return p[n];
}

/// Monic annihilating polynomial of least degree, as the lcm of the local
/// minimal polynomials of the standard basis vectors.
inline Polynomial min_poly(const RatMatrix& m)
{
    if (!m.is_square()) throw Error("min_poly: matrix is not square");
    const std::size_t n = m.rows();
    Polynomial result = Polynomial::constant(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> v(n, Rational(0));
        v[k] = 1;
        detail::KrylovBasis krylov(n);
        while (true) {
            auto next = m * v;
            auto dep = krylov.insert(v);
            if (!dep.empty() || krylov.size() == 0) {
                // m^j v = sum dep_i m^i v
                std::vector<Rational> c(dep.size() + 1);
                for (std::size_t i = 0; i < dep.size(); ++i) c[i] = -dep[i];
                c[dep.size()] = 1;
                result = lcm(result, Polynomial(std::move(c)));
                break;
            }
            if (krylov.size() > n) throw Error("min_poly: Krylov sequence failed to terminate");
            v = std::move(next);
        }
    }
    return result;
}

} // namespace quiverlab
