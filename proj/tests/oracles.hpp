#pragma once

// Reference computations that share no code path with the library
// routines they check.

#include "quiverlab/quiverlab.hpp"

#include <random>
#include <vector>

namespace oracle {

using quiverlab::Integer;
using quiverlab::Polynomial;
using quiverlab::Quiver;
using quiverlab::RatMatrix;
using quiverlab::Rational;

// x^2 - tr x + det
inline Polynomial char_poly_2x2(const RatMatrix& m)
{
    const Rational tr = m(0, 0) + m(1, 1);
    const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return Polynomial({det, -tr, Rational(1)});
}

// Fraction-free Bareiss elimination on an integer matrix.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m, std::size_t size)
{
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a[i][j] = m(i, j).get_num();
    return a;
}

// Sylvester: every leading principal minor positive.
inline bool positive_definite(const RatMatrix& m)
{
    for (std::size_t k = 1; k <= m.rows(); ++k)
        if (bareiss_det(integer_rows(m, k)) <= 0) return false;
    return true;
}

// All principal minors nonnegative.
inline bool positive_semidefinite(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        std::vector<std::vector<Integer>> a(idx.size(), std::vector<Integer>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) a[i][j] = m(idx[i], idx[j]).get_num();
        if (bareiss_det(a) < 0) return false;
    }
    return true;
}

inline int mobius(unsigned n)
{
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    return n > 1 ? -mu : mu;
}

// Phi_d = prod_{k | d} (x^k - 1)^{mu(d/k)}
inline Polynomial cyclotomic_mobius(unsigned d)
{
    Polynomial num = Polynomial::constant(1), den = Polynomial::constant(1);
    for (unsigned k = 1; k <= d; ++k) {
        if (d % k) continue;
        const int mu = mobius(d / k);
        if (mu == 1) num = num * Polynomial::x_pow_minus_one(k);
        if (mu == -1) den = den * Polynomial::x_pow_minus_one(k);
    }
    return divmod(num, den).first;
}

// Number of paths from s to t, by depth-first enumeration.
inline long count_paths(const Quiver& q, std::size_t s, std::size_t t)
{
    long n = (s == t) ? 1 : 0;
    for (const auto& a : q.arrows())
        if (a.source == s) n += count_paths(q, a.target, t);
    return n;
}

inline long count_all_paths(const Quiver& q)
{
    long n = 0;
    for (std::size_t s = 0; s < q.vertex_count(); ++s)
        for (std::size_t t = 0; t < q.vertex_count(); ++t) n += count_paths(q, s, t);
    return n;
}

inline Rational random_rational(std::mt19937& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, 5);
    return Rational(num(rng), den(rng));
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int range = 9)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = random_rational(rng, range);
            m(i, j).canonicalize();
        }
    return m;
}

// Unimodular integer matrix: product of random elementary matrices.
inline RatMatrix random_unimodular(std::mt19937& rng, std::size_t n)
{
    RatMatrix p = RatMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        const std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        RatMatrix e = RatMatrix::identity(n);
        e(i, j) = coef(rng);
        p = p * e;
    }
    return p;
}

} // namespace oracle
