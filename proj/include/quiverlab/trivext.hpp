#pragma once

// Trivial extension TA = A x DA with multiplication
// (a, f)(b, g) = (ab, a.g + f.b), where (a.g)(x) = g(xa), (f.b)(x) = f(bx).

#include "quiverlab/algebra.hpp"
#include "quiverlab/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quiverlab {

/// Basis of TA: basis(A) followed by the dual basis. The dual of a path
/// i -> j sits at j -> i and has degree 1 - deg(path).
inline SCAlgebra trivial_extension(const SCAlgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<BasisElement> basis = a.basis();
    for (const auto& b : a.basis()) basis.push_back({"D(" + b.label + ")", b.target, b.source, 1 - b.degree});

    const std::size_t m = 2 * n;
    std::vector<LinComb> table(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * m + j] = a.product(i, j);

    // b_i . d_c = sum_x [coefficient of c in b_x b_i] d_x
    // d_c . b_j = sum_x [coefficient of c in b_j b_x] d_x
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& e : a.product(x, i)) table[i * m + (n + e.index)].push_back({static_cast<Index>(n + x), e.value});
            for (const auto& e : a.product(i, x)) table[(n + e.index) * m + i].push_back({static_cast<Index>(n + x), e.value});
        }
    // entries were appended in increasing x, so every LinComb is already sorted

    return SCAlgebra(a.vertices(), std::move(basis), a.idempotents(), std::move(table));
}

/// Gram matrix of <u, w> = epsilon(u w), where epsilon(a, f) = f(1). On a
/// trivial extension this is the form (a, f), (b, g) -> f(b) + g(a).
inline RatMatrix trivial_extension_form(const SCAlgebra& ta)
{
    if (ta.dim() % 2) throw Error("trivial_extension_form: dimension is odd");
    const std::size_t n = ta.dim() / 2;
    RatMatrix g(ta.dim(), ta.dim());
    for (std::size_t i = 0; i < ta.dim(); ++i)
        for (std::size_t j = 0; j < ta.dim(); ++j)
            for (const auto& e : ta.product(i, j))
                if (e.index >= n)
                    for (auto v : ta.idempotents())
                        if (e.index == n + v) g(i, j) += e.value;
    return g;
}

/// Symmetric, nondegenerate and associative (<xy, z> = <x, yz>).
inline std::optional<std::string> check_symmetric_form(const SCAlgebra& ta)
{
    const RatMatrix g = trivial_extension_form(ta);
    if (!(g == g.transpose())) return "form is not symmetric";
    if (determinant(g) == 0) return "form is degenerate";
    const std::size_t d = ta.dim();
    auto pair = [&](const LinComb& u, const LinComb& w) {
        Rational s = 0;
        for (const auto& a : u)
            for (const auto& b : w) s += a.value * b.value * g(a.index, b.index);
        return s;
    };
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                if (pair(ta.product(x, y), basis_vector(z)) != pair(basis_vector(x), ta.product(y, z)))
                    return "form is not associative";
    return std::nullopt;
}

} // namespace quiverlab
