#pragma once

// Standard quivers used throughout the tests and the bundled data files.

#include "quiverlab/quiver.hpp"

#include <string>
#include <vector>

namespace quiverlab::catalog {

/// A_n with linear orientation 1 -> 2 -> ... -> n.
inline Quiver linear(std::size_t n)
{
    std::vector<std::string> v;
    std::vector<Arrow> a;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) a.push_back({"a" + std::to_string(i + 1), i, i + 1, 0});
    return Quiver(v, a);
}

/// m parallel arrows 1 -> 2 (m = 2 is the Kronecker quiver).
inline Quiver kronecker(std::size_t m = 2)
{
    std::vector<Arrow> a;
    for (std::size_t i = 0; i < m; ++i) a.push_back({"a" + std::to_string(i + 1), 0, 1, 0});
    return Quiver({"1", "2"}, a);
}

/// Star with the given arm lengths; vertex "c" is the centre (listed last)
/// and every arrow points toward it.
inline Quiver star(const std::vector<std::size_t>& arms)
{
    std::vector<std::string> v;
    std::vector<Arrow> a;
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < arms.size(); ++i)
        for (std::size_t j = 1; j <= arms[i]; ++j) v.push_back(std::to_string(i + 1) + "_" + std::to_string(j));
    const std::size_t centre = v.size();
    v.push_back("c");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        for (std::size_t j = 1; j <= arms[i]; ++j, ++idx) {
            const std::size_t target = (j == 1) ? centre : idx - 1;
            a.push_back({"x" + std::to_string(i + 1) + "_" + std::to_string(j), idx, target, 0});
        }
    }
    return Quiver(v, a);
}

inline Quiver dynkin_d(std::size_t n) { return star({1, 1, n - 3}); }
inline Quiver dynkin_e(std::size_t n) { return star({1, 2, n - 4}); }

/// Affine D4: four arms of length one, radical vector (1,1,1,1,2).
inline Quiver affine_d4() { return star({1, 1, 1, 1}); }
/// Affine E6: three arms of length two.
inline Quiver affine_e6() { return star({2, 2, 2}); }

/// Cycle 1 -> 2 -> ... -> n -> 1 made acyclic by flipping the last arrow
/// unless `oriented` is set. Degrees are assigned per arrow.
inline Quiver cycle(std::size_t n, bool oriented = false, std::vector<int> degrees = {})
{
    std::vector<std::string> v;
    std::vector<Arrow> a;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = i, t = (i + 1) % n;
        if (!oriented && i + 1 == n) std::swap(s, t);
        a.push_back({"a" + std::to_string(i + 1), s, t, i < degrees.size() ? degrees[i] : 0});
    }
    return Quiver(v, a);
}

} // namespace quiverlab::catalog
