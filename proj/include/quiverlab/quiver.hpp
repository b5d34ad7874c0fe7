#pragma once

// Quivers, their Tits form, the finite/affine/indefinite trichotomy, and the
// Cartan and Coxeter matrices of acyclic path algebras.

#include "quiverlab/matrix.hpp"
#include "quiverlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace quiverlab {

struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    int degree = 0;
};

/// Finite directed multigraph. Loops and parallel arrows are allowed;
/// arrow degrees default to 0.
class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows))
    {
        std::set<std::string> seen;
        for (const auto& v : vertices_)
            if (!seen.insert(v).second) throw Error("duplicate vertex '" + v + "'");
        seen.clear();
        for (const auto& a : arrows_) {
            if (a.source >= vertices_.size() || a.target >= vertices_.size())
                throw Error("arrow '" + a.id + "' references an unknown vertex");
            if (!seen.insert(a.id).second) throw Error("duplicate arrow id '" + a.id + "'");
        }
    }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    std::optional<std::size_t> find_vertex(const std::string& name) const
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_arrow(const std::string& id) const
    {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].id == id) return i;
        return std::nullopt;
    }

    /// Connectedness of the underlying undirected graph.
    bool is_connected() const
    {
        if (vertices_.empty()) return false;
        std::vector<std::size_t> parent(vertices_.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = vertices_.size();
        for (const auto& a : arrows_) {
            auto r1 = find(a.source), r2 = find(a.target);
            if (r1 != r2) {
                parent[r1] = r2;
                --components;
            }
        }
        return components == 1;
    }

    /// Vertices in an order where every arrow points forward, or nullopt
    /// when there is an oriented cycle (loops included).
    std::optional<std::vector<std::size_t>> topological_order() const
    {
        std::vector<std::size_t> indegree(vertices_.size(), 0);
        for (const auto& a : arrows_) ++indegree[a.target];
        std::vector<std::size_t> order, ready;
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (indegree[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            const std::size_t v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
        }
        if (order.size() != vertices_.size()) return std::nullopt;
        return order;
    }

    bool is_acyclic() const { return topological_order().has_value(); }

    /// Underlying graph is a tree (connected, |arrows| = |vertices| - 1).
    bool is_tree() const { return is_connected() && arrows_.size() + 1 == vertices_.size(); }

    /// Underlying graph is a single cycle without loops (type A-tilde, n >= 1).
    bool is_cycle_graph() const
    {
        if (!is_connected() || arrows_.size() != vertices_.size()) return false;
        std::vector<int> valency(vertices_.size(), 0);
        for (const auto& a : arrows_) {
            if (a.source == a.target) return false;
            ++valency[a.source];
            ++valency[a.target];
        }
        return std::all_of(valency.begin(), valency.end(), [](int k) { return k == 2; });
    }

    Quiver reversed() const
    {
        std::vector<Arrow> rev = arrows_;
        for (auto& a : rev) std::swap(a.source, a.target);
        return Quiver(vertices_, std::move(rev));
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Doubled Tits matrix 2T with q(x) = x^T T x: diagonal 2 - 2 #loops(i),
/// off-diagonal minus the number of arrows between i and j.
inline RatMatrix tits_matrix(const Quiver& q)
{
    const std::size_t n = q.vertex_count();
    RatMatrix t = RatMatrix::identity(n) * Rational(2);
    for (const auto& a : q.arrows()) {
        if (a.source == a.target) {
            t(a.source, a.source) -= 2;
        } else {
            t(a.source, a.target) -= 1;
            t(a.target, a.source) -= 1;
        }
    }
    return t;
}

struct FiniteType {
    friend bool operator==(const FiniteType&, const FiniteType&) = default;
};
struct AffineType {
    std::vector<long> radical_vector;
    friend bool operator==(const AffineType&, const AffineType&) = default;
};
struct IndefiniteType {
    friend bool operator==(const IndefiniteType&, const IndefiniteType&) = default;
};
using QuiverType = std::variant<FiniteType, AffineType, IndefiniteType>;

inline const char* type_name(const QuiverType& t)
{
    if (std::holds_alternative<FiniteType>(t)) return "finite";
    if (std::holds_alternative<AffineType>(t)) return "affine";
    return "indefinite";
}

namespace detail {

struct Definiteness {
    bool semidefinite = false;
    std::size_t nullity = 0;
};

// Symmetric elimination on positive diagonal pivots. A symmetric matrix is
// positive semidefinite iff a positive pivot leaves a semidefinite Schur
// complement, and a block with zero diagonal is semidefinite only if zero.
inline Definiteness definiteness(RatMatrix s)
{
    std::vector<std::size_t> alive(s.rows());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    while (!alive.empty()) {
        std::optional<std::size_t> pivot;
        for (auto i : alive) {
            if (s(i, i) < 0) return {false, 0};
            if (s(i, i) > 0 && !pivot) pivot = i;
        }
        if (!pivot) {
            for (auto i : alive)
                for (auto j : alive)
                    if (s(i, j) != 0) return {false, 0};
            return {true, alive.size()};
        }
        const std::size_t p = *pivot;
        alive.erase(std::find(alive.begin(), alive.end(), p));
        const Rational inv = Rational(1) / s(p, p);
        for (auto i : alive) {
            if (s(i, p) == 0) continue;
            const Rational f = s(i, p) * inv;
            for (auto j : alive) s(i, j) -= f * s(p, j);
        }
    }
    return {true, 0};
}

inline std::vector<long> primitive_nonnegative(const std::vector<Rational>& v)
{
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = x.get_num() * (den / x.get_den());
        ints.push_back(z);
        g = gcd(g, z);
    }
    bool negative = false;
    for (const auto& z : ints)
        if (z != 0) {
            negative = z < 0;
            break;
        }
    std::vector<long> out;
    for (auto& z : ints) {
        Integer r = z / g;
        if (negative) r = -r;
        if (r < 0) throw Error("radical vector is not sign-coherent");
        out.push_back(to_int64(r));
    }
    return out;
}

} // namespace detail

/// Trichotomy by definiteness of the Tits form. Degrees are ignored.
inline QuiverType classify_quiver(const Quiver& q)
{
    if (!q.is_connected()) throw Error("classify_quiver: quiver is not connected");
    const RatMatrix t = tits_matrix(q);
    const auto d = detail::definiteness(t);
    if (!d.semidefinite) return IndefiniteType{};
    if (d.nullity == 0) return FiniteType{};
    const auto kernel = nullspace(t);
    if (kernel.size() != 1) throw Error("classify_quiver: radical of a connected quiver must be one-dimensional");
    return AffineType{detail::primitive_nonnegative(kernel.front())};
}

/// C[j][i] = number of paths from vertex i to vertex j; columns are the
/// dimension vectors of the indecomposable projectives.
inline RatMatrix cartan_path_algebra(const Quiver& q)
{
    const auto order = q.topological_order();
    if (!order) throw Error("cartan_path_algebra: quiver has an oriented cycle");
    const std::size_t n = q.vertex_count();
    RatMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> count(n, 0);
        count[i] = 1;
        for (auto v : *order)
            if (count[v] != 0)
                for (const auto& a : q.arrows())
                    if (a.source == v) count[a.target] += count[v];
        for (std::size_t j = 0; j < n; ++j) c(j, i) = Rational(count[j]);
    }
    return c;
}

/// Coxeter matrix -C^T C^{-1} acting on column dimension vectors.
inline RatMatrix coxeter_matrix(const RatMatrix& cartan)
{
    if (!cartan.is_square()) throw Error("coxeter_matrix: Cartan matrix is not square");
    auto inv = try_inverse(cartan);
    if (!inv) throw Error("coxeter_matrix: Cartan matrix is singular");
    return -(cartan.transpose() * *inv);
}

} // namespace quiverlab
