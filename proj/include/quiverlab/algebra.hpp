#pragma once

// Finite-dimensional algebras given by a basis and structure constants, and
// the builders for path, gentle and canonical algebras.
//
// Every basis element b is homogeneous with respect to the vertex
// idempotents: e_{t(b)} b = b = b e_{s(b)}. Products are written
// right-to-left, so product(i, j) = b_i * b_j means "b_j, then b_i".

#include "quiverlab/matrix.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/rational.hpp"
#include "quiverlab/sparse.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quiverlab {

using LinComb = SparseVector<Rational>;

struct BasisElement {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
    int degree = 0;
};

class SCAlgebra {
public:
    SCAlgebra() = default;

    /// table holds dim*dim entries, row-major: table[i * dim + j] = b_i * b_j.
    SCAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
              std::vector<std::size_t> idempotents, std::vector<LinComb> table)
        : vertices_(std::move(vertices)), basis_(std::move(basis)), idempotents_(std::move(idempotents)),
          table_(std::move(table))
    {
        if (table_.size() != basis_.size() * basis_.size()) throw Error("SCAlgebra: table has the wrong size");
        if (idempotents_.size() != vertices_.size()) throw Error("SCAlgebra: need one idempotent per vertex");
        for (std::size_t v = 0; v < idempotents_.size(); ++v) {
            const auto e = idempotents_[v];
            if (e >= basis_.size() || basis_[e].source != v || basis_[e].target != v)
                throw Error("SCAlgebra: idempotent of vertex " + vertices_[v] + " is misplaced");
        }
        for (const auto& b : basis_)
            if (b.source >= vertices_.size() || b.target >= vertices_.size())
                throw Error("SCAlgebra: basis element '" + b.label + "' has an unknown vertex");
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    std::size_t idempotent(std::size_t v) const { return idempotents_[v]; }
    const std::vector<std::size_t>& idempotents() const noexcept { return idempotents_; }

    const LinComb& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }

    LinComb multiply(const LinComb& x, const LinComb& y) const
    {
        std::vector<SparseEntry<Rational>> terms;
        for (const auto& a : x)
            for (const auto& b : y)
                for (const auto& c : product(a.index, b.index)) terms.push_back({c.index, a.value * b.value * c.value});
        return sparse_from_terms(std::move(terms));
    }

    LinComb unit() const
    {
        std::vector<SparseEntry<Rational>> terms;
        for (auto e : idempotents_) terms.push_back({static_cast<Index>(e), Rational(1)});
        return sparse_from_terms(std::move(terms));
    }

    std::optional<std::size_t> find(const std::string& label) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].label == label) return i;
        return std::nullopt;
    }

    /// Basis indices of e_target A e_source.
    std::vector<std::size_t> block(std::size_t target, std::size_t source) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].source == source && basis_[i].target == target) out.push_back(i);
        return out;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<std::size_t> idempotents_;
    std::vector<LinComb> table_;
};

inline LinComb basis_vector(std::size_t i) { return {{static_cast<Index>(i), Rational(1)}}; }

// ---------------------------------------------------------------------------
// Executable invariants. Each returns a description of the first violation.

inline std::optional<std::string> check_vertex_compatibility(const SCAlgebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const auto& p = a.product(i, j);
            if (p.empty()) continue;
            if (a.basis(i).source != a.basis(j).target)
                return "nonzero product of non-composable " + a.basis(i).label + " and " + a.basis(j).label;
            for (const auto& e : p)
                if (a.basis(e.index).source != a.basis(j).source || a.basis(e.index).target != a.basis(i).target)
                    return "product " + a.basis(i).label + "*" + a.basis(j).label + " leaves its vertex block";
        }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& b = a.basis(i);
        if (a.product(a.idempotent(b.target), i) != basis_vector(i) || a.product(i, a.idempotent(b.source)) != basis_vector(i))
            return "idempotents do not fix " + b.label;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_idempotents(const SCAlgebra& a)
{
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        for (std::size_t w = 0; w < a.vertex_count(); ++w) {
            const auto& p = a.product(a.idempotent(v), a.idempotent(w));
            const LinComb expected = v == w ? basis_vector(a.idempotent(v)) : LinComb{};
            if (p != expected) return "idempotents e_" + a.vertices()[v] + ", e_" + a.vertices()[w] + " misbehave";
        }
    const LinComb one = a.unit();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.multiply(one, basis_vector(i)) != basis_vector(i) || a.multiply(basis_vector(i), one) != basis_vector(i))
            return "sum of idempotents is not a unit on " + a.basis(i).label;
    }
    return std::nullopt;
}

/// Checks (b_i b_j) b_k = b_i (b_j b_k) on all composable triples.
inline std::optional<std::string> check_associativity(const SCAlgebra& a)
{
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a.basis(i).source != a.basis(j).target) continue;
            const LinComb ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (a.basis(j).source != a.basis(k).target) continue;
                if (a.multiply(ij, basis_vector(k)) != a.multiply(basis_vector(i), a.product(j, k)))
                    return "associativity fails on (" + a.basis(i).label + ", " + a.basis(j).label + ", " +
                           a.basis(k).label + ")";
            }
        }
    return std::nullopt;
}

inline std::optional<std::string> check_degree_additivity(const SCAlgebra& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (const auto& e : a.product(i, j))
                if (a.basis(e.index).degree != a.basis(i).degree + a.basis(j).degree)
                    return "degree not additive on " + a.basis(i).label + "*" + a.basis(j).label;
    return std::nullopt;
}

/// Runs every structural check; throws on the first failure.
inline void validate(const SCAlgebra& a)
{
    for (auto check : {check_vertex_compatibility, check_idempotents, check_associativity, check_degree_additivity})
        if (auto err = check(a)) throw Error("invalid algebra: " + *err);
}

/// C[j][i] = dim e_j A e_i.
inline RatMatrix cartan_matrix(const SCAlgebra& a)
{
    RatMatrix c(a.vertex_count(), a.vertex_count());
    for (const auto& b : a.basis()) c(b.target, b.source) += 1;
    return c;
}

// ---------------------------------------------------------------------------
// Monomial algebras: paths avoiding a set of length-two relations.

namespace detail {

struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;  // in order of application
};

// Arrow ids joined right-to-left, so "b1a" is a followed by b1.
inline std::string path_label(const Quiver& q, const Path& p)
{
    if (p.arrows.empty()) return "e" + q.vertices()[p.source];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += q.arrows()[*it].id;
    return s;
}

inline SCAlgebra monomial_algebra(const Quiver& q, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    const std::size_t na = q.arrow_count();
    std::vector<std::vector<bool>> forbidden(na, std::vector<bool>(na, false));
    for (auto [first, second] : relations) forbidden[first][second] = true;

    auto allowed = [&](std::size_t first, std::size_t second) {
        return q.arrows()[first].target == q.arrows()[second].source && !forbidden[first][second];
    };

    // Infinite dimension <=> the "may follow" graph on arrows has a cycle.
    {
        std::vector<int> state(na, 0);
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        for (std::size_t s = 0; s < na; ++s) {
            if (state[s]) continue;
            stack.push_back({s, 0});
            state[s] = 1;
            while (!stack.empty()) {
                auto& [u, next] = stack.back();
                if (next == na) {
                    state[u] = 2;
                    stack.pop_back();
                    continue;
                }
                const std::size_t w = next++;
                if (!allowed(u, w)) continue;
                if (state[w] == 1) throw Error("presentation is infinite-dimensional: relation-free cycle through arrow '" + q.arrows()[w].id + "'");
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            }
        }
    }

    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) paths.push_back({v, v, {}});
    for (std::size_t a = 0; a < na; ++a) paths.push_back({q.arrows()[a].source, q.arrows()[a].target, {a}});
    std::size_t frontier_begin = q.vertex_count();
    while (frontier_begin < paths.size()) {
        const std::size_t frontier_end = paths.size();
        for (std::size_t p = frontier_begin; p < frontier_end; ++p)
            for (std::size_t a = 0; a < na; ++a)
                if (allowed(paths[p].arrows.back(), a)) {
                    Path ext = paths[p];
                    ext.arrows.push_back(a);
                    ext.target = q.arrows()[a].target;
                    paths.push_back(std::move(ext));
                }
        frontier_begin = frontier_end;
    }

    std::map<std::vector<std::size_t>, std::size_t> index_of;
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        int degree = 0;
        for (auto a : paths[i].arrows) degree += q.arrows()[a].degree;
        basis.push_back({path_label(q, paths[i]), paths[i].source, paths[i].target, degree});
        if (!paths[i].arrows.empty()) index_of[paths[i].arrows] = i;
    }

    const std::size_t n = paths.size();
    std::vector<LinComb> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& later = paths[i];
            const Path& first = paths[j];
            if (later.source != first.target) continue;
            if (first.arrows.empty()) {
                table[i * n + j] = basis_vector(i);
            } else if (later.arrows.empty()) {
                table[i * n + j] = basis_vector(j);
            } else {
                std::vector<std::size_t> word = first.arrows;
                word.insert(word.end(), later.arrows.begin(), later.arrows.end());
                if (auto it = index_of.find(word); it != index_of.end()) table[i * n + j] = basis_vector(it->second);
            }
        }

    std::vector<std::size_t> idempotents(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) idempotents[v] = v;
    return SCAlgebra(q.vertices(), std::move(basis), std::move(idempotents), std::move(table));
}

} // namespace detail

/// Path algebra KQ of an acyclic quiver; path degree is the sum of arrow degrees.
inline SCAlgebra path_algebra(const Quiver& q)
{
    if (!q.is_acyclic()) throw Error("path_algebra: quiver has an oriented cycle");
    return detail::monomial_algebra(q, {});
}

/// Quiver plus length-two relations, each given as (first-applied, second-applied).
struct GentlePresentation {
    Quiver quiver;
    std::vector<std::pair<std::string, std::string>> relations;
};

/// Returns the first violated gentle axiom, if any.
inline std::optional<std::string> check_gentle_axioms(const GentlePresentation& pres)
{
    const Quiver& q = pres.quiver;
    const std::size_t na = q.arrow_count();
    std::vector<std::vector<bool>> rel(na, std::vector<bool>(na, false));
    for (const auto& [f, s] : pres.relations) {
        auto a = q.find_arrow(f), b = q.find_arrow(s);
        if (!a || !b) return "relation mentions an unknown arrow (" + f + ", " + s + ")";
        if (q.arrows()[*a].target != q.arrows()[*b].source) return "relation " + f + " then " + s + " is not a path";
        rel[*a][*b] = true;
    }
    std::vector<int> in(q.vertex_count(), 0), out(q.vertex_count(), 0);
    for (const auto& a : q.arrows()) {
        ++out[a.source];
        ++in[a.target];
    }
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (in[v] > 2 || out[v] > 2) return "vertex " + q.vertices()[v] + " has more than two arrows in or out";

    for (std::size_t a = 0; a < na; ++a) {
        int after_rel = 0, after_free = 0, before_rel = 0, before_free = 0;
        for (std::size_t b = 0; b < na; ++b) {
            if (q.arrows()[a].target == q.arrows()[b].source) (rel[a][b] ? after_rel : after_free)++;
            if (q.arrows()[b].target == q.arrows()[a].source) (rel[b][a] ? before_rel : before_free)++;
        }
        if (after_rel > 1 || after_free > 1 || before_rel > 1 || before_free > 1)
            return "arrow " + q.arrows()[a].id + " violates the gentle composition rules";
    }
    return std::nullopt;
}

inline SCAlgebra gentle_algebra(const GentlePresentation& pres)
{
    if (auto err = check_gentle_axioms(pres)) throw Error("gentle_algebra: " + *err);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& [f, s] : pres.relations) rel.push_back({*pres.quiver.find_arrow(f), *pres.quiver.find_arrow(s)});
    return detail::monomial_algebra(pres.quiver, rel);
}

// ---------------------------------------------------------------------------
// Canonical algebras.

/// Weights p_1..p_t and parameters lambda_3..lambda_t (lambda_1 = infinity
/// and lambda_2 = 0 are implicit).
struct CanonicalSpec {
    std::vector<unsigned> weights;
    std::vector<Rational> lambdas;
};

inline void validate(const CanonicalSpec& spec)
{
    const std::size_t t = spec.weights.size();
    if (t < 2) throw Error("canonical spec: t >= 2 required");
    for (auto p : spec.weights)
        if (p < 1) throw Error("canonical spec: weights must be positive");
    if (spec.lambdas.size() != t - 2)
        throw Error("canonical spec: expected " + std::to_string(t - 2) + " lambdas, got " + std::to_string(spec.lambdas.size()));
    for (std::size_t i = 0; i < spec.lambdas.size(); ++i) {
        if (spec.lambdas[i] == 0) throw Error("canonical spec: lambdas must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.lambdas[i] == spec.lambdas[j]) throw Error("canonical spec: lambdas must be pairwise distinct");
    }
}

/// Quiver Q(p): arms 0 -> i_1 -> ... -> i_{p_i - 1} -> inf, arrow x_{i,j}
/// from i_{j-1} to i_j (with i_0 = 0, i_{p_i} = inf).
inline Quiver canonical_quiver(const std::vector<unsigned>& weights)
{
    std::vector<std::string> v{"0"};
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (unsigned j = 1; j < weights[i]; ++j) v.push_back(std::to_string(i + 1) + "_" + std::to_string(j));
    const std::size_t inf = v.size();
    v.push_back("inf");
    std::vector<Arrow> arrows;
    std::size_t next = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::size_t prev = 0;
        for (unsigned j = 1; j <= weights[i]; ++j) {
            const std::size_t to = (j == weights[i]) ? inf : next++;
            arrows.push_back({"x" + std::to_string(i + 1) + "_" + std::to_string(j), prev, to, 0});
            prev = to;
        }
    }
    return Quiver(v, arrows);
}

/// Canonical algebra on its combinatorial basis: trivial paths, proper arm
/// subpaths, and the full paths of arms 1 and 2. A product that completes
/// arm i >= 3 is rewritten as (arm 2) - lambda_i (arm 1).
inline SCAlgebra canonical_algebra(const CanonicalSpec& spec)
{
    validate(spec);
    const Quiver q = canonical_quiver(spec.weights);
    const std::size_t t = spec.weights.size();

    // Subpath of arm i covering arrows [lo, hi) (0-based arrow positions).
    struct Segment {
        std::size_t arm, lo, hi;
    };
    std::vector<std::vector<std::size_t>> arm_arrows(t);
    {
        std::size_t k = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (unsigned j = 0; j < spec.weights[i]; ++j) arm_arrows[i].push_back(k++);
    }

    std::vector<BasisElement> basis;
    std::vector<std::optional<Segment>> segment;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        basis.push_back({"e" + q.vertices()[v], v, v, 0});
        segment.push_back(std::nullopt);
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index_of;
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t p = spec.weights[i];
        for (std::size_t len = 1; len <= p; ++len)
            for (std::size_t lo = 0; lo + len <= p; ++lo) {
                const bool full = (len == p);
                if (full && i >= 2) continue;
                std::string label;
                for (std::size_t k = lo + len; k-- > lo;) label += q.arrows()[arm_arrows[i][k]].id;
                const auto& first = q.arrows()[arm_arrows[i][lo]];
                const auto& last = q.arrows()[arm_arrows[i][lo + len - 1]];
                index_of[{i, lo, lo + len}] = basis.size();
                basis.push_back({label, first.source, last.target, 0});
                segment.push_back(Segment{i, lo, lo + len});
            }
    }

    auto full_arm = [&](std::size_t arm) { return index_of.at({arm, 0, spec.weights[arm]}); };

    const std::size_t n = basis.size();
    std::vector<LinComb> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (basis[i].source != basis[j].target) continue;
            if (!segment[j]) {
                table[i * n + j] = basis_vector(i);
                continue;
            }
            if (!segment[i]) {
                table[i * n + j] = basis_vector(j);
                continue;
            }
            const Segment& first = *segment[j];
            const Segment& later = *segment[i];
            if (first.arm != later.arm || first.hi != later.lo) continue;
            const std::size_t arm = first.arm;
            if (first.lo == 0 && later.hi == spec.weights[arm] && arm >= 2) {
                const Rational& lambda = spec.lambdas[arm - 2];
                std::vector<SparseEntry<Rational>> terms{{static_cast<Index>(full_arm(1)), Rational(1)},
                                                         {static_cast<Index>(full_arm(0)), Rational(-lambda)}};
                table[i * n + j] = sparse_from_terms(std::move(terms));
            } else {
                table[i * n + j] = basis_vector(index_of.at({arm, first.lo, later.hi}));
            }
        }

    std::vector<std::size_t> idempotents(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) idempotents[v] = v;
    return SCAlgebra(q.vertices(), std::move(basis), std::move(idempotents), std::move(table));
}

} // namespace quiverlab
