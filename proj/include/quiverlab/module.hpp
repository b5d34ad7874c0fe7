#pragma once

// Finite-dimensional left modules given by one action matrix per algebra
// basis element.

#include "quiverlab/algebra.hpp"
#include "quiverlab/matrix.hpp"
#include "quiverlab/radical.hpp"
#include "quiverlab/sparse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quiverlab {

using RatSparse = SparseMatrix<Rational>;

/// A module whose basis is adapted to the vertex idempotents: every basis
/// vector k is fixed by exactly one e_v (its vertex) and killed by the rest.
/// Use adapted_module() to bring an arbitrary action onto such a basis.
class RepModule {
public:
    RepModule() = default;

    RepModule(const SCAlgebra& a, std::vector<RatSparse> actions) : actions_(std::move(actions))
    {
        if (actions_.size() != a.dim()) throw Error("RepModule: need one action matrix per basis element");
        dim_ = actions_.empty() ? 0 : actions_.front().rows();
        for (const auto& m : actions_)
            if (m.rows() != dim_ || m.cols() != dim_) throw Error("RepModule: action matrices must be square of equal size");

        vertex_.assign(dim_, a.vertex_count());
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            const auto& e = actions_[a.idempotent(v)];
            for (std::size_t k = 0; k < dim_; ++k) {
                const auto& col = e.column(k);
                if (col.empty()) continue;
                if (col.size() != 1 || col.front().index != k || col.front().value != 1 || vertex_[k] != a.vertex_count())
                    throw Error("RepModule: basis is not adapted to the idempotents");
                vertex_[k] = v;
            }
        }
        for (std::size_t k = 0; k < dim_; ++k)
            if (vertex_[k] == a.vertex_count()) throw Error("RepModule: idempotents do not sum to the identity");
    }

    static RepModule zero(const SCAlgebra& a) { return RepModule(a, std::vector<RatSparse>(a.dim(), RatSparse(0, 0))); }

    std::size_t dim() const noexcept { return dim_; }
    const RatSparse& action(std::size_t basis_element) const { return actions_[basis_element]; }
    const std::vector<RatSparse>& actions() const noexcept { return actions_; }
    std::size_t vertex_of(std::size_t k) const { return vertex_[k]; }

    std::vector<std::size_t> dimension_vector(std::size_t vertex_count) const
    {
        std::vector<std::size_t> d(vertex_count, 0);
        for (auto v : vertex_) ++d[v];
        return d;
    }

    /// Action of a linear combination of basis elements.
    RatSparse action(const LinComb& x) const
    {
        RatSparse m(dim_, dim_);
        for (std::size_t k = 0; k < dim_; ++k) {
            std::vector<SparseEntry<Rational>> terms;
            for (const auto& e : x)
                for (const auto& c : actions_[e.index].column(k)) terms.push_back({c.index, e.value * c.value});
            m.column(k) = sparse_from_terms(std::move(terms));
        }
        return m;
    }

private:
    std::size_t dim_ = 0;
    std::vector<RatSparse> actions_;
    std::vector<std::size_t> vertex_;
};

/// Full module axioms: unit acts as the identity and act(b_i) act(b_j) =
/// act(b_i b_j) for all pairs.
inline std::optional<std::string> check_module(const SCAlgebra& a, const RepModule& m)
{
    if (m.action(a.unit()) != RatSparse::identity(m.dim())) return "unit does not act as the identity";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action(i) * m.action(j) != m.action(a.product(i, j)))
                return "action of " + a.basis(i).label + "*" + a.basis(j).label + " is not multiplicative";
    return std::nullopt;
}

/// Changes basis so that it is adapted to the idempotents. The input
/// actions must already satisfy the module axioms.
inline RepModule adapted_module(const SCAlgebra& a, const std::vector<RatMatrix>& actions)
{
    if (actions.size() != a.dim()) throw Error("adapted_module: need one action matrix per basis element");
    const std::size_t n = actions.empty() ? 0 : actions.front().rows();
    std::vector<std::vector<Rational>> columns;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        RatMatrix e = actions[a.idempotent(v)].transpose();
        const auto pivots = rref(e);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::vector<Rational> col(n);
            for (std::size_t c = 0; c < n; ++c) col[c] = e(r, c);
            columns.push_back(std::move(col));
        }
    }
    if (columns.size() != n) throw Error("adapted_module: idempotent images do not span the module");
    RatMatrix s(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) s(i, j) = columns[j][i];
    const RatMatrix s_inv = inverse(s);
    std::vector<RatSparse> out;
    for (const auto& x : actions) out.push_back(RatSparse::from_dense(s_inv * x * s));
    return RepModule(a, std::move(out));
}

/// One-dimensional simple module per vertex: e_v acts as 1, the radical as 0.
inline std::vector<RepModule> simple_modules(const SCAlgebra& a, const RadicalData& rad)
{
    std::vector<RepModule> simples;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        std::vector<RatSparse> actions(a.dim(), RatSparse(1, 1));
        for (std::size_t b = 0; b < a.dim(); ++b) {
            const auto& el = a.basis(b);
            if (el.source == v && el.target == v && rad.top[v][b] != 0) actions[b].column(0).push_back({0, rad.top[v][b]});
        }
        simples.emplace_back(a, std::move(actions));
    }
    return simples;
}

inline std::vector<RepModule> simple_modules(const SCAlgebra& a) { return simple_modules(a, radical_data(a)); }

/// Indecomposable projective A e_v as a left module (basis: paths starting at v).
inline RepModule indecomposable_projective(const SCAlgebra& a, std::size_t v)
{
    std::vector<std::size_t> idx;
    std::vector<long> pos(a.dim(), -1);
    for (std::size_t b = 0; b < a.dim(); ++b)
        if (a.basis(b).source == v) {
            pos[b] = static_cast<long>(idx.size());
            idx.push_back(b);
        }
    std::vector<RatSparse> actions(a.dim(), RatSparse(idx.size(), idx.size()));
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t k = 0; k < idx.size(); ++k) {
            std::vector<SparseEntry<Rational>> terms;
            for (const auto& e : a.product(x, idx[k])) terms.push_back({static_cast<Index>(pos[e.index]), e.value});
            actions[x].column(k) = sparse_from_terms(std::move(terms));
        }
    return RepModule(a, std::move(actions));
}

} // namespace quiverlab
