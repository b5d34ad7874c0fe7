#pragma once

// Minimal projective resolutions by exact sparse linear algebra, and
// complexity estimates from the growth of dim P_n.

#include "quiverlab/algebra.hpp"
#include "quiverlab/fit.hpp"
#include "quiverlab/module.hpp"
#include "quiverlab/radical.hpp"
#include "quiverlab/sparse.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace quiverlab {

/// Column-by-column echelon form keyed on leading row index. With
/// tracking enabled, every column that reduces to zero yields a kernel
/// vector supported on itself (coefficient 1) and earlier pivot columns.
class ColumnEchelon {
public:
    using RatSparseVector = SparseVector<Rational>;

    ColumnEchelon(std::size_t rows, bool track) : slot_(rows, -1), track_(track) {}

    /// Returns the kernel vector when `v` (column `column`) is dependent.
    std::optional<RatSparseVector> add(RatSparseVector v, Index column)
    {
        RatSparseVector comb;
        if (track_) comb.push_back({column, Rational(1)});
        while (!v.empty()) {
            const int s = slot_[v.front().index];
            if (s < 0) break;
            const Rational f = -v.front().value;
            v = sparse_axpy(v, f, vectors_[s]);
            if (track_) comb = sparse_axpy(comb, f, combs_[s]);
        }
        if (v.empty()) return comb;
        const Rational inv = Rational(1) / v.front().value;
        for (auto& e : v) e.value *= inv;
        if (track_)
            for (auto& e : comb) e.value *= inv;
        slot_[v.front().index] = static_cast<int>(vectors_.size());
        vectors_.push_back(std::move(v));
        if (track_) combs_.push_back(std::move(comb));
        return std::nullopt;
    }

    bool is_pivot_row(Index r) const { return slot_[r] >= 0; }
    std::size_t rank() const noexcept { return vectors_.size(); }

private:
    std::vector<int> slot_;
    std::vector<RatSparseVector> vectors_;
    std::vector<RatSparseVector> combs_;
    bool track_;
};

/// P = (+)_k A e_{v_k} mapping onto V, generator k going to the basis
/// vector top[k] of V.
struct ProjectiveCover {
    RepModule projective;
    RatSparse map;                                   // dim V x dim P
    std::vector<std::size_t> top;                    // V-basis index of each generator
    std::vector<std::size_t> multiplicities;         // per vertex
    std::vector<std::pair<std::size_t, std::size_t>> element;  // P index -> (basis element, generator)
};

/// Projective cover of V: generators are basis vectors of V complementing
/// rad V = sum over radical generators r of r V.
inline ProjectiveCover projective_cover(const SCAlgebra& a, const RadicalData& rad, const RepModule& v)
{
    const std::size_t n = a.dim();
    ColumnEchelon radical_span(v.dim(), false);
    for (const auto& r : rad.generators) {
        const RatSparse act = v.action(r);
        for (std::size_t k = 0; k < v.dim(); ++k)
            if (!act.column(k).empty()) radical_span.add(act.column(k), 0);
    }

    ProjectiveCover cover;
    cover.multiplicities.assign(a.vertex_count(), 0);
    std::vector<std::size_t> gen_vertex;
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (!radical_span.is_pivot_row(static_cast<Index>(k))) {
            cover.top.push_back(k);
            gen_vertex.push_back(v.vertex_of(k));
            ++cover.multiplicities[v.vertex_of(k)];
        }

    // basis-element-major layout
    const std::size_t gens = cover.top.size();
    std::vector<std::vector<long>> position(gens, std::vector<long>(n, -1));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t g = 0; g < gens; ++g)
            if (a.basis(b).source == gen_vertex[g]) {
                position[g][b] = static_cast<long>(cover.element.size());
                cover.element.push_back({b, g});
            }
    const std::size_t dp = cover.element.size();

    std::vector<RatSparse> actions(n, RatSparse(dp, dp));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t col = 0; col < dp; ++col) {
            const auto [b, g] = cover.element[col];
            const auto& prod = a.product(x, b);
            if (prod.empty()) continue;
            std::vector<SparseEntry<Rational>> terms;
            for (const auto& e : prod) terms.push_back({static_cast<Index>(position[g][e.index]), e.value});
            actions[x].column(col) = sparse_from_terms(std::move(terms));
        }
    cover.projective = RepModule(a, std::move(actions));

    cover.map = RatSparse(v.dim(), dp);
    for (std::size_t col = 0; col < dp; ++col) {
        const auto [b, g] = cover.element[col];
        cover.map.column(col) = v.action(b).column(cover.top[g]);
    }
    return cover;
}

inline ProjectiveCover projective_cover(const SCAlgebra& a, const RepModule& v)
{
    return projective_cover(a, radical_data(a), v);
}

/// Kernel of the cover map as a module, plus its inclusion into P.
struct Syzygy {
    RepModule module;
    RatSparse inclusion;  // dim P x dim K
    bool minimal = true;  // kernel inside rad P
};

inline Syzygy syzygy(const SCAlgebra& a, const RadicalData& rad, const ProjectiveCover& cover)
{
    const std::size_t dp = cover.projective.dim();
    ColumnEchelon echelon(cover.map.rows(), true);
    std::vector<SparseVector<Rational>> kernel;
    std::vector<long> kernel_index(dp, -1);
    for (std::size_t col = 0; col < dp; ++col)
        if (auto k = echelon.add(cover.map.column(col), static_cast<Index>(col))) {
            kernel_index[col] = static_cast<long>(kernel.size());
            kernel.push_back(std::move(*k));
        }

    Syzygy out;
    const std::size_t dk = kernel.size();
    out.inclusion = RatSparse(dp, dk);
    for (std::size_t i = 0; i < dk; ++i) out.inclusion.column(i) = kernel[i];

    // ker must lie in rad P: the top component at every generator vanishes.
    for (const auto& vec : kernel) {
        std::vector<SparseEntry<Rational>> top_part;
        for (const auto& e : vec) {
            const auto [b, g] = cover.element[e.index];
            const auto& el = a.basis(b);
            if (el.source == el.target && rad.top[el.source][b] != 0)
                top_part.push_back({static_cast<Index>(g), e.value * rad.top[el.source][b]});
        }
        if (!sparse_from_terms(std::move(top_part)).empty()) out.minimal = false;
    }

    // A basis vector of the kernel is read off from its value at the
    // dependent columns.
    std::vector<RatSparse> actions(a.dim(), RatSparse(dk, dk));
    for (std::size_t x = 0; x < a.dim(); ++x) {
        const RatSparse& px = cover.projective.action(x);
        for (std::size_t i = 0; i < dk; ++i) {
            const auto image = px.apply(kernel[i]);
            SparseVector<Rational> coords;
            for (const auto& e : image)
                if (kernel_index[e.index] >= 0) coords.push_back({static_cast<Index>(kernel_index[e.index]), e.value});
            actions[x].column(i) = std::move(coords);
        }
    }
    out.module = RepModule(a, std::move(actions));
    return out;
}

enum class Truncation { StepsExhausted, DimensionCap, Terminated };

inline const char* to_string(Truncation t)
{
    switch (t) {
    case Truncation::StepsExhausted: return "steps-exhausted";
    case Truncation::DimensionCap: return "dimension-cap";
    case Truncation::Terminated: return "resolution-terminated";
    }
    return "?";
}

/// betti[n] = dim P_n. A terminated resolution ends with a single 0.
struct ResolutionTrace {
    std::vector<std::size_t> betti;
    Truncation truncated_by = Truncation::StepsExhausted;
    std::vector<std::vector<std::size_t>> dimension_vectors;  // of each P_n
    std::size_t minimal_steps = 0;  // steps where ker(P_n -> .) lies in rad P_n
};

inline ResolutionTrace minimal_resolution(const SCAlgebra& a, const RadicalData& rad, const RepModule& v,
                                          std::size_t steps, std::size_t dim_cap)
{
    if (steps < 1) throw Error("minimal_resolution: steps must be positive");
    ResolutionTrace trace;
    RepModule current = v;
    for (std::size_t n = 0;; ++n) {
        if (current.dim() == 0) {
            trace.betti.push_back(0);
            trace.dimension_vectors.push_back(std::vector<std::size_t>(a.vertex_count(), 0));
            trace.truncated_by = Truncation::Terminated;
            break;
        }
        if (n == steps) {
            trace.truncated_by = Truncation::StepsExhausted;
            break;
        }
        ProjectiveCover cover = projective_cover(a, rad, current);
        const std::size_t dp = cover.projective.dim();
        trace.betti.push_back(dp);
        trace.dimension_vectors.push_back(cover.projective.dimension_vector(a.vertex_count()));
        if (dp > dim_cap || dp - current.dim() > dim_cap) {
            trace.truncated_by = Truncation::DimensionCap;
            break;
        }
        Syzygy next = syzygy(a, rad, cover);
        if (!next.minimal) throw Error("minimal_resolution: kernel escaped the radical (corrupt input)");
        ++trace.minimal_steps;
        current = std::move(next.module);
    }
    return trace;
}

inline ResolutionTrace minimal_resolution(const SCAlgebra& a, const RepModule& v, std::size_t steps, std::size_t dim_cap)
{
    return minimal_resolution(a, radical_data(a), v, steps, dim_cap);
}

/// Complexity read off a Betti trace.
struct ComplexityEstimate {
    enum class Kind { Finite, Infinite, Inconclusive };
    Kind kind = Kind::Inconclusive;
    unsigned k = 0;      // meaningful for Finite
    std::string reason;  // for Inconclusive, and as a short explanation otherwise

    // fit diagnostics over the trailing window (NaN when not computed)
    double loglog_slope = std::nan("");
    double loglog_residual = std::nan("");
    double exp_slope = std::nan("");
    double exp_residual = std::nan("");

    static ComplexityEstimate finite(unsigned k, std::string why)
    {
        ComplexityEstimate e;
        e.kind = Kind::Finite;
        e.k = k;
        e.reason = std::move(why);
        return e;
    }
};

inline std::string to_string(const ComplexityEstimate& e)
{
    switch (e.kind) {
    case ComplexityEstimate::Kind::Finite: return "Finite(" + std::to_string(e.k) + ")";
    case ComplexityEstimate::Kind::Infinite: return "Infinite";
    case ComplexityEstimate::Kind::Inconclusive: return "Inconclusive(" + e.reason + ")";
    }
    return "?";
}

struct ComplexityThresholds {
    double window = 0.5;             // trailing fraction of the trace
    double loglog_residual = 0.15;
    double exp_slope = 0.05;         // per step
    std::size_t min_entries = 12;
    std::size_t min_capped_entries = 4;
};

/// Terminated: Finite(0). Bounded over the trailing window: Finite(1).
/// Otherwise log d_n is fitted against log(n+1) and against n; a clean
/// power law of degree g gives Finite(g+1), a positive exponential rate
/// that fits better gives Infinite.
inline ComplexityEstimate complexity_estimate(const ResolutionTrace& trace, const ComplexityThresholds& th = {})
{
    const auto& d = trace.betti;
    if (trace.truncated_by == Truncation::Terminated) return ComplexityEstimate::finite(0, "resolution terminated");

    const std::size_t needed = trace.truncated_by == Truncation::DimensionCap ? th.min_capped_entries : th.min_entries;
    if (d.size() < needed)
        throw Error("complexity_estimate: trace too short (" + std::to_string(d.size()) + " entries, need " +
                    std::to_string(needed) + ")");
    if (!(th.window > 0 && th.window <= 1)) throw Error("complexity_estimate: window must lie in (0, 1]");

    std::size_t w = static_cast<std::size_t>(std::ceil(th.window * static_cast<double>(d.size())));
    w = std::clamp<std::size_t>(w, std::min<std::size_t>(3, d.size()), d.size());
    const std::size_t start = d.size() - w;

    ComplexityEstimate out;
    const std::size_t tail_max = *std::max_element(d.begin() + static_cast<long>(start), d.end());
    const std::size_t head_max = start ? *std::max_element(d.begin(), d.begin() + static_cast<long>(start)) : 0;

    std::vector<double> logn, n, logd;
    for (std::size_t i = start; i < d.size(); ++i) {
        if (d[i] == 0) throw Error("complexity_estimate: zero Betti number in an unterminated trace");
        logn.push_back(std::log(static_cast<double>(i + 1)));
        n.push_back(static_cast<double>(i));
        logd.push_back(std::log(static_cast<double>(d[i])));
    }
    const auto pw = detail::least_squares(logn, logd);
    const auto ex = detail::least_squares(n, logd);
    out.loglog_slope = pw.slope;
    out.loglog_residual = pw.residual;
    out.exp_slope = ex.slope;
    out.exp_residual = ex.residual;

    if (start > 0 && tail_max <= head_max) {
        auto e = ComplexityEstimate::finite(1, "bounded over the trailing window");
        e.loglog_slope = out.loglog_slope;
        e.loglog_residual = out.loglog_residual;
        e.exp_slope = out.exp_slope;
        e.exp_residual = out.exp_residual;
        return e;
    }
    if (ex.slope > th.exp_slope && ex.residual < pw.residual) {
        out.kind = ComplexityEstimate::Kind::Infinite;
        out.reason = "exponential growth";
        return out;
    }
    if (pw.residual < th.loglog_residual) {
        const long g = std::lround(pw.slope);
        out.kind = ComplexityEstimate::Kind::Finite;
        out.k = g <= 0 ? 1u : static_cast<unsigned>(g + 1);
        out.reason = "polynomial growth of degree " + std::to_string(std::max(0L, g));
        return out;
    }
    out.reason = "growth fits neither a power law nor an exponential";
    return out;
}

/// Infinite beats everything, Inconclusive beats Finite, Finite takes the max.
inline ComplexityEstimate combine(const ComplexityEstimate& a, const ComplexityEstimate& b)
{
    using K = ComplexityEstimate::Kind;
    auto rank = [](K k) { return k == K::Infinite ? 2 : k == K::Inconclusive ? 1 : 0; };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) > rank(b.kind) ? a : b;
    if (a.kind == K::Finite) return a.k >= b.k ? a : b;
    return a;
}

/// Worker count from QUIVERLAB_THREADS, else the hardware concurrency.
inline std::size_t thread_budget()
{
    if (const char* env = std::getenv("QUIVERLAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct GlobalComplexity {
    ComplexityEstimate estimate;
    std::vector<ResolutionTrace> traces;           // one per simple, vertex order
    std::vector<ComplexityEstimate> per_simple;
};

/// Resolves every simple module (concurrently, up to thread_budget()
/// workers) and combines the estimates.
inline GlobalComplexity global_complexity(const SCAlgebra& a, std::size_t steps, std::size_t dim_cap,
                                          const ComplexityThresholds& th = {})
{
    const RadicalData rad = radical_data(a);
    const auto simples = simple_modules(a, rad);
    GlobalComplexity out;
    out.traces.resize(simples.size());

    const std::size_t workers = std::min(thread_budget(), std::max<std::size_t>(1, simples.size()));
    if (workers <= 1) {
        for (std::size_t v = 0; v < simples.size(); ++v) out.traces[v] = minimal_resolution(a, rad, simples[v], steps, dim_cap);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t v; (v = next++) < simples.size();)
                out.traces[v] = minimal_resolution(a, rad, simples[v], steps, dim_cap);
        };
        std::vector<std::future<void>> jobs;
        for (std::size_t t = 0; t < workers; ++t) jobs.push_back(std::async(std::launch::async, work));
        for (auto& j : jobs) j.get();
    }

    for (std::size_t v = 0; v < simples.size(); ++v) {
        out.per_simple.push_back(complexity_estimate(out.traces[v], th));
        out.estimate = v == 0 ? out.per_simple.back() : combine(out.estimate, out.per_simple.back());
    }
    return out;
}

inline ComplexityEstimate global_complexity_estimate(const SCAlgebra& a, std::size_t steps, std::size_t dim_cap)
{
    return global_complexity(a, steps, dim_cap).estimate;
}

} // namespace quiverlab
