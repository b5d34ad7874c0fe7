#pragma once

// Serre-cyclotomicity verdicts and their numerical shadows: the canonical
// delta rule, graded path algebras, the Coxeter necessary condition
// (Phi^{2n} - I)^l = 0, and entropy of the Serre functor.

#include "quiverlab/algebra.hpp"
#include "quiverlab/cyclotomic.hpp"
#include "quiverlab/fit.hpp"
#include "quiverlab/quiver.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quiverlab {

struct NotSerreCyclotomic {
    std::string reason;
};

/// The l = 1 case. Exponents may be unknown (finite-type path algebras);
/// the Coxeter period is reported instead when available.
struct FractionallyCalabiYau {
    std::optional<std::int64_t> m, n;
    std::optional<std::uint64_t> coxeter_period;
    std::string reason;
};

struct SerreCyclotomic {
    std::int64_t l = 2;
    std::optional<std::int64_t> m, n;
    std::string reason;
};

struct UnknownVerdict {
    std::string reason;
};

using SerreVerdict = std::variant<NotSerreCyclotomic, FractionallyCalabiYau, SerreCyclotomic, UnknownVerdict>;

inline const char* kind_name(const SerreVerdict& v)
{
    switch (v.index()) {
    case 0: return "not-serre-cyclotomic";
    case 1: return "fractionally-calabi-yau";
    case 2: return "serre-cyclotomic";
    default: return "unknown";
    }
}

inline const std::string& reason(const SerreVerdict& v)
{
    return std::visit([](const auto& x) -> const std::string& { return x.reason; }, v);
}

/// Order l of the verdict: 1 for fractionally Calabi-Yau.
inline std::optional<std::int64_t> order(const SerreVerdict& v)
{
    if (std::holds_alternative<FractionallyCalabiYau>(v)) return 1;
    if (const auto* s = std::get_if<SerreCyclotomic>(&v)) return s->l;
    return std::nullopt;
}

/// (m, n) when the verdict carries both.
inline std::optional<std::pair<std::int64_t, std::int64_t>> exponents(const SerreVerdict& v)
{
    if (const auto* f = std::get_if<FractionallyCalabiYau>(&v); f && f->m && f->n) return std::pair{*f->m, *f->n};
    if (const auto* s = std::get_if<SerreCyclotomic>(&v); s && s->m && s->n) return std::pair{*s->m, *s->n};
    return std::nullopt;
}

inline std::string to_string(const SerreVerdict& v)
{
    auto opt = [](const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : std::string("?"); };
    if (const auto* f = std::get_if<FractionallyCalabiYau>(&v)) return "fractionally Calabi-Yau (" + opt(f->m) + "," + opt(f->n) + ")";
    if (const auto* s = std::get_if<SerreCyclotomic>(&v))
        return "(" + std::to_string(s->l) + "," + opt(s->m) + "," + opt(s->n) + ")-Serre cyclotomic";
    if (std::holds_alternative<NotSerreCyclotomic>(v)) return "not Serre cyclotomic";
    return "unknown";
}

struct CanonicalVerdict {
    Integer delta;
    std::int64_t p = 0;
    SerreVerdict verdict;
};

/// p = lcm(p_i), delta = (t - 2) p - sum p / p_i. The sign of delta decides
/// between (2,p,p), fractionally (p,p) Calabi-Yau, and (2,-p,-p).
inline CanonicalVerdict canonical_verdict(const CanonicalSpec& spec)
{
    validate(spec);
    Integer p = 1;
    for (auto w : spec.weights) {
        const Integer wi(w);
        p = p / gcd(p, wi) * wi;
    }
    Integer delta = Integer(static_cast<long>(spec.weights.size()) - 2) * p;
    for (auto w : spec.weights) delta -= p / Integer(w);

    CanonicalVerdict out;
    out.delta = delta;
    out.p = to_int64(p);
    const std::int64_t pp = out.p;
    const int s = sgn(delta);
    if (s < 0)
        out.verdict = SerreCyclotomic{2, pp, pp, "delta < 0"};
    else if (s == 0)
        out.verdict = FractionallyCalabiYau{pp, pp, std::nullopt, "delta = 0"};
    else
        out.verdict = SerreCyclotomic{2, -pp, -pp, "delta > 0"};
    return out;
}

namespace detail {

// Weights of the domestic canonical algebra derived equivalent to an
// affine tree: D~n -> (2,2,n-2), E~6 -> (2,3,3), E~7 -> (2,3,4), E~8 -> (2,3,5).
inline std::optional<std::vector<unsigned>> affine_tree_weights(const Quiver& q)
{
    const std::size_t nv = q.vertex_count();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (const auto& a : q.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < nv; ++v)
        if (adj[v].size() >= 3) branch.push_back(v);

    if (branch.size() == 1 && adj[branch[0]].size() == 4 && nv == 5) return std::vector<unsigned>{2, 2, 2};
    if (branch.size() == 2 && adj[branch[0]].size() == 3 && adj[branch[1]].size() == 3)
        return std::vector<unsigned>{2, 2, static_cast<unsigned>(nv - 3)};
    if (branch.size() == 1 && adj[branch[0]].size() == 3) {
        std::vector<std::size_t> arms;
        for (auto start : adj[branch[0]]) {
            std::size_t len = 1, prev = branch[0], cur = start;
            while (adj[cur].size() == 2) {
                const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<std::size_t>{2, 2, 2}) return std::vector<unsigned>{2, 3, 3};
        if (arms == std::vector<std::size_t>{1, 3, 3}) return std::vector<unsigned>{2, 3, 4};
        if (arms == std::vector<std::size_t>{1, 2, 5}) return std::vector<unsigned>{2, 3, 5};
    }
    return std::nullopt;
}

struct CycleWalk {
    std::size_t forward = 0;   // arrows along the walking direction
    std::size_t backward = 0;  // arrows against it
    long winding = 0;          // signed degree sum
};

// Walks once around a cycle graph and counts orientations and degrees.
inline CycleWalk walk_cycle(const Quiver& q)
{
    CycleWalk w;
    const auto& arrows = q.arrows();
    std::vector<bool> used(arrows.size(), false);
    std::size_t at = arrows.front().source;
    for (std::size_t step = 0; step < arrows.size(); ++step)
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (used[i]) continue;
            const auto& a = arrows[i];
            if (a.source == at) {
                ++w.forward;
                w.winding += a.degree;
                at = a.target;
            } else if (a.target == at) {
                ++w.backward;
                w.winding -= a.degree;
                at = a.source;
            } else {
                continue;
            }
            used[i] = true;
            break;
        }
    return w;
}

} // namespace detail

/// Verdict for a graded path algebra (KQ, |.|).
///
/// Finite type is fractionally Calabi-Yau; affine trees are (2,p,p) with p
/// from the derived equivalent canonical algebra; on an A~ cycle the grading
/// matters and only winding number 0 is decided; indefinite type is not
/// Serre cyclotomic because log rho(Phi) > 0.
inline SerreVerdict graded_path_verdict(const Quiver& q)
{
    const QuiverType type = classify_quiver(q);
    if (std::holds_alternative<IndefiniteType>(type)) return NotSerreCyclotomic{"indefinite type: log rho(Phi) > 0"};

    if (std::holds_alternative<FiniteType>(type)) {
        FractionallyCalabiYau f;
        f.reason = "finite type; fractionally Calabi-Yau, Coxeter matrix periodic";
        const auto profile = cyclotomic_profile(coxeter_matrix(cartan_path_algebra(q)));
        f.coxeter_period = profile.period;
        return f;
    }

    if (q.is_tree()) {
        if (auto w = detail::affine_tree_weights(q)) {
            std::int64_t p = 1;
            for (auto x : *w) p = std::lcm(p, static_cast<std::int64_t>(x));
            return SerreCyclotomic{2, p, p, "affine tree; derived equivalent to a canonical algebra with delta < 0"};
        }
        return SerreCyclotomic{2, std::nullopt, std::nullopt, "affine tree of unrecognized shape; exponents unknown"};
    }

    if (!q.is_cycle_graph()) return UnknownVerdict{"affine quiver with loops"};
    const auto walk = detail::walk_cycle(q);
    if (walk.forward == 0 || walk.backward == 0)
        return UnknownVerdict{"oriented cycle: the path algebra is infinite-dimensional"};
    if (walk.winding != 0)
        return UnknownVerdict{"A~ cycle with winding number " + std::to_string(walk.winding) + "; not decided"};
    const auto p = std::lcm(static_cast<std::int64_t>(walk.forward), static_cast<std::int64_t>(walk.backward));
    return SerreCyclotomic{2, p, p,
                           "A~ cycle of winding 0; canonical weights (" + std::to_string(walk.forward) + "," +
                               std::to_string(walk.backward) + ")"};
}

struct CoxeterCheck {
    enum class Status { Passes, Fails, Inconclusive };
    Status status = Status::Fails;
    CycloProfile profile;
    std::optional<CycloWitness> witness;
    std::string message;
};

inline const char* to_string(CoxeterCheck::Status s)
{
    switch (s) {
    case CoxeterCheck::Status::Passes: return "passes";
    case CoxeterCheck::Status::Fails: return "fails";
    case CoxeterCheck::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Necessary condition for Serre cyclotomicity: some (Phi^{2n} - I)^l = 0.
/// Reports the minimal witness when it lies within the bounds.
inline CoxeterCheck coxeter_necessary_check(const RatMatrix& phi, std::uint64_t l_max, std::uint64_t n_max)
{
    if (l_max == 0 || n_max == 0) throw Error("coxeter_necessary_check: bounds must be positive");
    CoxeterCheck out;
    out.profile = cyclotomic_profile(phi);
    if (!out.profile.is_cyclotomic) {
        out.status = CoxeterCheck::Status::Fails;
        out.message = "fails necessary condition: Coxeter matrix is not cyclotomic";
        return out;
    }
    const auto& w = *out.profile.witness;
    if (w.l > l_max || w.n > n_max) {
        out.status = CoxeterCheck::Status::Inconclusive;
        out.message = "witness (n,l) = (" + std::to_string(w.n) + "," + std::to_string(w.l) + ") exceeds the bounds";
        return out;
    }
    out.status = CoxeterCheck::Status::Passes;
    out.witness = w;
    out.message = "passes necessary condition with (n,l) = (" + std::to_string(w.n) + "," + std::to_string(w.l) +
                  "); this does not prove Serre cyclotomicity";
    return out;
}

/// ((-1)^m Psi^n - I)^l = 0, exactly. Negative n uses Psi^{-1}.
inline bool verify_k_shadow(const RatMatrix& psi, std::int64_t l, std::int64_t m, std::int64_t n)
{
    if (!psi.is_square()) throw Error("verify_k_shadow: matrix is not square");
    if (l < 1) throw Error("verify_k_shadow: l must be at least 1");
    if (n == 0) throw Error("verify_k_shadow: n must be nonzero");
    const auto inv = try_inverse(psi);
    if (!inv) throw Error("verify_k_shadow: matrix is singular");
    RatMatrix pn = power(n > 0 ? psi : *inv, static_cast<unsigned long long>(n > 0 ? n : -n));
    if (m % 2 != 0) pn = -pn;
    return power(pn - RatMatrix::identity(psi.rows()), static_cast<unsigned long long>(l)).is_zero();
}

/// h_t = (m/n) t and h^pol <= l - 1.
struct EntropyLine {
    Rational slope;
    std::int64_t poly_entropy_bound = 0;
};

inline EntropyLine entropy_line(const SerreVerdict& v)
{
    const auto e = exponents(v);
    if (!e) throw Error("entropy_line: verdict carries no exponents (m, n)");
    Rational slope(Integer(static_cast<long>(e->first)), Integer(static_cast<long>(e->second)));
    slope.canonicalize();
    return {slope, *order(v) - 1};
}

inline Rational serre_entropy(const SerreVerdict& v, const Rational& t) { return entropy_line(v).slope * t; }

namespace detail {

inline double log_abs(const Integer& z)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// ||x||_1 of an integral vector, exactly.
inline Integer l1_norm(const std::vector<Rational>& x)
{
    Integer s = 0;
    for (const auto& e : x) {
        if (!is_integer(e)) throw Error("growth: iterate is not integral");
        s += quiverlab::abs(e).get_num();
    }
    return s;
}

inline std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v)
{
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

// ||Phi^k v||_1 for k = 0..N.
inline std::vector<Integer> orbit_norms(const RatMatrix& phi, std::vector<Rational> v, std::size_t n)
{
    if (!phi.is_square() || phi.rows() != v.size()) throw Error("growth: dimension mismatch");
    std::vector<Integer> out{l1_norm(v)};
    for (std::size_t k = 1; k <= n; ++k) {
        v = mat_vec(phi, v);
        out.push_back(l1_norm(v));
    }
    return out;
}

} // namespace detail

struct HereditaryEntropy {
    double h0 = 0;
    double spectral_radius = 0;
    std::vector<double> trace;  // trace[k-1] = (1/k) log ||Phi^k v||_1
    std::vector<Rational> start;  // v, the dimension vector of DA
};

/// h0 = log rho(Phi) for an acyclic quiver, with the orbit of dim DA under
/// Phi as an empirical check.
inline HereditaryEntropy hereditary_entropy(const Quiver& q, std::size_t iterations, double tol = 1e-4)
{
    if (iterations == 0) throw Error("hereditary_entropy: need at least one iteration");
    if (!q.is_connected()) throw Error("hereditary_entropy: quiver is not connected");
    if (!q.is_acyclic()) throw Error("hereditary_entropy: quiver has an oriented cycle (acyclic quiver required)");
    const RatMatrix c = cartan_path_algebra(q);
    const RatMatrix phi = coxeter_matrix(c);

    HereditaryEntropy out;
    out.spectral_radius = spectral_radius(phi, tol);
    out.h0 = std::max(0.0, std::log(out.spectral_radius));
    // (DA)_i = sum_j dim e_j A e_i: the column sums of C
    out.start.assign(c.cols(), Rational(0));
    for (std::size_t i = 0; i < c.cols(); ++i)
        for (std::size_t j = 0; j < c.rows(); ++j) out.start[i] += c(j, i);

    const auto norms = detail::orbit_norms(phi, out.start, iterations);
    for (std::size_t k = 1; k <= iterations; ++k) out.trace.push_back(detail::log_abs(norms[k]) / static_cast<double>(k));
    return out;
}

struct GrowthDegree {
    bool exponential = false;
    unsigned degree = 0;  // for polynomial growth
    double loglog_slope = 0;
    double loglog_residual = 0;
    double exp_slope = 0;
    double exp_residual = 0;
};

inline std::string to_string(const GrowthDegree& g)
{
    return g.exponential ? std::string("Exponential") : "PolynomialDegree(" + std::to_string(g.degree) + ")";
}

/// Growth of ||Phi^k v||_1 over k in [N/2, N]: bounded gives degree 0,
/// a better exponential fit with slope above exp_threshold gives
/// Exponential, otherwise the rounded log-log slope.
inline GrowthDegree growth_degree(const RatMatrix& phi, const std::vector<Rational>& v, std::size_t n,
                                  double exp_threshold = 0.05)
{
    if (n < 12) throw Error("growth_degree: need N >= 12");
    const auto norms = detail::orbit_norms(phi, v, n);
    const std::size_t start = n / 2;

    GrowthDegree out;
    Integer head = 0, tail = 0;
    for (std::size_t k = 0; k < start; ++k) head = std::max(head, norms[k]);
    for (std::size_t k = start; k <= n; ++k) tail = std::max(tail, norms[k]);
    if (tail == 0) return out;

    std::vector<double> logk, ks, logd;
    for (std::size_t k = std::max<std::size_t>(start, 1); k <= n; ++k) {
        if (norms[k] == 0) continue;
        logk.push_back(std::log(static_cast<double>(k)));
        ks.push_back(static_cast<double>(k));
        logd.push_back(detail::log_abs(norms[k]));
    }
    const auto pw = detail::least_squares(logk, logd);
    const auto ex = detail::least_squares(ks, logd);
    out.loglog_slope = pw.slope;
    out.loglog_residual = pw.residual;
    out.exp_slope = ex.slope;
    out.exp_residual = ex.residual;

    if (tail <= head) return out;
    if (ex.slope > exp_threshold && ex.residual < pw.residual) {
        out.exponential = true;
        return out;
    }
    out.degree = static_cast<unsigned>(std::max(0L, std::lround(pw.slope)));
    return out;
}

} // namespace quiverlab
