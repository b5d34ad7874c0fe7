#pragma once

// Cyclotomic polynomials, cyclotomic factorization of integer polynomials,
// the cyclotomicity profile of a matrix, and spectral radii.

#include "quiverlab/charpoly.hpp"
#include "quiverlab/matrix.hpp"
#include "quiverlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <vector>

namespace quiverlab {

inline std::uint64_t euler_phi(std::uint64_t d)
{
    std::uint64_t result = d;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

/// The d-th cyclotomic polynomial. Results are cached process-wide.
inline Polynomial cyclotomic_poly(unsigned d)
{
    if (d == 0) throw Error("cyclotomic_poly: d must be positive");
    static std::mutex mutex;
    static std::map<unsigned, Polynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    Polynomial quotient = Polynomial::x_pow_minus_one(d);
    for (unsigned e = 1; e < d; ++e) {
        if (d % e) continue;
        auto [q, r] = divmod(quotient, cyclotomic_poly(e));
        if (!r.is_zero()) throw Error("cyclotomic_poly: inexact division");
        quotient = std::move(q);
    }
    std::lock_guard lock(mutex);
    cache.emplace(d, quotient);
    return quotient;
}

/// One factor Phi_d^multiplicity.
struct CycloFactor {
    unsigned order = 0;
    unsigned multiplicity = 0;
    friend bool operator==(const CycloFactor&, const CycloFactor&) = default;
};

/// Largest d with phi(d) <= degree is below 2 degree^2 + 2, since phi(d) >= sqrt(d/2).
inline std::vector<unsigned> cyclotomic_candidates(long degree)
{
    std::vector<unsigned> out;
    if (degree < 1) return out;
    const auto bound = static_cast<unsigned>(2 * degree * degree + 2);
    for (unsigned d = 1; d <= bound; ++d)
        if (euler_phi(d) <= static_cast<std::uint64_t>(degree)) out.push_back(d);
    return out;
}

/// Factorization of a monic integer polynomial into cyclotomic
/// polynomials, or std::nullopt when no such factorization exists.
inline std::optional<std::vector<CycloFactor>> cyclotomic_factorization(const Polynomial& p)
{
    if (p.is_zero()) throw Error("cyclotomic_factorization: zero polynomial");
    if (!p.is_monic()) throw Error("cyclotomic_factorization: polynomial is not monic");
    if (!p.is_integral()) return std::nullopt;

    std::vector<CycloFactor> factors;
    Polynomial rest = p;
    for (unsigned d : cyclotomic_candidates(p.degree())) {
        if (rest.degree() < 1) break;
        const Polynomial phi = cyclotomic_poly(d);
        if (phi.degree() > rest.degree()) continue;
        unsigned mult = 0;
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = divmod(rest, phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult) factors.push_back({d, mult});
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

/// Product of Phi_d^mult over the given factors.
inline Polynomial expand(const std::vector<CycloFactor>& factors)
{
    Polynomial p = Polynomial::constant(1);
    for (const auto& f : factors) p = p * pow(cyclotomic_poly(f.order), f.multiplicity);
    return p;
}

/// Companion matrix of a monic polynomial (last column holds -c_0..-c_{n-1}).
inline RatMatrix companion(const Polynomial& p)
{
    if (!p.is_monic()) throw Error("companion: polynomial is not monic");
    const auto n = static_cast<std::size_t>(p.degree());
    RatMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
    return c;
}

struct CycloWitness {
    std::uint64_t n = 0;
    unsigned l = 0;
    friend bool operator==(const CycloWitness&, const CycloWitness&) = default;
};

/// Cyclotomicity report of an invertible matrix M.
///
/// orders lists (d, multiplicity of Phi_d in the minimal polynomial). The
/// witness (n, l) is the smallest pair with (M^{2n} - I)^l = 0; it has been
/// checked by exact matrix arithmetic before it is reported.
struct CycloProfile {
    bool is_cyclotomic = false;
    std::vector<CycloFactor> orders;
    bool periodic = false;
    std::optional<std::uint64_t> period;
    std::optional<CycloWitness> witness;
    friend bool operator==(const CycloProfile&, const CycloProfile&) = default;
};

inline std::uint64_t lcm_of_orders(const std::vector<CycloFactor>& factors)
{
    std::uint64_t l = 1;
    for (const auto& f : factors) l = std::lcm(l, static_cast<std::uint64_t>(f.order));
    return l;
}

/// True when (M^{2n} - I)^l vanishes.
inline bool annihilates(const RatMatrix& m, std::uint64_t n, unsigned l)
{
    RatMatrix base = power(m, 2 * n) - RatMatrix::identity(m.rows());
    return power(base, l).is_zero();
}

inline CycloProfile cyclotomic_profile(const RatMatrix& m)
{
    if (!m.is_square()) throw Error("cyclotomic_profile: matrix is not square");
    if (m.rows() > 0 && determinant(m) == 0) throw Error("cyclotomic_profile: matrix is singular");

    CycloProfile profile;
    if (!cyclotomic_factorization(char_poly(m))) return profile;

    auto orders = cyclotomic_factorization(min_poly(m));
    if (!orders) throw Error("cyclotomic_profile: minimal polynomial is not cyclotomic");
    profile.is_cyclotomic = true;
    profile.orders = *orders;

    const std::uint64_t lcm = lcm_of_orders(profile.orders);
    unsigned l = 1;
    for (const auto& f : profile.orders) l = std::max(l, f.multiplicity);
    profile.periodic = (l == 1);
    if (profile.periodic) profile.period = lcm;

    const std::uint64_t n = lcm / std::gcd(lcm, std::uint64_t{2});
    if (!annihilates(m, n, l)) throw Error("cyclotomic_profile: witness failed exact verification");
    profile.witness = CycloWitness{n, l};
    return profile;
}

namespace detail {

// Simultaneous root finding (Aberth-Ehrlich) for a monic real polynomial.
inline std::vector<std::complex<long double>> aberth_roots(const Polynomial& p)
{
    using C = std::complex<long double>;
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<long double> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(p.coeff(i).get_d());

    long double bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::fabs(c[i] / c[n]));
    bound += 1;

    auto eval = [&](C z, C& deriv) {
        C v = 0;
        deriv = 0;
        for (std::size_t i = n + 1; i-- > 0;) {
            deriv = deriv * z + v;
            v = v * z + c[i];
        }
        return v;
    };

    std::vector<C> z(n);
    const long double pi = std::acos(-1.0L);
    const long double r0 = std::min(bound, 2.0L) * 0.9L;
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(r0, 2 * pi * (static_cast<long double>(k) + 0.25L) / static_cast<long double>(n));

    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C d;
            const C v = eval(z[k], d);
            if (v == C(0)) continue;
            const C ratio = v / d;
            C repulsion = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += C(1) / (z[k] - z[j]);
            const C step = ratio / (C(1) - ratio * repulsion);
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-18L) break;
    }
    return z;
}

} // namespace detail

/// Largest eigenvalue modulus, within tol.
///
/// Cyclotomic factors are split off exactly (they contribute modulus 1). The
/// remaining roots are located by Aberth iteration; a dominant real root is
/// then bracketed and bisected using exact sign evaluation.
inline double spectral_radius(const RatMatrix& m, double tol = 1e-4)
{
    if (!m.is_square()) throw Error("spectral_radius: matrix is not square");
    if (!(tol > 0)) throw Error("spectral_radius: tolerance must be positive");
    if (m.rows() == 0) return 0.0;

    Polynomial rest = char_poly(m);
    while (rest.degree() > 0 && rest.coeff(0) == 0) rest = divmod(rest, Polynomial::x()).first;
    if (rest.degree() == 0) return 0.0;

    bool unit_roots = false;
    if (rest.is_integral()) {
        for (unsigned d : cyclotomic_candidates(rest.degree())) {
            if (rest.degree() < 1) break;
            const Polynomial phi = cyclotomic_poly(d);
            while (rest.degree() >= phi.degree()) {
                auto [q, r] = divmod(rest, phi);
                if (!r.is_zero()) break;
                rest = std::move(q);
                unit_roots = true;
            }
        }
    }
    if (rest.degree() == 0) return 1.0;

    const auto roots = detail::aberth_roots(rest);
    long double best = 0;
    std::complex<long double> dominant = 0;
    for (const auto& z : roots)
        if (std::abs(z) > best) {
            best = std::abs(z);
            dominant = z;
        }

    // Refine a real dominant root by bisection on an exact sign change.
    if (std::fabs(dominant.imag()) < 1e-6L * std::max(1.0L, best)) {
        const long double x0 = dominant.real();
        const long double width = std::max<long double>(tol, 1e-9L);
        Rational lo(static_cast<double>(x0 - width));
        Rational hi(static_cast<double>(x0 + width));
        int slo = sgn(rest(lo));
        const int shi = sgn(rest(hi));
        if (slo != 0 && shi != 0 && slo != shi) {
            const Rational target(tol / 4);
            while (hi - lo > target) {
                Rational mid = (lo + hi) / 2;
                const int s = sgn(rest(mid));
                if (s == 0) {
                    lo = hi = mid;
                    break;
                }
                if (s == slo)
                    lo = mid;
                else
                    hi = mid;
            }
            best = std::fabs(static_cast<long double>(Rational((lo + hi) / 2).get_d()));
        }
    }
    double rho = static_cast<double>(best);
    if (unit_roots) rho = std::max(rho, 1.0);
    return rho;
}

} // namespace quiverlab
