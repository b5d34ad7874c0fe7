#pragma once

// Univariate polynomials with exact rational coefficients, stored
// constant-to-leading. Characteristic polynomials of integer matrices land
// here with integral coefficients; is_integral() tells them apart.

#include "quiverlab/matrix.hpp"
#include "quiverlab/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace quiverlab {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& a) { return Polynomial({a}); }
    static Polynomial x() { return Polynomial({0, 1}); }
    /// x^n - 1
    static Polynomial x_pow_minus_one(std::size_t n)
    {
        std::vector<Rational> c(n + 1, Rational(0));
        c[0] = -1;
        c[n] = 1;
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const
    {
        if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integral() const
    {
        for (const auto& a : c_)
            if (!is_integer(a)) return false;
        return true;
    }

    Polynomial monic() const
    {
        Polynomial p = *this;
        if (p.is_zero()) return p;
        const Rational inv = Rational(1) / p.c_.back();
        for (auto& a : p.c_) a *= inv;
        return p;
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    long double evaluate(long double x) const
    {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
        return acc;
    }

    /// Horner evaluation at a square matrix.
    RatMatrix operator()(const RatMatrix& m) const
    {
        if (!m.is_square()) throw Error("polynomial evaluated at a non-square matrix");
        RatMatrix acc(m.rows(), m.cols());
        const RatMatrix id = RatMatrix::identity(m.rows());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id * (*it);
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const Rational& s)
    {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }

    /// Euclidean division over the rationals: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den)
    {
        if (den.is_zero()) throw Error("polynomial division by zero");
        std::vector<Rational> r = num.c_;
        const std::size_t dn = den.c_.size();
        if (r.size() < dn) return {Polynomial{}, num};
        std::vector<Rational> q(r.size() - dn + 1, Rational(0));
        const Rational inv = Rational(1) / den.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            const Rational f = r[k + dn - 1] * inv;
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j < dn; ++j) r[k + j] -= f * den.c_[j];
        }
        r.resize(dn - 1);
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Human-readable form, e.g. "x^2 - 7x + 1".
    std::string to_string() const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& a = c_[k];
            if (a == 0) continue;
            const bool neg = a < 0;
            const Rational mag = neg ? Rational(-a) : a;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1) os << mag.get_str();
            if (k >= 1) os << 'x';
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Name used for characteristic and minimal polynomials; coefficients are
/// integral whenever the source matrix is.
using IntPolynomial = Polynomial;

inline Polynomial pow(const Polynomial& p, unsigned e)
{
    Polynomial r = Polynomial::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

/// Monic gcd (zero when both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    auto [q, r] = divmod(a * b, gcd(a, b));
    return q.monic();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

} // namespace quiverlab
