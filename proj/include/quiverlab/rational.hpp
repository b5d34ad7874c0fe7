#pragma once

// Exact scalars. Everything on the decision path runs over GMP rationals.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quiverlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Library error. Thrown for precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". The result is canonicalized.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) throw Error("empty rational literal");
    s = s.substr(start);

    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p()) throw Error("integer does not fit into 64 bits: " + z.get_str());
    return z.get_si();
}

} // namespace quiverlab
