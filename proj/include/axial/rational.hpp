#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" (any sign) or a decimal literal such as "-0.125".
/// Decimals are converted exactly, so "0.1" becomes 1/10.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace axial
