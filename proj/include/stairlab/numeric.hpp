#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stairlab/error.hpp"

namespace stairlab {

// Arbitrary-precision integers and rationals. cpp_rational keeps gcd(num,den)=1
// and den>0 as invariants, which is exactly the Rational contract here.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// Largest s with s*s <= n.  Requires n >= 0.
Int isqrt(const Int& n);

// Exact square root if n is a perfect square.
std::optional<Int> sqrt_exact(const Int& n);

// Exact square root of a nonnegative rational, if it is a rational square.
std::optional<Rat> sqrt_exact(const Rat& r);

// n = s^2 * f with f squarefree; returns {s, f}.  Requires n > 0.
// Full factorization: trial division for small primes, Miller-Rabin +
// Pollard-Brent for the rest.
std::pair<Int, Int> square_part(const Int& n);

Int floor_div(const Int& a, const Int& b);
Int floor_rat(const Rat& r);

// Parses "p/q" or "p"; also accepts decimal literals like "5.5" (exact).
Rat parse_rat(const std::string& text);

std::string to_string(const Int& v);
// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& r);

// Decimal rendering with `digits` significant digits, round-to-nearest.
std::string decimal_string(const Rat& r, int digits = 12);

} // namespace stairlab
