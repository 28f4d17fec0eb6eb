#pragma once

#include <compare>
#include <string>
#include <utility>

#include "stairlab/numeric.hpp"

namespace stairlab {

/// Exact element (a + b*sqrt(D))/c of a real quadratic field.
///
/// Canonical form: D squarefree, c > 0, gcd(a,b,c) = 1, and rational values
/// stored with D = 0, b = 0.  All operations are exact; comparisons are done
/// by sign analysis with at most two squarings, never floating point.
class QuadSurd {
public:
    QuadSurd() : a_(0), b_(0), c_(1), d_(0) {}
    QuadSurd(const Rat& r) : a_(num(r)), b_(0), c_(den(r)), d_(0) {}
    QuadSurd(const Int& a, const Int& b, const Int& c, const Int& D);

    static QuadSurd sqrt_rational(const Rat& r);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& D() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    Rat rational_value() const; // requires is_rational()
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    int sign() const;

    /// Galois conjugate (a - b*sqrt(D))/c.
    QuadSurd conjugate() const;
    /// x * conj(x) = (a^2 - b^2 D)/c^2, always rational.
    Rat norm() const;

    QuadSurd operator-() const;
    QuadSurd operator+(const QuadSurd& rhs) const;
    QuadSurd operator-(const QuadSurd& rhs) const;
    QuadSurd operator*(const QuadSurd& rhs) const;
    QuadSurd operator/(const QuadSurd& rhs) const;

    bool operator==(const QuadSurd& rhs) const;
    bool operator!=(const QuadSurd& rhs) const { return !(*this == rhs); }

    /// Total order across different radicands.
    std::strong_ordering compare(const QuadSurd& rhs) const;
    bool operator<(const QuadSurd& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const QuadSurd& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const QuadSurd& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const QuadSurd& rhs) const { return compare(rhs) >= 0; }

    /// Rational enclosure lo <= value <= hi with hi - lo <= 10^-prec_digits.
    std::pair<Rat, Rat> rational_bounds(int prec_digits) const;

    std::string str() const;
    std::string decimal(int digits = 12) const;

private:
    void normalize();

    Int a_, b_, c_, d_;
};

inline QuadSurd operator+(const Rat& lhs, const QuadSurd& rhs) { return QuadSurd(lhs) + rhs; }
inline QuadSurd operator-(const Rat& lhs, const QuadSurd& rhs) { return QuadSurd(lhs) - rhs; }
inline QuadSurd operator*(const Rat& lhs, const QuadSurd& rhs) { return QuadSurd(lhs) * rhs; }

/// Square root of a surd when representable in a quadratic field:
/// succeeds for rational squares and for s with sqrt(s) in Q(sqrt(D(s))).
std::optional<QuadSurd> sqrt_of_surd(const QuadSurd& s);

} // namespace stairlab
