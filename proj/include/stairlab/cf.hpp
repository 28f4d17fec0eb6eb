#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stairlab/surd.hpp"

namespace stairlab {

/// Continued fraction [s_0; s_1, ..., s_n] of a rational > 1.
/// Canonical: all entries >= 1, and the last entry >= 2 unless length 1.
class CFrac {
public:
    explicit CFrac(std::vector<Int> terms);
    static CFrac of_rational(const Rat& z); // requires z > 1
    Rat value() const;

    const std::vector<Int>& terms() const { return terms_; }
    /// Number of CF entries (n+1).
    size_t cf_length() const { return terms_.size(); }
    /// Sum of the entries; equals the number of weights of the center.
    Int weight_length() const;

    /// Order agrees with the rational values: entries at even places count
    /// up, odd places count down, a shorter expansion ends at an implicit
    /// zero place.
    std::strong_ordering compare(const CFrac& rhs) const;

    std::string str() const; // e.g. "[7;5,2]"

private:
    std::vector<Int> terms_;
};

/// Eventually periodic continued fraction, value a quadratic irrational > 1.
struct PeriodicCFrac {
    std::vector<Int> preperiod;
    std::vector<Int> period; // nonempty, entries >= 1

    /// Exact value: fixed point of the periodic tail pushed through the
    /// preperiod Moebius map.
    QuadSurd value() const;
    std::string str() const; // e.g. "[7;{5,1}~]"
};

/// Integral weight expansion W(p/q) stored as blocks q_a^(x s_a).
class Weight {
public:
    struct Block {
        Int value;
        Int count;
    };

    /// Weight expansion of z = p/q > 1 in lowest terms.
    static Weight of_rational(const Rat& z);

    const std::vector<Block>& blocks() const { return blocks_; }
    std::vector<Int> entries() const;
    Int weight_length() const; // sum of block counts
    Int sum() const;           // p + q - 1
    Int sum_squares() const;   // p * q

    std::string str() const; // e.g. "(4^7,1^4)"

private:
    std::vector<Block> blocks_;
};

/// Dot product of the weight expansions of z and z', shorter one zero-padded.
Int weight_dot(const Rat& z, const Rat& zp);

CFrac parse_cf(const std::string& text);
PeriodicCFrac parse_periodic_cf(const std::string& text);
Weight parse_weight(const std::string& text);

} // namespace stairlab
