#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stairlab/symmetry.hpp"

namespace stairlab {

/// Open blocked z-interval I_E and b-interval J_E of a blocking class,
/// with exact surd endpoints.
struct BlockedInterval {
    ClassTuple owner;
    Label label;
    QuadSurd z_lo, z_hi;
    QuadSurd b_lo, b_hi;
};

/// Exact test: with b = acc_inv(z, eps(c)), does the obstruction of c beat
/// the volume at the accumulation point z?  Linear in b, so one surd
/// comparison.  Requires z above the accumulation minimum.
bool is_blocked_z(const ClassTuple& c, const Rat& z);

/// Same test driven from the b side, z = acc(b) exact.
bool is_blocked_b(const ClassTuple& c, const Rat& b);

/// Exact interval endpoints via the staircase limits of the two derived
/// triples (middle classes) or the seed staircases (endpoint classes).
BlockedInterval blocked_interval(const Label& lbl);

/// Rational brackets of width <= tol around the exact endpoints, driven by
/// the exact predicate only.
struct BracketedInterval {
    ClassTuple owner;
    Rat z_lo_lo, z_lo_hi; // bracket around the lower endpoint
    Rat z_hi_lo, z_hi_hi; // bracket around the upper endpoint
};
BracketedInterval blocked_interval_bisect(const ClassTuple& c, const Rat& tol);

/// Intervals of all tree classes to `level`, sorted by lower endpoint, with
/// exact pairwise-disjointness verification.
struct BlockSet {
    std::vector<BlockedInterval> intervals; // sorted by z_lo
    bool disjoint;
};
BlockSet block_set(const Int& n, int level, const SymWord& sym = SymWord{});

/// Max distance from a point of [2n+6, 2n+8] to the union of blocked
/// z-intervals at <= level, as an exact-comparison-backed upper bound.
Rat density_gap(const Int& n, int level);
/// Exact comparison of the gap against a rational bound.
bool density_gap_at_most(const Int& n, int level, const Rat& bound);

/// Pool entry for the capacity evaluator.
struct PoolClass {
    std::string id;
    ExcVector vec;
};

struct CapacityValue {
    QuadSurd value;
    std::string argmax; // "volume" or a pool id
};

/// Exact max of the volume bound and the pool obstructions at (b, z).
CapacityValue capacity_lower(const Rat& b, const Rat& z, const std::vector<PoolClass>& pool);

/// Tree classes at <= level as a pool, ids = addresses.
std::vector<PoolClass> tree_pool(const Int& n, int level, const SymWord& sym = SymWord{});

/// The slope comparison (t1^2-8)/(t1 r1) > (t0^2-8)/(t0 r0) for consecutive
/// steps of a descending pre-staircase, exact.
bool slope_criterion(const ClassTuple& step0, const ClassTuple& step1);

/// Image of a label's blocked interval in the middle-thirds coordinate:
/// middle classes map to the open middle third of their digit prefix,
/// endpoints to [-1,0) and (1,2].
std::pair<Rat, Rat> cantor_coordinate(const Label& lbl);

/// One scanned rational point.
struct ScanEntry {
    Rat z;
    bool blocked;
    std::string owner; // class tuple text when blocked
};

struct ScanReport {
    std::vector<ScanEntry> entries;
    std::vector<Rat> unblocked; // flagged points
};

/// Tests every reduced p/q in [lo,hi] with q <= qmax against the pool.
ScanReport rational_blocked_scan(const Rat& lo, const Rat& hi, const Int& qmax,
                                 const std::vector<ClassTuple>& pool);

/// Classes of the sym-image trees for families n in [n_lo, n_hi], <= level.
std::vector<ClassTuple> sym_family_pool(const SymWord& sym, const Int& n_lo, const Int& n_hi,
                                        int level);

} // namespace stairlab
