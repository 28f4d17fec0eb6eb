#include "stairlab/block.hpp"

#include <algorithm>
#include <atomic>

#include "stairlab/parallel.hpp"

namespace stairlab {

namespace {

// z > 3 + 2*sqrt(2), exactly.
bool above_acc_min(const Rat& z) { return z > 3 && (z - 3) * (z - 3) > 8; }

// mu_{E,b}(z) > (1+z)/(3-b) with b a surd and z rational, linear in b.
bool blocked_at(const ClassTuple& c, const Rat& z, const QuadSurd& b) {
    QuadSurd three_minus_b = QuadSurd(Rat(3)) - b;
    QuadSurd d_minus_mb = QuadSurd(Rat(c.d)) - QuadSurd(Rat(c.m)) * b;
    QuadSurd lhs = (z <= c.center() ? QuadSurd(Rat(c.q) * z) : QuadSurd(Rat(c.p))) * three_minus_b;
    QuadSurd rhs = QuadSurd(1 + z) * d_minus_mb;
    return lhs > rhs;
}

} // namespace

bool is_blocked_z(const ClassTuple& c, const Rat& z) {
    if (c.formal) raise(errc::formal_class, "blocking test needs a geometric class");
    if (!above_acc_min(z))
        raise(errc::out_of_domain, "z must exceed 3+2*sqrt(2), got " + to_string(z));
    return blocked_at(c, z, acc_inv(z, c.eps));
}

bool is_blocked_b(const ClassTuple& c, const Rat& b) {
    if (c.formal) raise(errc::formal_class, "blocking test needs a geometric class");
    QuadSurd z = acc(b);
    QuadSurd three_minus_b = QuadSurd(Rat(3)) - QuadSurd(b);
    QuadSurd d_minus_mb = QuadSurd(Rat(c.d) - Rat(c.m) * b);
    QuadSurd lhs =
        (z <= QuadSurd(c.center()) ? QuadSurd(Rat(c.q)) * z : QuadSurd(Rat(c.p))) * three_minus_b;
    QuadSurd rhs = (QuadSurd(Rat(1)) + z) * d_minus_mb;
    return lhs > rhs;
}

namespace {

QuadSurd staircase_center_limit(const ClassTuple& s0, const ClassTuple& s1, const Int& nu) {
    return recursion_limit(s0.p, s1.p, s0.q, s1.q, nu);
}

QuadSurd staircase_slope_limit(const ClassTuple& s0, const ClassTuple& s1, const Int& nu) {
    return recursion_limit(s0.m, s1.m, s0.d, s1.d, nu);
}

} // namespace

BlockedInterval blocked_interval(const Label& lbl) {
    BlockedInterval out;
    out.label = lbl;
    out.owner = class_at_label(lbl);
    if (out.owner.formal)
        raise(errc::formal_class, "no blocked interval for formal tuple " + out.owner.str());
    ClassTuple asc0, asc1, desc0, desc1;
    Int nu;
    if (lbl.endpoint) {
        PrincipalStaircase asc = staircase_at_label(lbl, Direction::ascending);
        PrincipalStaircase desc = staircase_at_label(lbl, Direction::descending);
        asc0 = asc.seed0; asc1 = asc.seed1;
        desc0 = desc.seed0; desc1 = desc.seed1;
        nu = asc.nu;
    } else {
        // The interval of a middle class is bounded by the limits of the
        // staircases of its two derived triples, both with nu = t(owner).
        Triple t = triple_at_label(lbl);
        Triple xt = mutate(t, MutationSide::x);
        Triple yt = mutate(t, MutationSide::y);
        asc0 = xt.left; asc1 = xt.mid;
        desc0 = yt.right; desc1 = yt.mid;
        nu = out.owner.t;
    }
    out.z_lo = staircase_center_limit(asc0, asc1, nu);
    out.z_hi = staircase_center_limit(desc0, desc1, nu);
    QuadSurd b0 = staircase_slope_limit(asc0, asc1, nu);
    QuadSurd b1 = staircase_slope_limit(desc0, desc1, nu);
    if (b0 < b1) { out.b_lo = b0; out.b_hi = b1; }
    else { out.b_lo = b1; out.b_hi = b0; }
    return out;
}

namespace {

// Rational point strictly between 3+2*sqrt(2) and `below`, unblocked for c.
Rat find_unblocked_below(const ClassTuple& c, const Rat& center) {
    const Rat amin_lo(14571, 2500); // < 3+2*sqrt(2)
    Rat hi = center;
    for (int iter = 0; iter < 256; ++iter) {
        Rat cand = (hi + amin_lo) / 2;
        while (!above_acc_min(cand)) cand = (cand + hi) / 2;
        if (!is_blocked_z(c, cand)) return cand;
        hi = cand;
    }
    raise(errc::internal, "failed to exit the blocked interval below " + c.str());
}

} // namespace

BracketedInterval blocked_interval_bisect(const ClassTuple& c, const Rat& tol) {
    if (tol <= 0) raise(errc::invalid_argument, "tolerance must be positive");
    if (c.formal) raise(errc::formal_class, "no blocked interval for formal tuple " + c.str());
    Rat center = c.center();
    if (!above_acc_min(center) || !is_blocked_z(c, center))
        raise(errc::no_blocked_point, "center of " + c.str() + " is not blocked");
    BracketedInterval out;
    out.owner = c;
    // Lower endpoint: unblocked below, blocked at the center.
    Rat lo = find_unblocked_below(c, center), hi = center;
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        (is_blocked_z(c, mid) ? hi : lo) = mid;
    }
    out.z_lo_lo = lo;
    out.z_lo_hi = hi;
    // Upper endpoint: grow until unblocked, then bisect.
    Rat above = center + 1;
    while (is_blocked_z(c, above)) above = 2 * above;
    lo = center; hi = above;
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        (is_blocked_z(c, mid) ? lo : hi) = mid;
    }
    out.z_hi_lo = lo;
    out.z_hi_hi = hi;
    return out;
}

BlockSet block_set(const Int& n, int level, const SymWord& sym) {
    if (level < 1) raise(errc::out_of_domain, "level must be >= 1");
    auto nodes = enumerate_tree(n, level, sym);
    BlockSet out;
    out.intervals.resize(nodes.size());
    std::atomic<bool> failed{false};
    std::string failure;
    parallel_for(nodes.size(), [&](size_t i) {
        try {
            out.intervals[i] = blocked_interval(nodes[i].label);
        } catch (const Error& e) {
            if (!failed.exchange(true)) failure = e.what();
        }
    });
    if (failed) raise(errc::internal, "interval computation failed: " + failure);
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const BlockedInterval& a, const BlockedInterval& b) { return a.z_lo < b.z_lo; });
    out.disjoint = true;
    for (size_t i = 0; i + 1 < out.intervals.size(); ++i)
        if (out.intervals[i].z_hi > out.intervals[i + 1].z_lo) out.disjoint = false;
    return out;
}

namespace {

// Uncovered gaps (pairs of consecutive endpoints) inside [2n+6, 2n+8].
std::vector<std::pair<QuadSurd, QuadSurd>> coverage_gaps(const Int& n, int level) {
    BlockSet set = block_set(n, level);
    QuadSurd right_edge{Rat(2 * n + 8)};
    QuadSurd cover{Rat(2 * n + 6)};
    std::vector<std::pair<QuadSurd, QuadSurd>> gaps;
    for (const BlockedInterval& iv : set.intervals) {
        if (iv.z_lo > cover && cover < right_edge) {
            QuadSurd gap_end = iv.z_lo < right_edge ? iv.z_lo : right_edge;
            gaps.emplace_back(cover, gap_end);
        }
        if (iv.z_hi > cover) cover = iv.z_hi;
    }
    if (cover < right_edge) gaps.emplace_back(cover, right_edge);
    return gaps;
}

} // namespace

Rat density_gap(const Int& n, int level) {
    Rat best(0);
    for (const auto& [lo, hi] : coverage_gaps(n, level)) {
        Rat ub = (hi.rational_bounds(40).second - lo.rational_bounds(40).first) / 2;
        if (ub > best) best = ub;
    }
    return best;
}

bool density_gap_at_most(const Int& n, int level, const Rat& bound) {
    for (const auto& [lo, hi] : coverage_gaps(n, level)) {
        // (hi - lo)/2 <= bound, exactly: hi <= lo + 2*bound.
        if (hi > lo + QuadSurd(2 * bound)) return false;
    }
    return true;
}

CapacityValue capacity_lower(const Rat& b, const Rat& z, const std::vector<PoolClass>& pool) {
    CapacityValue best{volume(b, z), "volume"};
    for (const PoolClass& pc : pool) {
        Rat mu = obstruction_mu(pc.vec, b, z);
        if (QuadSurd(mu) > best.value) best = CapacityValue{QuadSurd(mu), pc.id};
    }
    return best;
}

std::vector<PoolClass> tree_pool(const Int& n, int level, const SymWord& sym) {
    std::vector<PoolClass> pool;
    for (const TreeNode& node : enumerate_tree(n, level, sym)) {
        if (node.cls.formal) continue;
        pool.push_back({node.label.address(), exc_vector(node.cls)});
    }
    return pool;
}

bool slope_criterion(const ClassTuple& step0, const ClassTuple& step1) {
    Int r0 = step0.p + step0.q, r1 = step1.p + step1.q;
    if (step0.t * r0 == 0 || step1.t * r1 == 0)
        raise(errc::degenerate_denominator, "slope ratio undefined");
    return Rat(step1.t * step1.t - 8, step1.t * r1) > Rat(step0.t * step0.t - 8, step0.t * r0);
}

std::pair<Rat, Rat> cantor_coordinate(const Label& lbl) {
    if (lbl.endpoint) return lbl.endpoint_right ? std::make_pair(Rat(1), Rat(2))
                                                : std::make_pair(Rat(-1), Rat(0));
    Rat x(0), scale(1);
    for (int d : lbl.digits) {
        scale /= 3;
        x += Rat(d) * scale;
    }
    scale /= 3;
    return {x + scale, x + 2 * scale};
}

ScanReport rational_blocked_scan(const Rat& lo, const Rat& hi, const Int& qmax,
                                 const std::vector<ClassTuple>& pool) {
    if (hi < lo) raise(errc::invalid_argument, "empty scan interval");
    if (!above_acc_min(hi)) raise(errc::out_of_domain, "scan interval lies below 3+2*sqrt(2)");
    std::vector<Rat> points;
    for (Int q = 1; q <= qmax; ++q) {
        Int p_lo = floor_rat(lo * q);
        while (Rat(p_lo, q) < lo) ++p_lo;
        // Points at or below the accumulation minimum are outside the
        // blocking predicate's domain and are skipped.
        for (Int p = p_lo; Rat(p, q) <= hi; ++p)
            if (gcd(p, q) == 1 && above_acc_min(Rat(p, q))) points.push_back(Rat(p, q));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    ScanReport report;
    report.entries.resize(points.size());
    parallel_for(points.size(), [&](size_t i) {
        ScanEntry& e = report.entries[i];
        e.z = points[i];
        e.blocked = false;
        for (const ClassTuple& c : pool) {
            if (is_blocked_z(c, points[i])) {
                e.blocked = true;
                e.owner = c.str();
                break;
            }
        }
    });
    for (const ScanEntry& e : report.entries)
        if (!e.blocked) report.unblocked.push_back(e.z);
    return report;
}

std::vector<ClassTuple> sym_family_pool(const SymWord& sym, const Int& n_lo, const Int& n_hi,
                                        int level) {
    std::vector<ClassTuple> pool;
    for (Int n = n_lo; n <= n_hi; ++n)
        for (const TreeNode& node : enumerate_tree(n, level, sym))
            if (!node.cls.formal) pool.push_back(node.cls);
    return pool;
}

} // namespace stairlab
