#include <doctest.h>

#include "stairlab/block.hpp"

using namespace stairlab;

TEST_CASE("blocking predicate in z") {
    ClassTuple bu0 = class_from_center(6, 1);
    CHECK(is_blocked_z(bu0, Rat(13, 2)));
    CHECK(!is_blocked_z(bu0, Rat(8)));
    CHECK(is_blocked_z(bu0, Rat(6))); // center-blocking
    CHECK_THROWS_AS(is_blocked_z(bu0, Rat(29, 5)), Error); // below the minimum
    CHECK_THROWS_AS(is_blocked_z(lower_seed(), Rat(13, 2)), Error); // formal

    // The 13/2 test reduces to b > 1/2 with b = (78+15*sqrt17)/251.
    CHECK(acc_inv(Rat(13, 2), +1) == QuadSurd(78, 15, 251, 17));
    CHECK(acc_inv(Rat(13, 2), +1) > QuadSurd(Rat(1, 2)));
    CHECK(acc_inv(Rat(8), +1) < QuadSurd(Rat(3, 4)));
}

TEST_CASE("blocking predicate in b") {
    ClassTuple bu0 = class_from_center(6, 1);
    CHECK(is_blocked_b(bu0, Rat(1, 2)));  // acc(1/2) = 13/2-ish, inside
    CHECK(is_blocked_b(bu0, Rat(5, 11))); // acc = 6, the center
    CHECK(!is_blocked_b(bu0, Rat(3, 4))); // acc = 8, beyond
    CHECK(!is_blocked_b(bu0, Rat(1, 3))); // acc at the minimum, staircase point
}

TEST_CASE("exact blocked intervals: Farey table rows") {
    auto check_row = [](const std::string& label, const std::string& lo_cf,
                        const std::string& hi_cf) {
        BlockedInterval iv = blocked_interval(parse_label(label));
        CHECK(iv.z_lo == parse_periodic_cf(lo_cf).value());
        CHECK(iv.z_hi == parse_periodic_cf(hi_cf).value());
    };
    check_row("0:L", "[{5,1}~]", "[7;{5,1}~]");
    check_row("0:R", "[{7,3}~]", "[9;{7,3}~]");
    check_row("0:.1", "[7;{5,3,1,7}~]", "[7;{3,5,7,1}~]");
    check_row("0:.01", "[7;5,{1,3,5,1,7,5}~]", "[7;5,{3,1,5,7,1,5}~]");
    check_row("0:.21", "[7;3,{5,7,3,1,7,3}~]", "[7;3,{7,5,3,7,1,3}~]");

    BlockedInterval b0 = blocked_interval(parse_label("0:L"));
    CHECK(b0.z_lo == QuadSurd(5, 3, 2, 5));
    CHECK(b0.z_hi == QuadSurd(65, 3, 10, 5));
}

TEST_CASE("interval structure") {
    for (const std::string& label : {"0:L", "0:R", "0:.1", "0:.01", "0:.21", "1:.1", "0:.021"}) {
        BlockedInterval iv = blocked_interval(parse_label(label));
        // center inside I, m/d outside J.
        CHECK(iv.z_lo < QuadSurd(iv.owner.center()));
        CHECK(QuadSurd(iv.owner.center()) < iv.z_hi);
        QuadSurd md(iv.owner.slope_ratio());
        CHECK((md <= iv.b_lo || md >= iv.b_hi));
        CHECK(iv.b_lo < iv.b_hi);
        // Endpoints satisfy acc: z^2 - ((3-b)^2/(1-b^2) - 2) z + 1 = 0 with
        // (b,z) the matched endpoint pair (eps = +1 keeps orientation).
        QuadSurd one(Rat(1)), three(Rat(3)), two(Rat(2));
        for (auto [b, z] : {std::pair{iv.b_lo, iv.z_lo}, std::pair{iv.b_hi, iv.z_hi}}) {
            QuadSurd c = (three - b) * (three - b) / (one - b * b) - two;
            CHECK((z * z - c * z + one).is_zero());
        }
    }
}

TEST_CASE("bisection brackets the exact endpoints") {
    ClassTuple bu0 = class_from_center(6, 1);
    Rat tol(1, 1000000);
    BracketedInterval br = blocked_interval_bisect(bu0, tol);
    BlockedInterval exact = blocked_interval(parse_label("0:L"));
    CHECK(QuadSurd(br.z_lo_lo) <= exact.z_lo);
    CHECK(exact.z_lo <= QuadSurd(br.z_lo_hi));
    CHECK(QuadSurd(br.z_hi_lo) <= exact.z_hi);
    CHECK(exact.z_hi <= QuadSurd(br.z_hi_hi));
    CHECK(br.z_lo_hi - br.z_lo_lo <= tol);
    CHECK(br.z_hi_hi - br.z_hi_lo <= tol);

    BracketedInterval br74 = blocked_interval_bisect(class_from_center(29, 4), tol);
    BlockedInterval exact74 = blocked_interval(parse_label("0:.1"));
    CHECK(QuadSurd(br74.z_lo_lo) <= exact74.z_lo);
    CHECK(exact74.z_lo <= QuadSurd(br74.z_lo_hi));
    CHECK(QuadSurd(br74.z_hi_lo) <= exact74.z_hi);
    CHECK(exact74.z_hi <= QuadSurd(br74.z_hi_hi));

    // Center below the accumulation minimum: nothing is blocked.
    CHECK_THROWS_AS(blocked_interval_bisect(class_from_center(4, 1), Rat(1, 100)), Error);
    CHECK_THROWS_AS(blocked_interval_bisect(class_from_center(29, 5), Rat(1, 100)), Error);
}

TEST_CASE("block sets and disjointness") {
    BlockSet s2 = block_set(0, 2);
    CHECK(s2.intervals.size() == 3);
    CHECK(s2.disjoint);
    CHECK(s2.intervals[0].owner == class_from_center(6, 1));
    CHECK(s2.intervals[1].owner == class_from_center(29, 4));
    CHECK(s2.intervals[2].owner == class_from_center(8, 1));

    BlockSet s6 = block_set(0, 6);
    CHECK(s6.intervals.size() == 33);
    CHECK(s6.disjoint);

    BlockSet t1 = block_set(1, 2);
    CHECK(t1.intervals.size() == 3);
    CHECK(t1.disjoint);
    for (const auto& iv : t1.intervals) {
        CHECK(iv.owner.center() >= 8);
        CHECK(iv.owner.center() <= 10);
    }
}

TEST_CASE("density of the blocked set") {
    Rat g1 = density_gap(0, 1);
    CHECK(g1 <= Rat(1, 4));
    CHECK(density_gap_at_most(0, 1, Rat(1, 4)));
    CHECK(density_gap_at_most(0, 4, Rat(1, 32)));
    CHECK(density_gap_at_most(1, 1, Rat(1, 6)));
    // Monotone in the level.
    Rat prev = density_gap(0, 1);
    for (int level = 2; level <= 5; ++level) {
        Rat cur = density_gap(0, level);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("capacity lower bound") {
    std::vector<PoolClass> pool{{"L", exc_vector(class_from_center(6, 1))}};
    CapacityValue v = capacity_lower(Rat(2, 3), Rat(6), pool);
    CHECK(v.value == QuadSurd(Rat(18, 5)));
    CHECK(v.argmax == "L");
    CHECK(QuadSurd(Rat(18, 5)) > volume(Rat(2, 3), Rat(6)));

    std::vector<PoolClass> strand{{"seed2", exc_vector(third_strand(1))}};
    CapacityValue flat = capacity_lower(Rat(1, 5), Rat(6), strand);
    CHECK(flat.value == QuadSurd(Rat(5, 2)));
    CHECK(flat.argmax == "volume"); // obstruction exactly meets the volume

    CapacityValue vol = capacity_lower(Rat(0), Rat(1), {});
    CHECK(vol.value == QuadSurd(Rat(1)));
    CHECK(vol.argmax == "volume");
}

TEST_CASE("slope criterion") {
    ClassTuple bu1 = class_from_center(8, 1), bu2 = class_from_center(10, 1);
    ClassTuple e74 = class_from_center(29, 4);
    ClassTuple e11 = first_step_E1(1); // (27,20,55,6,33)
    CHECK(e11.str() == "(27,20,55,6,33,+1)");
    CHECK(slope_criterion(bu2, e11));
    CHECK(Rat(41, 77) < Rat(1081, 2013));
    CHECK(!slope_criterion(bu1, e74));
    CHECK(Rat(17, 45) > Rat(161, 429));

    Triple st = apply_sym_triple(parse_sym("S"), base_triple(0));
    CHECK(slope_criterion(st.right, st.mid)); // (47,8,5) then (170,29,13)
}

TEST_CASE("cantor coordinates") {
    CHECK(cantor_coordinate(parse_label("0:.1")) == std::pair{Rat(1, 3), Rat(2, 3)});
    CHECK(cantor_coordinate(parse_label("0:.01")) == std::pair{Rat(1, 9), Rat(2, 9)});
    CHECK(cantor_coordinate(parse_label("0:.21")) == std::pair{Rat(7, 9), Rat(8, 9)});
    CHECK(cantor_coordinate(parse_label("0:L")) == std::pair{Rat(-1), Rat(0)});
    CHECK(cantor_coordinate(parse_label("0:R")) == std::pair{Rat(1), Rat(2)});

    // Order-compatible with the block-set order at level 4.
    BlockSet s = block_set(0, 4);
    Rat prev(-10);
    for (const auto& iv : s.intervals) {
        auto [lo, hi] = cantor_coordinate(iv.label);
        CHECK(lo > prev);
        prev = hi;
    }
}

TEST_CASE("rational scan on a subinterval") {
    auto pool = sym_family_pool(SymWord{}, 0, 0, 6);
    ScanReport rep = rational_blocked_scan(Rat(6), Rat(13, 2), 6, pool);
    CHECK(rep.unblocked.empty());
    for (const auto& e : rep.entries) CHECK(e.blocked);

    // v_3 = 35/6 is unobstructed on the eps = +1 side.
    std::vector<ClassTuple> plus_pool = sym_family_pool(parse_sym("S^2"), 0, 3, 5);
    auto sr = sym_family_pool(parse_sym("SR"), 0, 3, 5);
    plus_pool.insert(plus_pool.end(), sr.begin(), sr.end());
    ScanReport v3 = rational_blocked_scan(Rat(35, 6) - Rat(1, 100), Rat(35, 6) + Rat(1, 100), 6,
                                          plus_pool);
    REQUIRE(v3.unblocked.size() == 1);
    CHECK(v3.unblocked[0] == Rat(35, 6));
}

TEST_CASE("staircase limits match the neighboring interval endpoints") {
    // The ascending staircase of a triple accumulates at the lower endpoint
    // of the right member's interval; the descending one at the upper
    // endpoint of the left member's.
    Triple t = triple_at_label(parse_label("0:.1"));
    QuadSurd asc_lim = recursion_limit(t.left.p, t.mid.p, t.left.q, t.mid.q, t.right.t);
    CHECK(asc_lim == blocked_interval(parse_label("0:R")).z_lo);
    QuadSurd desc_lim = recursion_limit(t.right.p, t.mid.p, t.right.q, t.mid.q, t.left.t);
    CHECK(desc_lim == blocked_interval(parse_label("0:L")).z_hi);

    Triple t01 = triple_at_label(parse_label("0:.01"));
    QuadSurd asc01 = recursion_limit(t01.left.p, t01.mid.p, t01.left.q, t01.mid.q, t01.right.t);
    CHECK(asc01 == blocked_interval(parse_label("0:.1")).z_lo);
}

TEST_CASE("symmetry images of intervals are Moebius images") {
    // R: z -> (6z-35)/(z-6) maps I_E to I_{R(E)} with the order reversed.
    auto moebius_R = [](const QuadSurd& z) {
        QuadSurd six(Rat(6)), c35(Rat(35));
        return (six * z - c35) / (z - six);
    };
    BlockedInterval base = blocked_interval(parse_label("0:.1"));
    BlockedInterval image = blocked_interval(parse_label("R:0:.1"));
    CHECK(image.z_lo == moebius_R(base.z_hi));
    CHECK(image.z_hi == moebius_R(base.z_lo));
    // S: z -> (6z-1)/z preserves the order.
    auto moebius_S = [](const QuadSurd& z) {
        QuadSurd six(Rat(6)), one(Rat(1));
        return (six * z - one) / z;
    };
    BlockedInterval simage = blocked_interval(parse_label("S:0:.1"));
    CHECK(simage.z_lo == moebius_S(base.z_lo));
    CHECK(simage.z_hi == moebius_S(base.z_hi));
}

TEST_CASE("centers have minimal weight length inside the triple gap") {
    // For triples to level 4, the middle center's weight length is strictly
    // smaller than that of any rational with denominator <= 40 strictly
    // between the neighboring blocked intervals.
    for (const TreeNode& node : enumerate_tree(0, 4)) {
        if (node.label.endpoint) continue;
        const Triple& t = node.triple;
        QuadSurd gap_lo = recursion_limit(t.right.p, t.mid.p, t.right.q, t.mid.q, t.left.t);
        QuadSurd gap_hi = recursion_limit(t.left.p, t.mid.p, t.left.q, t.mid.q, t.right.t);
        CHECK(gap_lo < QuadSurd(node.cls.center()));
        CHECK(QuadSurd(node.cls.center()) < gap_hi);
        Int center_len = Weight::of_rational(node.cls.center()).weight_length();
        for (int q = 1; q <= 40; ++q) {
            auto [llo, lhi] = gap_lo.rational_bounds(30);
            auto [hlo, hhi] = gap_hi.rational_bounds(30);
            for (Int p = floor_rat(llo * q); Rat(p, q) < hhi; ++p) {
                Rat z(p, q);
                if (gcd(p, Int(q)) != 1) continue;
                if (!(QuadSurd(z) > gap_lo && QuadSurd(z) < gap_hi)) continue;
                if (z == node.cls.center()) continue;
                CHECK(Weight::of_rational(z).weight_length() > center_len);
            }
        }
    }
}
