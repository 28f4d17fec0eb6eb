#include <doctest.h>

#include "stairlab/classes.hpp"

using namespace stairlab;

namespace {

ExcVector vec(Int deg, std::vector<Int> coeffs) { return ExcVector{std::move(deg), std::move(coeffs)}; }

std::vector<Int> ones(int n, Int lead) {
    std::vector<Int> v{lead};
    for (int i = 0; i < n; ++i) v.push_back(1);
    return v;
}

} // namespace

TEST_CASE("class from center") {
    ClassTuple e = class_from_center(29, 4);
    CHECK(e.str() == "(14,9,29,4,13,+1)");
    CHECK(!e.formal);

    CHECK(class_from_center(6, 1).str() == "(3,2,6,1,3,+1)");
    CHECK_THROWS_AS(class_from_center(7, 1), Error); // the (7/2,5/2,7,1,4) pseudo-class
    CHECK_THROWS_AS(class_from_center(4, 2), Error); // not reduced
    CHECK_THROWS_AS(class_from_center(1, 2), Error); // not > 1

    // Small geometric classes on the strands at b = 1/3.
    CHECK(class_from_center(2, 1).str() == "(1,0,2,1,1,-1)");
    CHECK(class_from_center(4, 1).str() == "(2,1,4,1,1,+1)");
    CHECK(class_from_center(5, 1).str() == "(2,0,5,1,2,-1)");

    // At most one eps gives an integral pair (d,m): enumerate.
    for (int p = 2; p <= 80; ++p) {
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            Int tt = Int(p) * p - 6 * p * q + Int(q) * q + 8;
            auto t = tt < 0 ? std::nullopt : sqrt_exact(tt);
            if (!t || *t == 0) continue;
            int integral = 0;
            for (int eps : {1, -1}) {
                if ((3 * (Int(p) + q) + eps * *t) % 8 == 0 &&
                    ((Int(p) + q) + 3 * eps * *t) % 8 == 0)
                    ++integral;
            }
            CHECK(integral <= 1);
        }
    }
}

TEST_CASE("exceptional vectors and intersections") {
    ClassTuple bu0 = class_from_center(6, 1), bu1 = class_from_center(8, 1);
    ClassTuple e74 = class_from_center(29, 4), e752 = class_from_center(79, 11);

    CHECK(exc_vector(bu1).deg == 4);
    CHECK(exc_vector(bu1).coeffs == ones(8, 3));
    CHECK(exc_vector(bu0).coeffs == ones(6, 2));
    ExcVector v74 = exc_vector(e74);
    CHECK(v74.deg == 14);
    CHECK(v74.coeffs == std::vector<Int>{9, 4, 4, 4, 4, 4, 4, 4, 1, 1, 1, 1});

    ExcVector fake = vec(75, {55, 17, 17, 17, 17, 17, 17, 17, 17, 17});
    CHECK(intersection(fake, exc_vector(bu1)) == -1);
    CHECK(intersection(exc_vector(bu0), v74) == 0);
    CHECK(intersection(exc_vector(bu1), exc_vector(e752)) == 1);

    // Scaled weights for tuples with non-coprime (p,q).
    ClassTuple asharp_image(75, 55, 153, 17, 90, +1);
    CHECK(exc_vector(asharp_image).deg == 75);
    CHECK(exc_vector(asharp_image).coeffs ==
          std::vector<Int>{55, 17, 17, 17, 17, 17, 17, 17, 17, 17});

    // Self-intersection -1 for every quasi-perfect vector.
    for (int p = 2; p <= 60; ++p) {
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            try {
                ClassTuple c = class_from_center(p, q);
                if (c.formal) continue;
                ExcVector v = exc_vector(c);
                CHECK(intersection(v, v) == -1);
            } catch (const Error&) {
            }
        }
    }

    CHECK_THROWS_AS(exc_vector(ClassTuple(1, 1, 1, 1, 2, +1)), Error);
}

TEST_CASE("cremona reduction") {
    // Seed (1,0,2,1): one move to the exceptional terminal.
    CremonaResult r = cremona_reduce(vec(1, {0, 1, 1}));
    CHECK(r.exceptional);
    CHECK(r.steps == 1);

    CremonaResult bu0 = cremona_reduce(vec(3, ones(6, 2)));
    CHECK(bu0.exceptional);
    CHECK(bu0.steps == 3);

    CremonaResult fake = cremona_reduce(vec(9, {5, 3, 3, 3, 3, 3, 3, 1, 1, 1}));
    CHECK(!fake.exceptional);
    // Stalls with a negative coefficient while deg > 0.
    CHECK(fake.terminal.deg > 0);
    bool has_negative = false;
    for (const Int& c : fake.terminal.coeffs) has_negative |= c < 0;
    CHECK(has_negative);

    // Step count is bounded by the initial degree.
    CHECK(fake.steps <= 9);
    CHECK(r.steps <= 1);
}

TEST_CASE("perfectness screen") {
    ClassTuple bu0 = class_from_center(6, 1), bu1 = class_from_center(8, 1);
    ClassTuple e74 = class_from_center(29, 4), e752 = class_from_center(79, 11);
    std::vector<ExcVector> pool{exc_vector(bu0), exc_vector(bu1), exc_vector(e74)};
    CHECK(perfectness_screen(e752, pool));
    CHECK(!perfectness_screen(ClassTuple(75, 55, 153, 17, 90, +1), {exc_vector(bu1)}));
    CHECK(perfectness_screen(e752, {}));
    // The fake ascending strand class meets B^U_0 negatively.
    CHECK(!perfectness_screen(ClassTuple(9, 5, 19, 3, 6, +1), {exc_vector(bu0)}));
}

TEST_CASE("accumulation point function") {
    CHECK(acc(Rat(1, 3)) == QuadSurd(3, 2, 1, 2));
    CHECK(acc(Rat(0)) == QuadSurd(7, 3, 2, 5));
    CHECK(acc(Rat(1, 5)) == QuadSurd(Rat(6)));
    CHECK(acc(Rat(5, 11)) == QuadSurd(Rat(6)));
    CHECK_THROWS_AS(acc(Rat(1)), Error);
    CHECK_THROWS_AS(acc(Rat(-1, 10)), Error);

    // acc(b) >= 3 + 2 sqrt(2) always.
    QuadSurd amin(3, 2, 1, 2);
    for (int i = 0; i <= 40; ++i) CHECK(acc(Rat(i, 41)) >= amin);
}

TEST_CASE("inverse accumulation point") {
    CHECK(acc_inv(Rat(6), +1) == QuadSurd(Rat(5, 11)));
    CHECK(acc_inv(Rat(6), -1) == QuadSurd(Rat(1, 5)));
    CHECK(acc_inv(Rat(7), +1) == QuadSurd(21, 16, 71, 2));
    CHECK_THROWS_AS(acc_inv(Rat(29, 5), +1), Error); // below the minimum

    // Round trip and the defining quadratic, both branches.
    for (int k = 0; k < 60; ++k) {
        Rat z = Rat(583, 100) + Rat(47 * k, 30);
        Rat w = z + 1 / z + 2;
        for (int eps : {+1, -1}) {
            QuadSurd b = acc_inv(z, eps);
            CHECK(acc(b) == QuadSurd(z));
            QuadSurd lhs = QuadSurd(w + 1) * b * b - QuadSurd(Rat(6)) * b + QuadSurd(9 - w);
            CHECK(lhs.is_zero());
        }
        // 2-to-1 away from the minimum.
        CHECK(acc_inv(z, +1) != acc_inv(z, -1));
    }
}

TEST_CASE("volume and obstruction values") {
    CHECK(volume(Rat(1, 5), Rat(6)) == QuadSurd(Rat(5, 2)));
    CHECK(volume(Rat(0), Rat(1)) == QuadSurd(Rat(1)));
    // Squared form of the volume at the minimum accumulation point.
    QuadSurd amin(3, 2, 1, 2);
    CHECK(amin / QuadSurd(Rat(8, 9)) == amin * QuadSurd(Rat(9, 8)));

    ClassTuple strand(2, 0, 5, 1, 2, -1);
    CHECK(obstruction_mu(strand, Rat(1, 5), Rat(6)) == Rat(5, 2));
    CHECK(obstruction_mu(class_from_center(6, 1), Rat(2, 3), Rat(6)) == Rat(18, 5));
    CHECK(obstruction_mu(class_from_center(29, 4), Rat(9, 14), Rat(7)) == Rat(392, 115));

    // General-vector overload agrees on perfect classes left of the center.
    ClassTuple e74 = class_from_center(29, 4);
    CHECK(obstruction_mu(exc_vector(e74), Rat(9, 14), Rat(7)) ==
          obstruction_mu(e74, Rat(9, 14), Rat(7)));

    // mu at the break point with b = m/d beats the volume, exactly.
    for (int p = 7; p <= 40; ++p) {
        for (int q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1 || Rat(p, q) <= 3 || (Rat(p, q) - 3) * (Rat(p, q) - 3) <= 8)
                continue;
            try {
                ClassTuple c = class_from_center(p, q);
                if (c.formal) continue;
                Rat b = c.slope_ratio();
                Rat mu = obstruction_mu(c, b, c.center());
                CHECK(QuadSurd(mu) > volume(b, c.center()));
            } catch (const Error&) {
            }
        }
    }
}

TEST_CASE("obstructive at center") {
    CHECK(obstructive_at_center(class_from_center(6, 1), Rat(5, 11)));
    for (int k = 1; k <= 10; ++k) {
        ClassTuple fake(11 * k - 2, 5 * k, 24 * k - 5, 4 * k - 1, 4 * k + 2, +1);
        CHECK(!obstructive_at_center(fake, Rat(5, 11)));
    }
    ClassTuple e74 = class_from_center(29, 4);
    CHECK(obstructive_at_center(e74, e74.slope_ratio()));
}
