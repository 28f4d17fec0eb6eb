#include <doctest.h>

#include <random>

#include "stairlab/cf.hpp"

using namespace stairlab;

namespace {

// Brute-force CF evaluation, independent of CFrac::value.
Rat eval_terms(const std::vector<int>& terms) {
    Rat v(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) v = Rat(*it) + 1 / v;
    return v;
}

CFrac make_cf(std::vector<int> terms) {
    std::vector<Int> t(terms.begin(), terms.end());
    return CFrac(std::move(t));
}

} // namespace

TEST_CASE("continued fraction of rationals") {
    CHECK(CFrac::of_rational(Rat(29, 4)).str() == "[7;4]");
    CHECK(CFrac::of_rational(Rat(5, 3)).str() == "[1;1,2]");
    CHECK(CFrac::of_rational(Rat(6)).str() == "[6]");
    CHECK_THROWS_AS(CFrac::of_rational(Rat(1)), Error);
    CHECK_THROWS_AS(CFrac::of_rational(Rat(1, 2)), Error);

    // Trailing-one folding and round trips.
    CHECK(make_cf({1, 3, 1}).str() == "[1;4]");
    CHECK(make_cf({7, 3, 6}).value() == eval_terms({7, 3, 6}));
    CHECK(make_cf({7, 3, 6}).value() == Rat(139, 19));
    CHECK(make_cf({6}).value() == Rat(6));
    // [2n+7; 2n+4] at n = 0.
    CHECK(make_cf({7, 4}).value() == Rat(29, 4));

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pq(1, 10000);
    for (int i = 0; i < 500; ++i) {
        int p = pq(rng), q = pq(rng);
        if (p <= q) continue;
        Rat z(p, q);
        CHECK(CFrac::of_rational(z).value() == z);
    }
}

TEST_CASE("continued fraction ordering") {
    auto cmp = [](std::vector<int> a, std::vector<int> b) {
        return make_cf(std::move(a)).compare(make_cf(std::move(b)));
    };
    CHECK(cmp({1, 4}, {1, 4, 2}) == std::strong_ordering::greater);
    CHECK(cmp({1, 4, 2}, {1, 5}) == std::strong_ordering::greater);
    CHECK(cmp({7, 4}, {7, 3, 6}) == std::strong_ordering::less);
    CHECK(cmp({2}, {2, 1, 2}) == std::strong_ordering::less);
    CHECK(cmp({2, 1, 2}, {2, 1}) == std::strong_ordering::less); // [2;1] folds to [3]

    // Cross-check against rational comparison on random pairs.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> len(1, 5), entry(1, 6);
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> a(len(rng)), b(len(rng));
        for (int& v : a) v = entry(rng);
        for (int& v : b) v = entry(rng);
        if (a.back() == 1) a.back() = 2;
        if (b.back() == 1) b.back() = 2;
        CFrac x = make_cf(a), y = make_cf(b);
        auto by_value = x.value() < y.value()
                            ? std::strong_ordering::less
                            : (x.value() > y.value() ? std::strong_ordering::greater
                                                     : std::strong_ordering::equal);
        CHECK(x.compare(y) == by_value);
    }
}

TEST_CASE("weight expansions") {
    Weight w = Weight::of_rational(Rat(29, 4));
    CHECK(w.str() == "(4^7,1^4)");
    CHECK(CFrac::of_rational(Rat(29, 4)).cf_length() == 2);
    CHECK(w.weight_length() == 11);

    CHECK(Weight::of_rational(Rat(5, 3)).str() == "(3,2,1^2)");
    CHECK(Weight::of_rational(Rat(79, 11)).str() == "(11^7,2^5,1^2)");
    CHECK(Weight::of_rational(Rat(79, 11)).sum() == 89);
    CHECK(Weight::of_rational(Rat(79, 11)).sum_squares() == 869);

    // Block recursion q_a = q_{a-2} - s_{a-1} q_{a-1} and the two sum
    // identities, fuzzed.
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pq(1, 2000);
    for (int i = 0; i < 500; ++i) {
        int p = pq(rng), q = pq(rng);
        if (p <= q) continue;
        Int g = gcd(Int(p), Int(q));
        Rat z(p, q);
        Weight wt = Weight::of_rational(z);
        CHECK(wt.sum() == Int(p) / g + Int(q) / g - 1);
        CHECK(wt.sum_squares() == (Int(p) / g) * (Int(q) / g));
        CHECK(wt.blocks().front().value == Int(q) / g);
        CHECK(wt.blocks().back().value == 1);
        auto cf = CFrac::of_rational(z);
        for (size_t a = 2; a < wt.blocks().size(); ++a)
            CHECK(wt.blocks()[a].value ==
                  wt.blocks()[a - 2].value - cf.terms()[a - 1] * wt.blocks()[a - 1].value);
    }
}

TEST_CASE("weight dot products") {
    CHECK(weight_dot(Rat(6), Rat(29, 4)) == 24);
    CHECK(weight_dot(Rat(2), Rat(2)) == 2);
    CHECK(weight_dot(Rat(7), Rat(29, 4)) == 28);

    // W(z) . W(z') >= min(pq', p'q) on fuzzed pairs.
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> pq(1, 300);
    for (int i = 0; i < 800; ++i) {
        int p = pq(rng), q = pq(rng), pp = pq(rng), qq = pq(rng);
        if (p <= q || pp <= qq) continue;
        if (gcd(Int(p), Int(q)) != 1 || gcd(Int(pp), Int(qq)) != 1) continue;
        Int dot = weight_dot(Rat(p, q), Rat(pp, qq));
        CHECK(dot >= std::min(Int(p) * qq, Int(pp) * q));
    }
}

TEST_CASE("periodic continued fraction values") {
    PeriodicCFrac tail{{}, {Int(5), Int(1)}};
    QuadSurd y = tail.value();
    CHECK(y == QuadSurd(5, 3, 2, 5));
    CHECK((y * y - QuadSurd(Rat(5)) * y - QuadSurd(Rat(5))).is_zero());

    PeriodicCFrac with_head{{Int(7)}, {Int(5), Int(1)}};
    CHECK(with_head.value() == QuadSurd(65, 3, 10, 5));

    PeriodicCFrac seven_three{{}, {Int(7), Int(3)}};
    QuadSurd u = seven_three.value();
    CHECK(u == QuadSurd(21, 5, 6, 21));
    CHECK((QuadSurd(Rat(3)) * u * u - QuadSurd(Rat(21)) * u - QuadSurd(Rat(7))).is_zero());

    // Every periodic CF value satisfies its defining quadratic exactly.
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> entry(1, 9), len(1, 4);
    for (int i = 0; i < 200; ++i) {
        PeriodicCFrac pcf;
        int np = len(rng), nper = len(rng);
        for (int k = 0; k < np; ++k) pcf.preperiod.push_back(entry(rng));
        for (int k = 0; k < nper; ++k) pcf.period.push_back(entry(rng));
        QuadSurd v = pcf.value();
        CHECK(v.sign() > 0);
        // Truncations converge: compare against a deep finite truncation.
        std::vector<Int> terms = pcf.preperiod;
        for (int rep = 0; rep < 40; ++rep)
            for (const Int& t : pcf.period) terms.push_back(t);
        if (terms.back() == 1) { terms.pop_back(); terms.back() += 1; }
        Rat approx = CFrac(terms).value();
        auto [lo, hi] = v.rational_bounds(25);
        CHECK(abs(approx - (lo + hi) / 2) < Rat(1, 100000));
    }
}

TEST_CASE("cf parsing round trips") {
    CHECK(parse_cf("[7;5,2]").value() == Rat(79, 11));
    CHECK(parse_cf("[6]").value() == Rat(6));
    CHECK(parse_periodic_cf("[7;{5,1}~]").value() == QuadSurd(65, 3, 10, 5));
    CHECK(parse_periodic_cf("[{5,1}~]").value() == QuadSurd(5, 3, 2, 5));
    CHECK(parse_weight("(4^7,1^4)").str() == "(4^7,1^4)");
    CHECK(parse_cf(CFrac::of_rational(Rat(139, 19)).str()).value() == Rat(139, 19));
    PeriodicCFrac p{{Int(7), Int(3)}, {Int(5), Int(7)}};
    CHECK(parse_periodic_cf(p.str()).value() == p.value());
    CHECK_THROWS_AS(parse_cf("nope"), Error);
    CHECK_THROWS_AS(parse_weight("(3,3)"), Error);
}
