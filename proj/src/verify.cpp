#include "stairlab/verify.hpp"

#include <chrono>
#include <functional>

#include "stairlab/parallel.hpp"

namespace stairlab {

namespace {

struct Checker {
    json fails = json::array();
    long count = 0;

    void expect(bool ok, const std::function<json()>& describe) {
        ++count;
        if (!ok && fails.size() < 8) fails.push_back(describe());
        if (!ok) failed = true;
    }
    void expect(bool ok, const std::string& what) {
        expect(ok, [&] { return json(what); });
    }
    bool failed = false;
};

std::vector<SymWord> identity_sym_family() {
    return {parse_sym("id"), parse_sym("S"), parse_sym("R"), parse_sym("SR"), parse_sym("S^2")};
}

// Tree triples to `level` plus their S/R/SR/S^2 images.
std::vector<Triple> enumerated_triples(int level) {
    std::vector<Triple> out;
    for (const TreeNode& node : enumerate_tree(0, level)) {
        if (node.label.endpoint) continue;
        for (const SymWord& w : identity_sym_family())
            out.push_back(apply_sym_triple(w, node.triple, false));
    }
    return out;
}

SuiteResult suite_identities() {
    Checker ck;
    for (const TreeNode& node : enumerate_tree(0, 6)) {
        for (const SymWord& w : identity_sym_family()) {
            ClassTuple c = apply_sym(w, node.cls, false);
            ck.expect(c.t * c.t == c.p * c.p - 6 * c.p * c.q + c.q * c.q + 8, c.str());
            ck.expect(3 * c.d == c.m + c.p + c.q, c.str());
            ck.expect(c.d * c.d - c.m * c.m == c.p * c.q - 1, c.str());
        }
    }
    return {"identities", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_adjacency() {
    Checker ck;
    std::vector<TreeNode> nodes = enumerate_tree(0, 5);
    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            const ClassTuple &a = nodes[i].cls, &b = nodes[j].cls;
            if (!adjacent(a, b)) continue;
            ck.expect(intersection(exc_vector(a), exc_vector(b)) == 0,
                      a.str() + "." + b.str() + " != 0");
            Int expect_dot = std::min(a.p * b.q, b.p * a.q);
            ck.expect(weight_dot(a.center(), b.center()) == expect_dot,
                      "weight_dot " + a.str() + " " + b.str());
        }
    }
    // Second neighbors along the two staircases of every triple.
    for (const TreeNode& node : nodes) {
        if (node.label.endpoint) continue;
        const Triple& t = node.triple;
        for (bool asc : {true, false}) {
            auto steps = generate_prestaircase(asc ? t.left : t.right, t.mid,
                                               asc ? t.right.t : t.left.t, 5);
            for (size_t k = 0; k + 2 < steps.size(); ++k) {
                ck.expect(intersection(exc_vector(steps[k]), exc_vector(steps[k + 1])) == 0,
                          "consecutive steps");
                ck.expect(intersection(exc_vector(steps[k]), exc_vector(steps[k + 2])) == 1,
                          "second neighbors");
            }
        }
    }
    return {"adjacency", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_cremona() {
    Checker ck;
    for (const TreeNode& node : enumerate_tree(0, 4)) {
        CremonaResult r = cremona_reduce(exc_vector(node.cls));
        ck.expect(r.exceptional, node.cls.str() + " does not reduce");
        ck.expect(r.steps <= exc_vector(node.cls).deg, "step bound");
    }
    ck.expect(!cremona_reduce(exc_vector(ClassTuple(9, 5, 19, 3, 6, +1))).exceptional,
              "(9,5,19,3,6) must not reduce");
    ExcVector fake{75, {55, 17, 17, 17, 17, 17, 17, 17, 17, 17}};
    ck.expect(!cremona_reduce(fake).exceptional, "(75;55,17^9) must not reduce");
    return {"cremona", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_intersections() {
    Checker ck;
    std::vector<TreeNode> nodes = enumerate_tree(0, 4);
    SymWord s = parse_sym("S"), r = parse_sym("R");
    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = i + 1; j < nodes.size(); ++j) {
            const ClassTuple &a = nodes[i].cls, &b = nodes[j].cls;
            Int base = intersection(exc_vector(a), exc_vector(b));
            // S preserves intersections for centers > 5.
            ck.expect(intersection(exc_vector(apply_sym(s, a)), exc_vector(apply_sym(s, b))) ==
                          base,
                      "S image of " + a.str() + "," + b.str());
            // R preserves intersections for centers > 7.
            if (a.center() > 7 && b.center() > 7)
                ck.expect(intersection(exc_vector(apply_sym(r, a)),
                                       exc_vector(apply_sym(r, b))) == base,
                          "R image of " + a.str() + "," + b.str());
        }
        // t fixed and eps flipped under each generator.
        ClassTuple sa = apply_sym(s, nodes[i].cls);
        ck.expect(sa.t == nodes[i].cls.t && sa.eps == -nodes[i].cls.eps, "S eps/t");
    }
    return {"intersections", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_appendixB() {
    Checker ck;
    for (const Triple& t : enumerated_triples(5)) {
        const ClassTuple &l = t.left, &m = t.mid, &r = t.right;
        Int rl = l.p + l.q, rm = m.p + m.q, rr = r.p + r.q;
        Int eps = m.eps;
        ck.expect(r.t * rm - m.t * rr == 8 * l.p, "(i) " + m.str());
        ck.expect(r.t * m.d - m.t * r.d == 3 * l.p, "(ii) " + m.str());
        ck.expect(l.t * m.d - m.t * l.d == 3 * r.q, "(ii') " + m.str());
        ck.expect(r.m * m.d - m.m * r.d == eps * l.p, "(iii) " + m.str());
        ck.expect(l.m * m.d - m.m * l.d == eps * r.q, "(iii') " + m.str());
        ck.expect(l.t * rm - m.t * rl == 8 * r.q, "(iv) " + m.str());
        ck.expect(l.t * r.t < 2 * m.t, "(v) " + m.str());
        // r/t ratio: strict dominance of the middle, except the q_rho = 0
        // family where the lambda and mu ratios agree at 3.
        if (r.q != 0) {
            ck.expect(Rat(rm, m.t) > Rat(rl, l.t) && Rat(rm, m.t) > Rat(rr, r.t),
                      "ratio " + m.str());
        } else {
            ck.expect(Rat(rm, m.t) == Rat(rl, l.t) && Rat(rm, m.t) == 3 &&
                          Rat(rr, r.t) == Rat(1, 3),
                      "ratio exception " + m.str());
        }
    }
    return {"appendixB", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_density() {
    Checker ck;
    Rat bound(1, 4);
    for (int level = 1; level <= 6; ++level) {
        ck.expect(density_gap_at_most(0, level, bound),
                  "gap(0," + std::to_string(level) + ")");
        bound /= 2;
    }
    for (int n = 0; n <= 5; ++n)
        ck.expect(density_gap_at_most(n, 1, Rat(1, 2 * (2 + n))),
                  "gap(" + std::to_string(n) + ",1)");
    return {"density", ck.failed ? "fail" : "pass", json{{"checks", ck.count}}, 0};
}

SuiteResult suite_disjoint() {
    BlockSet set = block_set(0, 6);
    Checker ck;
    ck.expect(set.intervals.size() == 33, "expected 33 intervals");
    ck.expect(set.disjoint, "intervals overlap");
    // Center containment and m/d exclusion for every interval.
    for (const BlockedInterval& iv : set.intervals) {
        ck.expect(iv.z_lo < QuadSurd(iv.owner.center()) && QuadSurd(iv.owner.center()) < iv.z_hi,
                  "center outside I for " + iv.owner.str());
        QuadSurd md(iv.owner.slope_ratio());
        ck.expect(md <= iv.b_lo || md >= iv.b_hi, "m/d inside J for " + iv.owner.str());
    }
    return {"disjoint", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_slope() {
    Checker ck;
    // Fails for the foundational descending pair.
    ck.expect(!slope_criterion(class_from_center(8, 1), class_from_center(29, 4)),
              "(B1, E[7;4]) must fail");
    // Base triples where the first descending pair satisfies the estimate.
    std::vector<Triple> bases;
    for (int n = 1; n <= 5; ++n) {
        bases.push_back(base_triple(n));
        bases.push_back(apply_sym_triple(parse_sym("R"), base_triple(n)));
    }
    bases.push_back(apply_sym_triple(parse_sym("S"), base_triple(0)));
    bases.push_back(apply_sym_triple(parse_sym("SR"), base_triple(0)));
    std::function<void(const Triple&, int)> walk = [&](const Triple& t, int depth) {
        ck.expect(slope_criterion(t.right, t.mid),
                  "first pair of " + t.left.str() + "," + t.mid.str() + "," + t.right.str());
        if (depth == 0) return;
        walk(mutate(t, MutationSide::x), depth - 1);
        walk(mutate(t, MutationSide::y), depth - 1);
    };
    for (const Triple& t : bases) walk(t, 2);
    // The anomalous family y^k R(T0): the estimate holds from the second pair.
    Triple rt0 = apply_sym_triple(parse_sym("R"), base_triple(0));
    for (int k = 0; k <= 4; ++k) {
        auto steps = generate_prestaircase(rt0.right, rt0.mid, rt0.left.t, 3);
        ck.expect(slope_criterion(steps[1], steps[2]), "second pair of y^k R(T0), k=" +
                                                           std::to_string(k));
        rt0 = mutate(rt0, MutationSide::y);
    }
    return {"slope", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_farey() {
    Checker ck;
    auto row = [&](const std::string& label, const std::string& lo, const std::string& hi) {
        BlockedInterval iv = blocked_interval(parse_label(label));
        ck.expect(iv.z_lo == parse_periodic_cf(lo).value(), label + " lower");
        ck.expect(iv.z_hi == parse_periodic_cf(hi).value(), label + " upper");
    };
    row("0:L", "[{5,1}~]", "[7;{5,1}~]");
    row("0:R", "[{7,3}~]", "[9;{7,3}~]");
    row("0:.1", "[7;{5,3,1,7}~]", "[7;{3,5,7,1}~]");
    row("0:.01", "[7;5,{1,3,5,1,7,5}~]", "[7;5,{3,1,5,7,1,5}~]");
    row("0:.21", "[7;3,{5,7,3,1,7,3}~]", "[7;3,{7,5,3,7,1,3}~]");
    // Bisection brackets contain the exact endpoints.
    for (const std::string& label : {"0:L", "0:.1"}) {
        BlockedInterval iv = blocked_interval(parse_label(label));
        BracketedInterval br = blocked_interval_bisect(iv.owner, Rat(1, 1000000));
        ck.expect(QuadSurd(br.z_lo_lo) <= iv.z_lo && iv.z_lo <= QuadSurd(br.z_lo_hi),
                  label + " lower bracket");
        ck.expect(QuadSurd(br.z_hi_lo) <= iv.z_hi && iv.z_hi <= QuadSurd(br.z_hi_hi),
                  label + " upper bracket");
    }
    return {"farey", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_noasc() {
    Checker ck;
    for (int i = 1; i <= 8; ++i)
        ck.expect(noasc_identity(i), "coefficient identity at i=" + std::to_string(i));
    return {"noasc", ck.failed ? "fail" : "pass", json{{"checks", ck.count}}, 0};
}

SuiteResult suite_special_b() {
    Checker ck;
    ck.expect(special_b(-1, 1) == Rat(1, 5), "b_{-1,2}");
    ck.expect(special_b(+1, 2) == Rat(11, 31), "b_{+1,3}");
    ck.expect(special_b(-1, 3) == Rat(59, 179), "b_{-1,4}");
    ck.expect(special_b(+1, 4) == Rat(349, 1045), "b_{+1,5}");
    for (int i = 1; i <= 10; ++i) {
        int eps = i % 2 == 0 ? +1 : -1;
        ck.expect(acc(special_b(eps, i)) == QuadSurd(*v_seq(i + 1)),
                  "acc(special_b) != v at i=" + std::to_string(i));
    }
    for (int k = 1; k <= 10; ++k) {
        ClassTuple fake(11 * k - 2, 5 * k, 24 * k - 5, 4 * k - 1, 4 * k + 2, +1);
        ck.expect(!obstructive_at_center(fake, Rat(5, 11)),
                  "fake strand obstructive at k=" + std::to_string(k));
    }
    return {"special-b", ck.failed ? "fail" : "pass",
            json{{"checks", ck.count}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_scan() {
    Checker ck;
    // Everything rational in [6,8] with q <= 12 is blocked at level <= 6.
    ScanReport rep = rational_blocked_scan(Rat(6), Rat(8), 12, sym_family_pool(SymWord{}, 0, 0, 6));
    ck.expect(rep.unblocked.empty(), [&] {
        json j = json::array();
        for (const Rat& z : rep.unblocked) j.push_back(to_string(z));
        return json{{"unblocked", j}};
    });
    // v_3 = 35/6 is flagged on the eps = +1 side.
    std::vector<ClassTuple> plus_pool = sym_family_pool(parse_sym("S^2"), 0, 3, 5);
    auto sr = sym_family_pool(parse_sym("SR"), 0, 3, 5);
    plus_pool.insert(plus_pool.end(), sr.begin(), sr.end());
    ScanReport v3 = rational_blocked_scan(Rat(35, 6) - Rat(1, 100), Rat(35, 6) + Rat(1, 100), 6,
                                          plus_pool);
    ck.expect(v3.unblocked.size() == 1 && v3.unblocked[0] == Rat(35, 6), "v3 flag");
    // v_4 = 204/35 is flagged on the eps = -1 side.
    std::vector<ClassTuple> minus_pool = sym_family_pool(parse_sym("S^3"), 0, 3, 5);
    auto s2r = sym_family_pool(parse_sym("S^2R"), 0, 3, 5);
    minus_pool.insert(minus_pool.end(), s2r.begin(), s2r.end());
    ScanReport v4 = rational_blocked_scan(Rat(204, 35) - Rat(1, 2000), Rat(204, 35) + Rat(1, 2000),
                                          35, minus_pool);
    ck.expect(v4.unblocked.size() == 1 && v4.unblocked[0] == Rat(204, 35), "v4 flag");
    return {"scan", ck.failed ? "fail" : "pass",
            json{{"checks", (long)rep.entries.size()}, {"counterexamples", ck.fails}}, 0};
}

SuiteResult suite_conjecture_cf() {
    // Reported, never asserted: CF-length of the center vs CS-length.
    json mismatches = json::array();
    long checks = 0;
    for (int n = 0; n <= 1; ++n) {
        for (const TreeNode& node : enumerate_tree(n, 6)) {
            ++checks;
            Int cf_len = CFrac::of_rational(node.cls.center()).cf_length();
            if (cf_len != node.cs_len)
                mismatches.push_back(json{{"label", node.label.str()},
                                          {"cf_length", cf_len.str()},
                                          {"cs_length", node.cs_len.str()}});
        }
    }
    return {"conjecture-cf", "info",
            json{{"checks", checks},
                 {"mismatches", mismatches},
                 {"holds", mismatches.empty()}},
            0};
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"identities", suite_identities}, {"adjacency", suite_adjacency},
        {"cremona", suite_cremona},       {"intersections", suite_intersections},
        {"appendixB", suite_appendixB},   {"density", suite_density},
        {"disjoint", suite_disjoint},     {"slope", suite_slope},
        {"farey", suite_farey},           {"noasc", suite_noasc},
        {"special-b", suite_special_b},   {"scan", suite_scan},
        {"conjecture-cf", suite_conjecture_cf},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            auto start = std::chrono::steady_clock::now();
            SuiteResult res = fn();
            res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            return res;
        }
    }
    raise(errc::invalid_argument, "unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name));
    return out;
}

} // namespace stairlab
