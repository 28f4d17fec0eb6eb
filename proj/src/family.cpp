#include "stairlab/family.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "stairlab/symmetry.hpp"

namespace stairlab {

namespace {

// Compares centers p/q as points of the projective line: q <= 0 (formal
// seeds, caps of descending recursions) sorts after every finite center.
int center_order(const ClassTuple& a, const ClassTuple& b) {
    bool ainf = a.q <= 0, binf = b.q <= 0;
    if (ainf && binf) return 0;
    if (ainf) return 1;
    if (binf) return -1;
    Int lhs = a.p * b.q, rhs = b.p * a.q;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Adjacency in the stated order (small center first).
bool adjacent_ordered(const ClassTuple& s, const ClassTuple& l) {
    return (s.p + s.q) * (l.p + l.q) - s.t * l.t == 8 * s.p * l.q;
}

Int form_pairing(const ClassTuple& a, const ClassTuple& b) {
    // x^T A x' with A = [[-1,3,0],[3,-1,0],[0,0,1]].
    return -a.p * b.p + 3 * (a.p * b.q + a.q * b.p) - a.q * b.q + a.t * b.t;
}

ClassTuple linear_combo(const Int& u, const ClassTuple& a, const Int& v, const ClassTuple& b) {
    if (a.eps != b.eps) raise(errc::mixed_eps, "combining classes of different eps");
    return ClassTuple(u * a.d + v * b.d, u * a.m + v * b.m, u * a.p + v * b.p, u * a.q + v * b.q,
                      u * a.t + v * b.t, a.eps);
}

} // namespace

bool adjacent(const ClassTuple& a, const ClassTuple& b) {
    if (a.eps != b.eps) raise(errc::mixed_eps, "adjacency requires equal eps");
    return center_order(a, b) <= 0 ? adjacent_ordered(a, b) : adjacent_ordered(b, a);
}

bool t_compatible(const ClassTuple& a, const ClassTuple& b, const Int& tpp) {
    if (a.eps != b.eps) raise(errc::mixed_eps, "t-compatibility requires equal eps");
    return form_pairing(a, b) == 4 * tpp;
}

TripleDiagnostics check_triple(const ClassTuple& l, const ClassTuple& m, const ClassTuple& r) {
    if (l.eps != m.eps || m.eps != r.eps)
        raise(errc::mixed_eps, "triple entries must share eps");
    if (center_order(l, m) >= 0 || center_order(m, r) >= 0)
        raise(errc::unordered_centers, "triple centers must strictly increase");
    TripleDiagnostics diag;
    diag.a = adjacent_ordered(l, r);
    diag.b = adjacent_ordered(l, m) && form_pairing(l, m) == 4 * r.t;
    diag.c = adjacent_ordered(m, r) && form_pairing(m, r) == 4 * l.t;
    diag.d = l.t * r.t - m.t == l.q * r.p - l.p * r.q;
    // (e): acc(m/d) ordering.  For geometric tuples with equal eps this is
    // equivalent to t r_mu > t_mu r (r = p+q) on each side; formal tuples
    // have no acc(m/d) and fail.
    if (!l.formal && !m.formal && !r.formal) {
        Int rl = l.p + l.q, rm = m.p + m.q, rr = r.p + r.q;
        diag.e = l.t * rm > m.t * rl && r.t * rm > m.t * rr;
    }
    return diag;
}

Triple mutate(const Triple& t, MutationSide side, bool allow_quasi) {
    TripleDiagnostics diag = check_triple(t.left, t.mid, t.right);
    if (!(allow_quasi ? diag.quasi_ok() : diag.all()))
        raise(errc::invalid_triple, "mutation input fails the triple conditions");
    Triple out;
    if (side == MutationSide::x) {
        out.left = t.left;
        out.mid = linear_combo(t.left.t, t.mid, -1, t.right);
        out.right = t.mid;
    } else {
        out.left = t.mid;
        out.mid = linear_combo(t.right.t, t.mid, -1, t.left);
        out.right = t.right;
    }
    TripleDiagnostics check = check_triple(out.left, out.mid, out.right);
    if (!check.quasi_ok())
        raise(errc::invariant_violation, "mutation produced an invalid triple");
    out.quasi = !check.all();
    return out;
}

std::vector<ClassTuple> generate_prestaircase(const ClassTuple& seed0, const ClassTuple& seed1,
                                              const Int& nu, size_t count) {
    if (seed0.eps != seed1.eps) raise(errc::mixed_eps, "seeds must share eps");
    std::vector<ClassTuple> out;
    if (count == 0) return out;
    out.push_back(seed0);
    if (count == 1) return out;
    out.push_back(seed1);
    while (out.size() < count) {
        const ClassTuple& a = out[out.size() - 2];
        const ClassTuple& b = out[out.size() - 1];
        // The ClassTuple constructor re-checks the Diophantine identities,
        // so a bad seed pair surfaces as InvariantViolation here.
        out.push_back(linear_combo(nu, b, -1, a));
    }
    return out;
}

QuadSurd recursion_limit(const Int& x0, const Int& x1, const Int& y0, const Int& y1,
                         const Int& nu) {
    if (nu < 3) raise(errc::out_of_domain, "recursion limit needs nu >= 3");
    Int sigma = nu * nu - 4;
    // x_k = X lambda^k + conj(X) lambda^-k with X = x0/2 + (2x1-nu*x0)/(2 sigma) sqrt(sigma).
    QuadSurd X = QuadSurd(Rat(x0, 2)) + QuadSurd(2 * x1 - nu * x0, 0, 2 * sigma, 0) *
                                            QuadSurd(0, 1, 1, sigma);
    QuadSurd Y = QuadSurd(Rat(y0, 2)) + QuadSurd(2 * y1 - nu * y0, 0, 2 * sigma, 0) *
                                            QuadSurd(0, 1, 1, sigma);
    if (Y.is_zero()) raise(errc::degenerate_limit, "denominator sequence is identically zero");
    return X / Y;
}

std::string SymWord::str() const {
    if (is_identity()) return "id";
    std::string out;
    if (i == 1) out += "S";
    else if (i > 1) out += "S^" + i.str();
    if (delta) out += "R";
    return out;
}

SymWord parse_sym(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    SymWord w;
    if (s.empty() || s == "id" || s == "1") return w;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == 'S' || s[pos] == 's')) {
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) raise(errc::parse_error, "bad symmetry word '" + text + "'");
            w.i = Int(s.substr(start, pos - start));
        } else {
            w.i = 1;
        }
    }
    if (pos < s.size() && (s[pos] == 'R' || s[pos] == 'r')) {
        w.delta = 1;
        ++pos;
        if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == '1') pos += 2;
    }
    if (pos != s.size()) raise(errc::parse_error, "bad symmetry word '" + text + "'");
    return w;
}

std::string Label::address() const {
    if (endpoint) return endpoint_right ? "R" : "L";
    std::string out = ".";
    for (int d : digits) out += char('0' + d);
    out += '1';
    return out;
}

std::string Label::str() const {
    return "n=" + n.str() + " sym=" + sym.str() + " addr=" + address();
}

Label parse_label(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    Label lbl;
    // [SYM:]N:ADDR
    auto last_colon = s.rfind(':');
    if (last_colon == std::string::npos)
        raise(errc::invalid_label, "label must look like 0:.021 or 0:L, got '" + text + "'");
    std::string addr = s.substr(last_colon + 1);
    std::string head = s.substr(0, last_colon);
    auto first_colon = head.find(':');
    std::string npart = head;
    if (first_colon != std::string::npos) {
        lbl.sym = parse_sym(head.substr(0, first_colon));
        npart = head.substr(first_colon + 1);
    }
    try {
        lbl.n = Int(npart);
    } catch (const std::exception&) {
        raise(errc::invalid_label, "bad family index in label '" + text + "'");
    }
    if (lbl.n < 0) raise(errc::invalid_label, "family index must be >= 0");
    if (addr == "L" || addr == "l" || addr == "0") {
        lbl.endpoint = true;
        return lbl;
    }
    if (addr == "R" || addr == "r") {
        lbl.endpoint = true;
        lbl.endpoint_right = true;
        return lbl;
    }
    if (!addr.empty() && addr.front() == '.') addr.erase(addr.begin());
    if (addr.empty() || addr.back() != '1')
        raise(errc::invalid_label, "address must match [02]*1, got '" + text + "'");
    for (size_t i = 0; i + 1 < addr.size(); ++i) {
        if (addr[i] == '0') lbl.digits.push_back(0);
        else if (addr[i] == '2') lbl.digits.push_back(2);
        else raise(errc::invalid_label, "address must match [02]*1, got '" + text + "'");
    }
    return lbl;
}

ClassTuple blocking_class_BU(const Int& n) {
    if (n < -2) raise(errc::out_of_domain, "B^U_n defined for n >= -2");
    Int tau = 2 * n + 3;
    int eps = tau > 0 ? +1 : -1;
    return ClassTuple(n + 3, n + 2, 2 * n + 6, 1, abs(tau), eps);
}

ClassTuple first_step_E1(const Int& n) {
    if (n < 0) raise(errc::out_of_domain, "first step defined for n >= 0");
    return ClassTuple(2 * n * n + 11 * n + 14, 2 * n * n + 9 * n + 9, 4 * n * n + 22 * n + 29,
                      2 * n + 4, 4 * n * n + 16 * n + 13, +1);
}

Triple base_triple(const Int& n) {
    Triple t;
    t.left = blocking_class_BU(n);
    t.mid = first_step_E1(n);
    t.right = blocking_class_BU(n + 1);
    return t;
}

ClassTuple lower_seed() { return ClassTuple(1, 1, 1, 1, 2, +1); }
ClassTuple upper_seed() { return ClassTuple(-2, 0, -5, -1, 2, +1); }

Triple triple_at_label(const Label& lbl) {
    if (lbl.endpoint) raise(errc::invalid_label, "endpoint labels have no middle triple");
    Triple t = apply_sym_triple(lbl.sym, base_triple(lbl.n));
    bool swap_moves = !lbl.sym.preserves_order();
    for (int d : lbl.digits) {
        MutationSide side = (d == 0) ? MutationSide::x : MutationSide::y;
        if (swap_moves) side = (side == MutationSide::x) ? MutationSide::y : MutationSide::x;
        t = mutate(t, side);
    }
    return t;
}

namespace {

// Endpoint tokens follow the displayed order: under an order-reversing
// symmetry the left endpoint of the image tree is the image of B^U_{n+1}.
Int endpoint_family_index(const Label& lbl) {
    bool right_in_base = lbl.endpoint_right != !lbl.sym.preserves_order();
    return right_in_base ? lbl.n + 1 : lbl.n;
}

} // namespace

ClassTuple class_at_label(const Label& lbl) {
    if (!lbl.endpoint) return triple_at_label(lbl).mid;
    return apply_sym(lbl.sym, blocking_class_BU(endpoint_family_index(lbl)), false);
}

std::pair<Label, Label> pre_and_ppre(const Label& lbl) {
    if (lbl.endpoint || lbl.digits.empty())
        raise(errc::root_has_no_predecessor, "label " + lbl.address() + " has no predecessor");
    // Walk the digits tracking the lambda/rho labels of the current triple.
    Label lam{lbl.n, lbl.sym, true, false, {}};
    Label rho{lbl.n, lbl.sym, true, true, {}};
    Label mid{lbl.n, lbl.sym, false, false, {}};
    for (size_t i = 0; i < lbl.digits.size(); ++i) {
        if (lbl.digits[i] == 0) {
            rho = mid;
        } else {
            lam = mid;
        }
        mid.digits.push_back(lbl.digits[i]);
    }
    Label pre = mid;
    pre.digits.pop_back();
    Label ppre = lbl.digits.back() == 0 ? lam : rho;
    return {pre, ppre};
}

Int cs_length(const Label& lbl) {
    if (lbl.endpoint) return 1;
    if (lbl.digits.empty()) return 2;
    auto [pre, ppre] = pre_and_ppre(lbl);
    return cs_length(pre) + cs_length(ppre);
}

std::vector<ClassTuple> nonprincipal_steps(const Int& n, const std::vector<int>& digits,
                                           Direction dir) {
    if (digits.size() < 2) raise(errc::invalid_argument, "need at least two address digits");
    for (int d : digits)
        if (d != 0 && d != 2) raise(errc::invalid_argument, "digits must be 0 or 2");
    int first = dir == Direction::ascending ? 0 : 2;
    std::vector<ClassTuple> out;
    ClassTuple prev;
    bool have_prev = false;
    for (size_t k = 0; k + 1 < digits.size(); ++k) {
        if (digits[k] != first || digits[k + 1] != (2 - first)) continue;
        Label lbl;
        lbl.n = n;
        lbl.digits.assign(digits.begin(), digits.begin() + k + 1);
        ClassTuple c = class_at_label(lbl);
        if (have_prev) {
            int ord = center_order(prev, c);
            bool ok = dir == Direction::ascending ? ord < 0 : ord > 0;
            if (!ok) raise(errc::invariant_violation, "selected steps are not monotone");
        }
        prev = c;
        have_prev = true;
        out.push_back(c);
    }
    if (out.empty()) raise(errc::empty_selection, "no index matches the selection rule");
    return out;
}

std::vector<TreeNode> enumerate_tree(const Int& n, int level, const SymWord& sym) {
    if (level < 1) raise(errc::out_of_domain, "tree level must be >= 1");
    std::vector<TreeNode> out;
    Triple base = apply_sym_triple(sym, base_triple(n));
    for (int right = 0; right < 2; ++right) {
        TreeNode node;
        node.label = Label{n, sym, true, right == 1, {}};
        node.cls = right ? base.right : base.left;
        node.triple = base;
        node.cs_len = 1;
        node.level = 1;
        out.push_back(node);
    }
    struct Item {
        Label lbl;
        Triple triple;
    };
    std::deque<Item> queue;
    if (level >= 2) queue.push_back({Label{n, sym, false, false, {}}, base});
    bool swap_moves = !sym.preserves_order();
    while (!queue.empty()) {
        Item item = queue.front();
        queue.pop_front();
        TreeNode node;
        node.label = item.lbl;
        node.cls = item.triple.mid;
        node.triple = item.triple;
        node.cs_len = cs_length(item.lbl);
        node.level = int(item.lbl.level()) + 1;
        if (!item.lbl.digits.empty()) {
            Label parent = item.lbl;
            parent.digits.pop_back();
            node.parent = parent.address();
        }
        out.push_back(node);
        if (node.level + 1 <= level) {
            for (int digit : {0, 2}) {
                MutationSide side = digit == 0 ? MutationSide::x : MutationSide::y;
                if (swap_moves)
                    side = side == MutationSide::x ? MutationSide::y : MutationSide::x;
                Label child = item.lbl;
                child.digits.push_back(digit);
                queue.push_back({child, mutate(item.triple, side)});
            }
        }
    }
    return out;
}

PrincipalStaircase staircase_at_label(const Label& lbl, Direction dir) {
    PrincipalStaircase s;
    s.dir = dir;
    if (!lbl.endpoint) {
        Triple t = triple_at_label(lbl);
        if (dir == Direction::ascending) {
            s.seed0 = t.left;
            s.seed1 = t.mid;
            s.nu = t.right.t;
            s.blocking = t.right;
        } else {
            s.seed0 = t.right;
            s.seed1 = t.mid;
            s.nu = t.left.t;
            s.blocking = t.left;
        }
        return s;
    }
    // Endpoint class B = B^U_k (transformed): both staircases block on B and
    // use nu = t(B); ascending from the lower seed, descending from the upper.
    Int k = endpoint_family_index(lbl);
    ClassTuple B = blocking_class_BU(k);
    Direction base_dir = dir;
    if (!lbl.sym.preserves_order())
        base_dir = dir == Direction::ascending ? Direction::descending : Direction::ascending;
    ClassTuple s0 = base_dir == Direction::ascending ? lower_seed() : upper_seed();
    ClassTuple s1 = blocking_class_BU(base_dir == Direction::ascending ? Int(k - 1) : Int(k + 1));
    s.seed0 = apply_sym(lbl.sym, s0, false);
    s.seed1 = apply_sym(lbl.sym, s1, false);
    s.nu = B.t;
    s.blocking = apply_sym(lbl.sym, B, false);
    return s;
}

} // namespace stairlab
