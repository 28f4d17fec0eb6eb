#include "stairlab/symmetry.hpp"

namespace stairlab {

namespace {

enum class Gen { S, R };

ClassTuple apply_generator(Gen g, const ClassTuple& c, bool check_domain) {
    Int p, q;
    if (g == Gen::S) {
        p = 6 * c.p - c.q;
        q = c.p;
    } else {
        if (check_domain && c.p < 6 * c.q)
            raise(errc::out_of_domain,
                  "reflection needs center >= 6, got " + c.p.str() + "/" + c.q.str());
        p = 6 * c.p - 35 * c.q;
        q = c.p - 6 * c.q;
    }
    Int tau = 3 * c.m - c.d; // eps * t
    Int r = p + q;
    Int dn = 3 * r - tau, mn = r - 3 * tau;
    if (dn % 8 != 0 || mn % 8 != 0)
        raise(errc::internal, "symmetry image of " + c.str() + " is not integral");
    return ClassTuple(dn / 8, mn / 8, p, q, c.t, -c.eps);
}

} // namespace

ClassTuple apply_sym(const SymWord& w, const ClassTuple& c, bool check_domain) {
    if (w.i < 0 || (w.delta != 0 && w.delta != 1))
        raise(errc::invalid_argument, "bad symmetry word");
    ClassTuple out = c;
    if (w.delta) out = apply_generator(Gen::R, out, check_domain);
    for (Int k = 0; k < w.i; ++k) out = apply_generator(Gen::S, out, check_domain);
    return out;
}

Triple apply_sym_triple(const SymWord& w, const Triple& t, bool check_domain) {
    if (w.is_identity()) return t;
    Triple out;
    ClassTuple l = apply_sym(w, t.left, check_domain);
    ClassTuple m = apply_sym(w, t.mid, check_domain);
    ClassTuple r = apply_sym(w, t.right, check_domain);
    if (w.preserves_order()) {
        out = Triple{l, m, r};
    } else {
        out = Triple{r, m, l};
    }
    TripleDiagnostics diag = check_triple(out.left, out.mid, out.right);
    if (!diag.quasi_ok())
        raise(errc::invariant_violation, "symmetry image is not a (quasi-)triple");
    out.quasi = !diag.all();
    return out;
}

Int y_seq(const Int& i) {
    if (i < 0) raise(errc::out_of_domain, "y_i defined for i >= 0");
    Int prev = 0, cur = 1;
    if (i == 0) return prev;
    for (Int k = 1; k < i; ++k) {
        Int next = 6 * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::optional<Rat> v_seq(const Int& i) {
    if (i < 1) raise(errc::out_of_domain, "v_i defined for i >= 1");
    if (i == 1) return std::nullopt; // y_1/y_0 = 1/0
    return Rat(y_seq(i), y_seq(i - 1));
}

Rat w_seq(const Int& i) {
    if (i < 1) raise(errc::out_of_domain, "w_i defined for i >= 1");
    return Rat(y_seq(i + 1) + y_seq(i), y_seq(i) + y_seq(i - 1));
}

Rat special_b(int eps, const Int& i) {
    if (eps != 1 && eps != -1) raise(errc::invalid_argument, "eps must be +1 or -1");
    bool even = i % 2 == 0;
    if ((even && eps != 1) || (!even && eps != -1))
        raise(errc::parity_mismatch, "special b needs eps = (-1)^i");
    Int ya = y_seq(i + 1), yb = y_seq(i);
    return Rat(ya + yb + 3 * eps, 3 * ya + 3 * yb + eps);
}

ClassTuple third_strand(const Int& i) {
    if (i < 1) raise(errc::out_of_domain, "third strand defined for i >= 1");
    Int p = y_seq(i + 1) - y_seq(i);
    Int q = y_seq(i) - y_seq(i - 1);
    int eps = i % 2 == 0 ? +1 : -1;
    Int r = p + q;
    Int dn = 3 * r + eps * 2, mn = r + 6 * eps;
    if (dn % 8 != 0 || mn % 8 != 0)
        raise(errc::internal, "third strand step is not integral at i = " + i.str());
    return ClassTuple(dn / 8, mn / 8, p, q, 2, eps);
}

Rat z_crossing(const ClassTuple& c, const Rat& b) {
    Rat denom = Rat(c.d) - Rat(c.m) * b;
    if (denom == 0) raise(errc::degenerate_denominator, "d - mb = 0 for " + c.str());
    return (Rat(3 * c.p - c.d) - b * Rat(c.p - c.m)) / denom;
}

bool noasc_identity(const Int& i) {
    ClassTuple e = third_strand(i);
    const Int& d = e.d;
    const Int& m = e.m;
    Int g = e.p; // y_{i+1} - y_i
    // (d - mb)(3g - d - b(g - m)) - g^2(1 - b^2), expanded in b.
    Rat c2 = Rat(m * (g - m) + g * g);
    Rat c1 = Rat(-(d * (g - m) + m * (3 * g - d)));
    Rat c0 = Rat(d * (3 * g - d) - g * g);
    Int Y = y_seq(i + 1) + y_seq(i);
    Int eps = e.eps;
    Rat u = Rat(3 * Y + eps), v = Rat(Y + 3 * eps);
    const Rat C(1, 16);
    return c2 == C * u * u && c1 == -2 * C * u * v && c0 == C * v * v;
}

ClassTuple a_sharp(const ClassTuple& c) {
    if (c.eps != 1) raise(errc::out_of_domain, "map defined on eps = +1 tuples");
    if (c.d < 0 || c.m < 0 || c.p < 0 || c.q < 0)
        raise(errc::out_of_domain, "map defined on nonnegative tuples");
    if ((c.p + c.q + c.t) % 2 != 0)
        raise(errc::parity_violation, "p+q+t must be even for " + c.str());
    Int Q = (c.p - c.q - c.t) / 2;
    return ClassTuple(c.m + 3 * Q, c.d + Q, c.p - c.q + 5 * Q, Q, c.p + c.q, +1);
}

} // namespace stairlab
