#include "stairlab/classes.hpp"

#include <algorithm>
#include <sstream>

namespace stairlab {

ClassTuple::ClassTuple(Int d_, Int m_, Int p_, Int q_, Int t_, int eps_)
    : d(std::move(d_)), m(std::move(m_)), p(std::move(p_)), q(std::move(q_)), t(std::move(t_)),
      eps(eps_) {
    if (eps != 1 && eps != -1) raise(errc::invalid_argument, "eps must be +1 or -1");
    if (t < 0) raise(errc::invalid_argument, "t must be nonnegative");
    if (t * t != p * p - 6 * p * q + q * q + 8)
        raise(errc::invariant_violation, "t^2 = p^2-6pq+q^2+8 fails for " + str());
    if (3 * d != m + p + q)
        raise(errc::invariant_violation, "3d = m+p+q fails for " + str());
    if (d * d - m * m != p * q - 1)
        raise(errc::invariant_violation, "d^2-m^2 = pq-1 fails for " + str());
    bool geometric = p > q && q >= 1 && d >= 1 && m >= 0 && ((eps == 1) == (3 * m > d));
    formal = !geometric;
}

Rat ClassTuple::center() const {
    if (q == 0) raise(errc::formal_class, "center of " + str() + " undefined (q = 0)");
    return Rat(p, q);
}

Rat ClassTuple::slope_ratio() const {
    if (d == 0) raise(errc::formal_class, "m/d of " + str() + " undefined (d = 0)");
    return Rat(m, d);
}

std::string ClassTuple::str() const {
    std::ostringstream os;
    os << "(" << d << "," << m << "," << p << "," << q << "," << t << ","
       << (eps > 0 ? "+1" : "-1") << ")";
    return os.str();
}

std::string ExcVector::str() const {
    std::ostringstream os;
    os << "(" << deg << ";";
    for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : " ") << coeffs[i];
    os << ")";
    return os.str();
}

ClassTuple class_from_center(const Int& p, const Int& q) {
    if (q <= 0 || p <= q) raise(errc::out_of_domain, "center must be > 1");
    if (gcd(p, q) != 1) raise(errc::invalid_argument, "center must be in lowest terms");
    Int tt = p * p - 6 * p * q + q * q + 8;
    auto t = tt < 0 ? std::nullopt : sqrt_exact(tt);
    if (!t) raise(errc::not_quasi_perfect, "p^2-6pq+q^2+8 is not a perfect square for " +
                                                p.str() + "/" + q.str());
    for (int eps : {+1, -1}) {
        Int dn = 3 * (p + q) + eps * *t;
        Int mn = (p + q) + 3 * eps * *t;
        if (dn % 8 == 0 && mn % 8 == 0) return ClassTuple(dn / 8, mn / 8, p, q, *t, eps);
    }
    raise(errc::not_quasi_perfect,
          "neither sign makes (d,m) integral for " + p.str() + "/" + q.str());
}

ClassTuple class_from_center(const Rat& z) { return class_from_center(num(z), den(z)); }

ExcVector exc_vector(const ClassTuple& c) {
    if (c.formal) raise(errc::formal_class, "no coefficient vector for formal tuple " + c.str());
    ExcVector v;
    v.deg = c.d;
    v.coeffs.push_back(c.m);
    Int g = gcd(c.p, c.q);
    Weight w = Weight::of_rational(Rat(c.p / g, c.q / g));
    for (const Int& e : w.entries()) v.coeffs.push_back(e * g);
    return v;
}

Int intersection(const ExcVector& v, const ExcVector& w) {
    Int dot = 0;
    size_t n = std::min(v.coeffs.size(), w.coeffs.size());
    for (size_t i = 0; i < n; ++i) dot += v.coeffs[i] * w.coeffs[i];
    return v.deg * w.deg - dot;
}

CremonaResult cremona_reduce(const ExcVector& v) {
    CremonaResult res{v, 0, false};
    auto& cur = res.terminal;
    while (cur.coeffs.size() < 3) cur.coeffs.push_back(0);
    std::sort(cur.coeffs.begin(), cur.coeffs.end(), std::greater<Int>());
    while (cur.deg > 0) {
        Int delta = cur.deg - (cur.coeffs[0] + cur.coeffs[1] + cur.coeffs[2]);
        if (delta >= 0) break;
        cur.deg += delta;
        cur.coeffs[0] += delta;
        cur.coeffs[1] += delta;
        cur.coeffs[2] += delta;
        std::sort(cur.coeffs.begin(), cur.coeffs.end(), std::greater<Int>());
        res.steps += 1;
    }
    if (cur.deg == 0) {
        Int minus_ones = 0, zeros = 0;
        for (const Int& e : cur.coeffs) {
            if (e == -1) ++minus_ones;
            else if (e == 0) ++zeros;
        }
        res.exceptional =
            minus_ones == 1 && zeros == Int(cur.coeffs.size()) - 1;
    }
    return res;
}

bool perfectness_screen(const ClassTuple& c, const std::vector<ExcVector>& pool) {
    ExcVector v = exc_vector(c);
    for (const ExcVector& e : pool)
        if (intersection(v, e) < 0) return false;
    return true;
}

namespace {

Rat acc_coefficient(const Rat& b) {
    if (b < 0 || b >= 1) raise(errc::out_of_domain, "b must lie in [0,1), got " + to_string(b));
    return (3 - b) * (3 - b) / (1 - b * b) - 2;
}

} // namespace

QuadSurd acc(const Rat& b) {
    Rat c = acc_coefficient(b);
    // Larger root of z^2 - cz + 1 = 0.
    return (QuadSurd(c) + QuadSurd::sqrt_rational(c * c - 4)) / QuadSurd(Rat(2));
}

QuadSurd acc(const QuadSurd& b) {
    // The defining quadratic makes sense on (-1,1); values in (-1,0) arise
    // as the lower inverse branch above tau^4 and are accepted here.
    if (b <= QuadSurd(Rat(-1)) || b >= QuadSurd(Rat(1)))
        raise(errc::out_of_domain, "b must lie in (-1,1), got " + b.str());
    QuadSurd three(Rat(3)), one(Rat(1)), two(Rat(2));
    QuadSurd c = (three - b) * (three - b) / (one - b * b) - two;
    auto root = sqrt_of_surd(c * c - QuadSurd(Rat(4)));
    if (!root)
        raise(errc::not_representable, "acc(" + b.str() + ") leaves quadratic fields");
    return (c + *root) / two;
}

QuadSurd acc_inv(const Rat& z, int eps) {
    if (eps != 1 && eps != -1) raise(errc::invalid_argument, "eps must be +1 or -1");
    if (z <= 1) raise(errc::out_of_domain, "z must be > 1");
    Rat w = z + 1 / z + 2;
    if (w < 8) raise(errc::out_of_domain, "z below the accumulation minimum: " + to_string(z));
    QuadSurd root = QuadSurd::sqrt_rational(w * w - 8 * w);
    QuadSurd b = (QuadSurd(Rat(3)) + QuadSurd(Rat(eps)) * root) / QuadSurd(w + 1);
    return b;
}

QuadSurd acc_inv_surd(const QuadSurd& z, int eps) {
    if (z.is_rational()) return acc_inv(z.rational_value(), eps);
    QuadSurd one(Rat(1)), two(Rat(2)), three(Rat(3)), eight(Rat(8));
    QuadSurd w = z + one / z + two;
    QuadSurd arg = w * w - eight * w;
    if (arg.sign() < 0) raise(errc::out_of_domain, "z below the accumulation minimum");
    auto root = sqrt_of_surd(arg);
    if (!root) raise(errc::not_representable, "acc_inv(" + z.str() + ") leaves quadratic fields");
    return (three + QuadSurd(Rat(eps)) * *root) / (one + w);
}

QuadSurd volume(const Rat& b, const Rat& z) {
    if (b < 0 || b >= 1) raise(errc::out_of_domain, "b must lie in [0,1)");
    if (z < 1) raise(errc::out_of_domain, "z must be >= 1");
    return QuadSurd::sqrt_rational(z / (1 - b * b));
}

Rat obstruction_mu(const ClassTuple& c, const Rat& b, const Rat& z) {
    Rat denom = Rat(c.d) - Rat(c.m) * b;
    if (denom <= 0) raise(errc::nonpositive_denominator, "d - mb <= 0 for " + c.str());
    if (z <= c.center()) return Rat(c.q) * z / denom;
    return Rat(c.p) / denom;
}

QuadSurd obstruction_mu(const ClassTuple& c, const QuadSurd& b, const Rat& z) {
    QuadSurd denom = QuadSurd(Rat(c.d)) - QuadSurd(Rat(c.m)) * b;
    if (denom.sign() <= 0) raise(errc::nonpositive_denominator, "d - mb <= 0 for " + c.str());
    if (z <= c.center()) return QuadSurd(Rat(c.q) * z) / denom;
    return QuadSurd(Rat(c.p)) / denom;
}

Rat obstruction_mu(const ExcVector& v, const Rat& b, const Rat& z) {
    Rat denom = Rat(v.deg) - Rat(v.coeffs.empty() ? Int(0) : v.coeffs[0]) * b;
    if (denom <= 0) raise(errc::nonpositive_denominator, "deg - mb <= 0 for " + v.str());
    auto w = Weight::of_rational(z).entries();
    Int dot = 0;
    size_t n = std::min(w.size(), v.coeffs.size() - 1);
    for (size_t i = 0; i < n; ++i) dot += v.coeffs[i + 1] * w[i];
    return Rat(dot) / (Rat(den(z)) * denom);
}

bool obstructive_at_center(const ClassTuple& c, const Rat& b) {
    if (b < 0 || b >= 1) raise(errc::out_of_domain, "b must lie in [0,1)");
    Rat lhs = b * Rat(c.d) - Rat(c.m);
    return lhs * lhs < 1 - b * b;
}

} // namespace stairlab
