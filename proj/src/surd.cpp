#include "stairlab/surd.hpp"

#include <tuple>

namespace stairlab {

QuadSurd::QuadSurd(const Int& a, const Int& b, const Int& c, const Int& D)
    : a_(a), b_(b), c_(c), d_(D) {
    if (c_ == 0) raise(errc::division_by_zero, "surd denominator is zero");
    if (d_ < 0) raise(errc::negative_radicand, "negative radicand " + d_.str());
    normalize();
}

void QuadSurd::normalize() {
    if (c_ < 0) { a_ = -a_; b_ = -b_; c_ = -c_; }
    if (d_ == 0 || b_ == 0) { b_ = 0; d_ = 0; }
    if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
    if (d_ > 1) {
        auto [s, f] = square_part(d_);
        if (s != 1) { b_ *= s; d_ = f; }
        if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
    }
    Int g = gcd(gcd(abs(a_), abs(b_)), c_);
    if (g > 1) { a_ /= g; b_ /= g; c_ /= g; }
}

QuadSurd QuadSurd::sqrt_rational(const Rat& r) {
    if (r < 0) raise(errc::negative_radicand, "sqrt of negative rational " + to_string(r));
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = num(r) * den(r);
    if (pq == 0) return QuadSurd(Rat(0));
    auto [s, f] = square_part(pq);
    return QuadSurd(0, s, den(r), f);
}

Rat QuadSurd::rational_value() const {
    if (!is_rational()) raise(errc::out_of_domain, "surd " + str() + " is irrational");
    return Rat(a_, c_);
}

int QuadSurd::sign() const {
    // c > 0, so the sign is that of a + b*sqrt(D).
    if (b_ == 0) return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
    if (a_ == 0) return b_ > 0 ? 1 : -1;
    if (a_ > 0 && b_ > 0) return 1;
    if (a_ < 0 && b_ < 0) return -1;
    // Opposite signs: compare a^2 with b^2 D.
    int cmp = (a_ * a_ < b_ * b_ * d_) ? -1 : (a_ * a_ > b_ * b_ * d_ ? 1 : 0);
    if (cmp == 0) return 0; // cannot happen for squarefree D > 1
    return a_ > 0 ? cmp : -cmp;
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(a_, -b_, c_, d_); }

Rat QuadSurd::norm() const { return Rat(a_ * a_ - b_ * b_ * d_, c_ * c_); }

QuadSurd QuadSurd::operator-() const { return QuadSurd(-a_, -b_, c_, d_); }

namespace {

// Resolves the common radicand of two normalized surds, or throws.
Int common_D(const QuadSurd& x, const QuadSurd& y) {
    if (x.D() == y.D()) return x.D();
    if (x.is_rational()) return y.D();
    if (y.is_rational()) return x.D();
    raise(errc::mixed_radicands,
          "operands lie in different fields Q(sqrt(" + x.D().str() + ")) and Q(sqrt(" +
              y.D().str() + "))");
}

// Sign of u + v*sqrt(D), integer coefficients, D squarefree (or 0).
int linear_sign(const Int& u, const Int& v, const Int& D) {
    if (v == 0 || D == 0) return u == 0 ? 0 : (u > 0 ? 1 : -1);
    if (u == 0) return v > 0 ? 1 : -1;
    if (u > 0 && v > 0) return 1;
    if (u < 0 && v < 0) return -1;
    Int lhs = u * u, rhs = v * v * D;
    int cmp = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    return u > 0 ? cmp : -cmp;
}

} // namespace

QuadSurd QuadSurd::operator+(const QuadSurd& rhs) const {
    Int D = common_D(*this, rhs);
    return QuadSurd(a_ * rhs.c_ + rhs.a_ * c_, b_ * rhs.c_ + rhs.b_ * c_, c_ * rhs.c_, D);
}

QuadSurd QuadSurd::operator-(const QuadSurd& rhs) const { return *this + (-rhs); }

QuadSurd QuadSurd::operator*(const QuadSurd& rhs) const {
    Int D = common_D(*this, rhs);
    return QuadSurd(a_ * rhs.a_ + b_ * rhs.b_ * D, a_ * rhs.b_ + b_ * rhs.a_, c_ * rhs.c_, D);
}

QuadSurd QuadSurd::operator/(const QuadSurd& rhs) const {
    if (rhs.is_zero()) raise(errc::division_by_zero, "surd division by zero");
    Int D = common_D(*this, rhs);
    // x/y = x * conj(y) / (y * conj(y))
    Int na = a_ * rhs.a_ - b_ * rhs.b_ * D;
    Int nb = b_ * rhs.a_ - a_ * rhs.b_;
    Int nc = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * D; // times c/c', folded below
    return QuadSurd(na * rhs.c_, nb * rhs.c_, nc * c_, D);
}

bool QuadSurd::operator==(const QuadSurd& rhs) const {
    return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
}

std::strong_ordering QuadSurd::compare(const QuadSurd& rhs) const {
    if (*this == rhs) return std::strong_ordering::equal;
    if (d_ == rhs.d_ || is_rational() || rhs.is_rational()) {
        int s = (*this - rhs).sign();
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Distinct radicands: sign of u + v*sqrt(D) - w*sqrt(D') with integer u,v,w.
    Int u = a_ * rhs.c_ - rhs.a_ * c_;
    Int v = b_ * rhs.c_;
    Int w = rhs.b_ * c_;
    int sl = linear_sign(u, v, d_);
    int sr = w > 0 ? 1 : (w < 0 ? -1 : 0);
    if (sl != sr) return sl < sr ? std::strong_ordering::less : std::strong_ordering::greater;
    // Same nonzero sign: compare squares, one more exact surd sign test.
    Int tu = u * u + v * v * d_ - w * w * rhs.d_;
    Int tv = 2 * u * v;
    int st = linear_sign(tu, tv, d_);
    if (sl < 0) st = -st;
    if (st == 0) return std::strong_ordering::equal;
    return st < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::pair<Rat, Rat> QuadSurd::rational_bounds(int prec_digits) const {
    if (is_rational()) return {rational_value(), rational_value()};
    Rat tol(1, 1);
    for (int i = 0; i < prec_digits; ++i) tol /= 10;
    Int scale = 1;
    while (true) {
        scale *= 1000000;
        Int s = isqrt(d_ * scale * scale);
        Rat lo_root(s, scale), hi_root(s + 1, scale);
        Rat lo, hi;
        if (b_ >= 0) {
            lo = Rat(a_ + 0, 1) / c_ + Rat(b_) * lo_root / c_;
            hi = Rat(a_ + 0, 1) / c_ + Rat(b_) * hi_root / c_;
        } else {
            lo = Rat(a_ + 0, 1) / c_ + Rat(b_) * hi_root / c_;
            hi = Rat(a_ + 0, 1) / c_ + Rat(b_) * lo_root / c_;
        }
        if (hi - lo <= tol) return {lo, hi};
    }
}

std::string QuadSurd::str() const {
    if (is_rational()) return to_string(Rat(a_, c_));
    std::string root = "√" + d_.str();
    std::string irr = (b_ == 1) ? root : (b_ == -1 ? "-" + root : b_.str() + root);
    std::string numpart;
    if (a_ == 0) {
        numpart = irr;
    } else {
        numpart = a_.str() + (b_ > 0 ? "+" : "") + irr;
        if (c_ != 1) numpart = "(" + numpart + ")";
    }
    return c_ == 1 ? numpart : numpart + "/" + c_.str();
}

std::string QuadSurd::decimal(int digits) const {
    if (is_zero()) return "0";
    auto [lo, hi] = rational_bounds(3);
    Rat mag = std::max(abs(lo), abs(hi));
    int exp10 = 0;
    Rat t = mag;
    while (t >= 1) { t /= 10; ++exp10; }
    while (t < Rat(1, 10)) { t *= 10; --exp10; }
    int prec = digits - exp10 + 3;
    if (prec < 1) prec = 1;
    auto [flo, fhi] = rational_bounds(prec);
    return decimal_string((flo + fhi) / 2, digits);
}

std::optional<QuadSurd> sqrt_of_surd(const QuadSurd& s) {
    if (s.sign() < 0) return std::nullopt;
    if (s.is_rational()) return QuadSurd::sqrt_rational(s.rational_value());
    // Look for t = x + y*sqrt(D) with t^2 = s: x^2 + y^2 D = A, 2xy = B.
    Rat A(s.a(), s.c()), B(s.b(), s.c());
    auto N = sqrt_exact(A * A - B * B * Rat(s.D()));
    if (!N) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rat x2 = (A + (pick == 0 ? *N : -*N)) / 2;
        auto x = sqrt_exact(x2);
        if (!x || *x == 0) continue;
        Rat y = B / (2 * *x);
        QuadSurd t = QuadSurd(*x) + QuadSurd(y) * QuadSurd(0, 1, 1, s.D());
        if (t * t == s) return t.sign() >= 0 ? t : -t;
    }
    return std::nullopt;
}

} // namespace stairlab
