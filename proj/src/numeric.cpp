#include "stairlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace stairlab {

const char* errc_name(errc code) {
    switch (code) {
        case errc::none: return "None";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::negative_radicand: return "NegativeRadicand";
        case errc::mixed_radicands: return "MixedRadicands";
        case errc::not_quasi_perfect: return "NotQuasiPerfect";
        case errc::formal_class: return "FormalClass";
        case errc::nonpositive_denominator: return "NonpositiveDenominator";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::degenerate_limit: return "DegenerateLimit";
        case errc::mixed_eps: return "MixedEps";
        case errc::unordered_centers: return "UnorderedCenters";
        case errc::invalid_triple: return "InvalidTriple";
        case errc::invalid_label: return "InvalidLabel";
        case errc::root_has_no_predecessor: return "RootHasNoPredecessor";
        case errc::parity_mismatch: return "ParityMismatch";
        case errc::parity_violation: return "ParityViolation";
        case errc::invariant_violation: return "InvariantViolation";
        case errc::empty_selection: return "EmptySelection";
        case errc::no_blocked_point: return "NoBlockedPoint";
        case errc::not_in_tree: return "NotInTree";
        case errc::not_representable: return "NotRepresentable";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

Int isqrt(const Int& n) {
    if (n < 0) raise(errc::negative_radicand, "isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = isqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto sn = sqrt_exact(num(r));
    if (!sn) return std::nullopt;
    auto sd = sqrt_exact(den(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

namespace {

using boost::multiprecision::powm;

bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    // Deterministic for n < 3.3e24 with these bases.
    for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        Int x = powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Int pollard_brent(const Int& n) {
    // n odd composite, not a prime power of a small prime.
    if (n % 2 == 0) return 2;
    Int x0 = 2, c = 1;
    while (true) {
        Int x = x0, y = x0, d = 1;
        Int ys = y, q = 1;
        const unsigned m = 128;
        unsigned r = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = f(y);
            unsigned k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
        c += 1;
        x0 += 1;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n <= 1) return;
    for (unsigned p = 2; p < 20000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) { ++out[Int(p)]; n /= p; }
    }
    if (n == 1) return;
    if (auto s = sqrt_exact(n)) {
        std::map<Int, unsigned> sub;
        factor_into(*s, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    if (miller_rabin(n)) { ++out[n]; return; }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::pair<Int, Int> square_part(const Int& n) {
    if (n <= 0) raise(errc::invalid_argument, "square_part requires a positive integer");
    std::map<Int, unsigned> fac;
    factor_into(n, fac);
    Int s = 1, f = 1;
    for (auto& [p, e] : fac) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    return {s, f};
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) raise(errc::division_by_zero, "floor_div by zero");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }

Rat parse_rat(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) raise(errc::parse_error, "empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash)), q(s.substr(slash + 1));
            if (q == 0) raise(errc::division_by_zero, "zero denominator in '" + text + "'");
            return Rat(p, q);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            if (head.empty() || head == "-" || head == "+") head += "0";
            if (tail.find_first_not_of("0123456789") != std::string::npos)
                raise(errc::parse_error, "bad decimal literal '" + text + "'");
            Int scale = 1;
            for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
            Int whole(head);
            Int frac = tail.empty() ? Int(0) : Int(tail);
            if (whole < 0 || head[0] == '-') return Rat(whole * scale - frac, scale);
            return Rat(whole * scale + frac, scale);
        }
        return Rat(Int(s));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "bad rational literal '" + text + "'");
    }
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::string decimal_string(const Rat& r, int digits) {
    if (digits < 1) digits = 1;
    if (r == 0) return "0";
    bool neg = r < 0;
    Rat a = abs(r);
    // Find exponent e with 10^(e-1) <= a < 10^e, then round a * 10^(digits-e).
    int e = 0;
    Rat t = a;
    while (t >= 1) { t /= 10; ++e; }
    while (t < Rat(1, 10)) { t *= 10; --e; }
    int shift = digits - e;
    Rat scaled = a;
    for (int i = 0; i < shift; ++i) scaled *= 10;
    for (int i = 0; i < -shift; ++i) scaled /= 10;
    Int mant = floor_rat(scaled + Rat(1, 2));
    std::string m = mant.str();
    if ((int)m.size() > digits) { m.pop_back(); ++e; } // rounding carried over
    std::string out;
    if (e <= 0) {
        out = "0.";
        out.append(-e, '0');
        out += m;
    } else if (e >= (int)m.size()) {
        out = m;
        out.append(e - m.size(), '0');
    } else {
        out = m.substr(0, e) + "." + m.substr(e);
    }
    // Trim trailing zeros in the fractional part.
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

} // namespace stairlab
