#include "stairlab/cf.hpp"

#include <algorithm>
#include <sstream>

namespace stairlab {

CFrac::CFrac(std::vector<Int> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) raise(errc::invalid_argument, "empty continued fraction");
    for (const Int& t : terms_)
        if (t < 1) raise(errc::invalid_argument, "continued fraction entry < 1");
    // Fold a trailing 1: [...,s,1] = [...,s+1].
    if (terms_.size() > 1 && terms_.back() == 1) {
        terms_.pop_back();
        terms_.back() += 1;
    }
    if (terms_.size() > 1 && terms_.back() < 2)
        raise(errc::invalid_argument, "last continued fraction entry must be >= 2");
}

CFrac CFrac::of_rational(const Rat& z) {
    if (z <= 1) raise(errc::out_of_domain, "continued fraction requires z > 1, got " + to_string(z));
    std::vector<Int> terms;
    Int p = num(z), q = den(z);
    while (q != 0) {
        terms.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    return CFrac(std::move(terms));
}

Rat CFrac::value() const {
    Rat v(terms_.back());
    for (auto it = terms_.rbegin() + 1; it != terms_.rend(); ++it) v = Rat(*it) + 1 / v;
    return v;
}

Int CFrac::weight_length() const {
    Int sum = 0;
    for (const Int& t : terms_) sum += t;
    return sum;
}

std::strong_ordering CFrac::compare(const CFrac& rhs) const {
    size_t n = std::min(terms_.size(), rhs.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i] != rhs.terms_[i]) {
            bool bigger = terms_[i] > rhs.terms_[i];
            if (i % 2 == 1) bigger = !bigger; // odd places count downward
            return bigger ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    if (terms_.size() == rhs.terms_.size()) return std::strong_ordering::equal;
    // One is a strict prefix: appending at an odd place increases the value,
    // at an even place decreases it.
    bool lhs_longer = terms_.size() > rhs.terms_.size();
    bool longer_bigger = (n % 2 == 1);
    if (lhs_longer == longer_bigger) return std::strong_ordering::greater;
    return std::strong_ordering::less;
}

std::string CFrac::str() const {
    std::ostringstream os;
    os << "[" << terms_[0].str();
    for (size_t i = 1; i < terms_.size(); ++i) os << (i == 1 ? ";" : ",") << terms_[i].str();
    os << "]";
    return os.str();
}

QuadSurd PeriodicCFrac::value() const {
    if (period.empty()) raise(errc::invalid_argument, "periodic continued fraction needs a period");
    for (const Int& t : period)
        if (t < 1) raise(errc::invalid_argument, "period entry < 1");
    for (const Int& t : preperiod)
        if (t < 1) raise(errc::invalid_argument, "preperiod entry < 1");
    // Fixed point of the period Moebius map u -> (A u + B)/(C u + D).
    Int A = 1, B = 0, C = 0, D = 1;
    for (const Int& t : period) {
        Int na = A * t + B, nc = C * t + D;
        B = A; D = C;
        A = na; C = nc;
    }
    // C u^2 + (D - A) u - B = 0, positive root.
    QuadSurd disc = QuadSurd::sqrt_rational(Rat((A - D) * (A - D) + 4 * B * C));
    QuadSurd u = (QuadSurd(Rat(A - D)) + disc) / QuadSurd(Rat(2 * C));
    // Push through the preperiod convergents.
    Int PA = 1, PB = 0, PC = 0, PD = 1;
    for (const Int& t : preperiod) {
        Int na = PA * t + PB, nc = PC * t + PD;
        PB = PA; PD = PC;
        PA = na; PC = nc;
    }
    return (QuadSurd(Rat(PA)) * u + QuadSurd(Rat(PB))) / (QuadSurd(Rat(PC)) * u + QuadSurd(Rat(PD)));
}

std::string PeriodicCFrac::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < preperiod.size(); ++i)
        os << preperiod[i].str() << (i == 0 ? ";" : ",");
    os << "{";
    for (size_t i = 0; i < period.size(); ++i) {
        if (i) os << ",";
        os << period[i].str();
    }
    os << "}~]";
    return os.str();
}

Weight Weight::of_rational(const Rat& z) {
    if (z <= 1) raise(errc::out_of_domain, "weight expansion requires z > 1, got " + to_string(z));
    CFrac cf = CFrac::of_rational(z);
    Weight w;
    // q_0 = q, q_1 = p - s_0 q_0, q_a = q_{a-2} - s_{a-1} q_{a-1}.
    Int prev2 = num(z), prev = den(z);
    for (size_t i = 0; i < cf.terms().size(); ++i) {
        w.blocks_.push_back({prev, cf.terms()[i]});
        Int next = prev2 - cf.terms()[i] * prev;
        prev2 = prev;
        prev = next;
    }
    return w;
}

std::vector<Int> Weight::entries() const {
    std::vector<Int> out;
    for (const Block& b : blocks_)
        for (Int i = 0; i < b.count; ++i) out.push_back(b.value);
    return out;
}

Int Weight::weight_length() const {
    Int n = 0;
    for (const Block& b : blocks_) n += b.count;
    return n;
}

Int Weight::sum() const {
    Int s = 0;
    for (const Block& b : blocks_) s += b.value * b.count;
    return s;
}

Int Weight::sum_squares() const {
    Int s = 0;
    for (const Block& b : blocks_) s += b.value * b.value * b.count;
    return s;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ",";
        os << blocks_[i].value.str();
        if (blocks_[i].count != 1) os << "^" << blocks_[i].count.str();
    }
    os << ")";
    return os.str();
}

Int weight_dot(const Rat& z, const Rat& zp) {
    auto a = Weight::of_rational(z).entries();
    auto b = Weight::of_rational(zp).entries();
    size_t n = std::min(a.size(), b.size());
    Int dot = 0;
    for (size_t i = 0; i < n; ++i) dot += a[i] * b[i];
    return dot;
}

namespace {

std::vector<Int> parse_int_list(const std::string& body) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : body) {
        if (ch == ',' || ch == ';') {
            if (!cur.empty()) out.push_back(Int(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(Int(cur));
    return out;
}

} // namespace

CFrac parse_cf(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        raise(errc::parse_error, "continued fraction must look like [7;5,2]: " + text);
    try {
        return CFrac(parse_int_list(s.substr(1, s.size() - 2)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "bad continued fraction '" + text + "'");
    }
}

PeriodicCFrac parse_periodic_cf(const std::string& text) {
    std::string s = text;
    auto lb = s.find('{');
    auto rb = s.find('}');
    if (s.size() < 2 || s.front() != '[' || lb == std::string::npos || rb == std::string::npos ||
        rb < lb)
        raise(errc::parse_error, "periodic continued fraction must look like [7;{5,1}~]: " + text);
    try {
        PeriodicCFrac p;
        p.preperiod = parse_int_list(s.substr(1, lb - 1));
        p.period = parse_int_list(s.substr(lb + 1, rb - lb - 1));
        if (p.period.empty()) raise(errc::parse_error, "empty period in '" + text + "'");
        return p;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "bad periodic continued fraction '" + text + "'");
    }
}

Weight parse_weight(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        raise(errc::parse_error, "weight expansion must look like (4^7,1^4): " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<Int> flat;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        auto caret = cur.find('^');
        Int value(caret == std::string::npos ? cur : cur.substr(0, caret));
        Int count(caret == std::string::npos ? "1" : cur.substr(caret + 1));
        for (Int i = 0; i < count; ++i) flat.push_back(value);
        cur.clear();
    };
    try {
        for (char ch : s) {
            if (ch == ',') flush();
            else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
        }
        flush();
        // Recover p/q from the flat entries: q = w_1, p = sum + 1 - q.
        if (flat.empty()) raise(errc::parse_error, "empty weight expansion");
        Int q = flat.front(), sum = 0;
        for (const Int& w : flat) sum += w;
        Int p = sum + 1 - q;
        Weight w = Weight::of_rational(Rat(p, q));
        if (w.entries() != flat)
            raise(errc::parse_error, "entries are not a weight expansion: " + text);
        return w;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "bad weight expansion '" + text + "'");
    }
}

} // namespace stairlab
