#include "stairlab/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace stairlab {

json to_json(const QuadSurd& s, int digits) {
    return json{{"a", s.a().str()},
                {"b", s.b().str()},
                {"c", s.c().str()},
                {"D", s.D().str()},
                {"approx", s.decimal(digits)}};
}

QuadSurd surd_from_json(const json& j) {
    return QuadSurd(Int(j.at("a").get<std::string>()), Int(j.at("b").get<std::string>()),
                    Int(j.at("c").get<std::string>()), Int(j.at("D").get<std::string>()));
}

json to_json(const ClassTuple& c) {
    return json{{"d", c.d.str()},   {"m", c.m.str()}, {"p", c.p.str()},
                {"q", c.q.str()},   {"t", c.t.str()}, {"eps", c.eps},
                {"formal", c.formal}};
}

ClassTuple class_from_json(const json& j) {
    return ClassTuple(Int(j.at("d").get<std::string>()), Int(j.at("m").get<std::string>()),
                      Int(j.at("p").get<std::string>()), Int(j.at("q").get<std::string>()),
                      Int(j.at("t").get<std::string>()), j.at("eps").get<int>());
}

ClassTuple parse_class(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        raise(errc::parse_error, "class tuple must look like (14,9,29,4,13,+1): " + text);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s.substr(1, s.size() - 2)) {
        if (ch == ',') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 5 && parts.size() != 6)
        raise(errc::parse_error, "class tuple needs 5 or 6 entries: " + text);
    try {
        Int d(parts[0]), m(parts[1]), p(parts[2]), q(parts[3]), t(parts[4]);
        int eps;
        if (parts.size() == 6) {
            if (parts[5] == "+1" || parts[5] == "1") eps = +1;
            else if (parts[5] == "-1") eps = -1;
            else raise(errc::parse_error, "eps must be +1 or -1: " + text);
        } else {
            eps = 3 * m > d ? +1 : -1;
        }
        return ClassTuple(d, m, p, q, t, eps);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::parse_error, "bad class tuple '" + text + "'");
    }
}

json to_json(const ExcVector& v) {
    json coeffs = json::array();
    for (const Int& c : v.coeffs) coeffs.push_back(c.str());
    return json{{"deg", v.deg.str()}, {"coeffs", coeffs}};
}

ExcVector exc_from_json(const json& j) {
    ExcVector v;
    v.deg = Int(j.at("deg").get<std::string>());
    for (const auto& c : j.at("coeffs")) v.coeffs.push_back(Int(c.get<std::string>()));
    return v;
}

json to_json(const Triple& t) {
    return json{{"left", to_json(t.left)},
                {"mid", to_json(t.mid)},
                {"right", to_json(t.right)},
                {"quasi", t.quasi}};
}

json to_json(const BlockedInterval& iv, int digits) {
    return json{{"owner", to_json(iv.owner)},
                {"label", iv.label.str()},
                {"z_lo", to_json(iv.z_lo, digits)},
                {"z_hi", to_json(iv.z_hi, digits)},
                {"b_lo", to_json(iv.b_lo, digits)},
                {"b_hi", to_json(iv.b_hi, digits)}};
}

json to_json(const TreeNode& node, int digits) {
    json j{{"label", node.label.address()},
           {"level", node.level},
           {"class", to_json(node.cls)},
           {"center", to_string(node.cls.q == 0 ? Rat(0) : node.cls.center())},
           {"cs_length", node.cs_len.str()},
           {"parent", node.parent}};
    if (!node.cls.formal) {
        BlockedInterval iv = blocked_interval(node.label);
        j["interval"] = json{{"z_lo", to_json(iv.z_lo, digits)}, {"z_hi", to_json(iv.z_hi, digits)}};
    }
    return j;
}

json tree_to_json(const Int& n, int level, const SymWord& sym, int digits) {
    json nodes = json::array();
    for (const TreeNode& node : enumerate_tree(n, level, sym)) nodes.push_back(to_json(node, digits));
    return json{{"n", n.str()}, {"level", level}, {"sym", sym.str()}, {"nodes", nodes}};
}

namespace {

struct ProfileRow {
    Rat z;
    QuadSurd vol;
    CapacityValue cap;
};

std::vector<ProfileRow> profile_rows(const ProfileOptions& opt) {
    if (opt.samples < 2) raise(errc::invalid_argument, "need at least 2 samples");
    if (opt.z_from >= opt.z_to) raise(errc::invalid_argument, "empty z range");
    std::vector<PoolClass> pool;
    Int n = 0;
    // Families whose centers can reach the requested range.
    while (Rat(2 * n + 6) <= opt.z_to) {
        if (Rat(2 * n + 8) >= opt.z_from) {
            auto part = tree_pool(n, opt.pool_level);
            pool.insert(pool.end(), part.begin(), part.end());
        }
        ++n;
    }
    if (opt.include_special) {
        ExcVector special{3, {1, 2, 1, 1, 1, 1, 1}};
        pool.push_back({"special(3,1;2,1^5)", special});
    }
    std::vector<Rat> grid;
    for (int i = 0; i < opt.samples; ++i)
        grid.push_back(opt.z_from + (opt.z_to - opt.z_from) * Rat(i, opt.samples - 1));
    for (const PoolClass& pc : pool) {
        // Insert exact break points so the corners are sampled.
        if (pc.vec.coeffs.size() < 2) continue;
        Rat sum = 0, sumsq = 0;
        for (size_t i = 1; i < pc.vec.coeffs.size(); ++i) {
            sum += Rat(pc.vec.coeffs[i]);
            sumsq += Rat(pc.vec.coeffs[i] * pc.vec.coeffs[i]);
        }
        // center p/q of the weight part: q = first weight, p = sum+q... use
        // the identities sum = p+q-1 and sumsq = pq only for perfect shapes;
        // otherwise skip.
        Rat q(pc.vec.coeffs[1]);
        Rat p = sum + 1 - q;
        if (p > 0 && q > 0 && p / q >= opt.z_from && p / q <= opt.z_to && sumsq == p * q)
            grid.push_back(p / q);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<ProfileRow> rows;
    for (const Rat& z : grid)
        rows.push_back({z, volume(opt.b, z), capacity_lower(opt.b, z, pool)});
    return rows;
}

} // namespace

json profile_to_json(const ProfileOptions& opt) {
    json rows = json::array();
    for (const ProfileRow& r : profile_rows(opt)) {
        rows.push_back(json{{"z", to_string(r.z)},
                            {"z_decimal", decimal_string(r.z, opt.digits)},
                            {"volume_decimal", r.vol.decimal(opt.digits)},
                            {"c_lower_decimal", r.cap.value.decimal(opt.digits)},
                            {"argmax_id", r.cap.argmax}});
    }
    return json{{"b", to_string(opt.b)}, {"rows", rows}};
}

std::string profile_to_csv(const ProfileOptions& opt) {
    std::ostringstream os;
    os << "z,z_decimal,volume_decimal,c_lower_decimal,argmax_id\n";
    for (const ProfileRow& r : profile_rows(opt)) {
        os << to_string(r.z) << "," << decimal_string(r.z, opt.digits) << ","
           << r.vol.decimal(opt.digits) << "," << r.cap.value.decimal(opt.digits) << ","
           << r.cap.argmax << "\n";
    }
    return os.str();
}

} // namespace stairlab
