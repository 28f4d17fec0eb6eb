#include "stairlab.h"

#include <cstring>
#include <memory>
#include <string>

#include "stairlab/serialize.hpp"
#include "stairlab/verify.hpp"

using namespace stairlab;

struct stairlab_surd {
    QuadSurd value;
};
struct stairlab_class {
    ClassTuple value;
};
struct stairlab_tree {
    Int n;
    int level = 0;
    SymWord sym;
    std::vector<TreeNode> nodes;
};

namespace {

thread_local std::string g_last_error;

int code_of(errc c) {
    switch (c) {
        case errc::none: return STAIRLAB_OK;
        case errc::invalid_argument: return STAIRLAB_ERR_INVALID_ARGUMENT;
        case errc::parse_error: return STAIRLAB_ERR_PARSE;
        case errc::out_of_domain: return STAIRLAB_ERR_OUT_OF_DOMAIN;
        case errc::division_by_zero: return STAIRLAB_ERR_DIVISION_BY_ZERO;
        case errc::negative_radicand: return STAIRLAB_ERR_NEGATIVE_RADICAND;
        case errc::mixed_radicands: return STAIRLAB_ERR_MIXED_RADICANDS;
        case errc::not_quasi_perfect: return STAIRLAB_ERR_NOT_QUASI_PERFECT;
        case errc::formal_class: return STAIRLAB_ERR_FORMAL_CLASS;
        case errc::nonpositive_denominator: return STAIRLAB_ERR_NONPOSITIVE_DENOMINATOR;
        case errc::degenerate_denominator:
        case errc::degenerate_limit: return STAIRLAB_ERR_DEGENERATE;
        case errc::mixed_eps: return STAIRLAB_ERR_MIXED_EPS;
        case errc::unordered_centers: return STAIRLAB_ERR_UNORDERED_CENTERS;
        case errc::invalid_triple: return STAIRLAB_ERR_INVALID_TRIPLE;
        case errc::invalid_label: return STAIRLAB_ERR_INVALID_LABEL;
        case errc::root_has_no_predecessor: return STAIRLAB_ERR_NO_PREDECESSOR;
        case errc::parity_mismatch:
        case errc::parity_violation: return STAIRLAB_ERR_PARITY;
        case errc::invariant_violation: return STAIRLAB_ERR_INVARIANT;
        case errc::empty_selection: return STAIRLAB_ERR_EMPTY_SELECTION;
        case errc::no_blocked_point: return STAIRLAB_ERR_NO_BLOCKED_POINT;
        case errc::not_in_tree: return STAIRLAB_ERR_NOT_IN_TREE;
        case errc::not_representable: return STAIRLAB_ERR_NOT_REPRESENTABLE;
        case errc::internal: return STAIRLAB_ERR_INTERNAL;
    }
    return STAIRLAB_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return STAIRLAB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown exception";
        return STAIRLAB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int put_string(char** out, const std::string& s) {
    if (!out) return STAIRLAB_ERR_NULL_POINTER;
    *out = dup_string(s);
    return *out ? STAIRLAB_OK : STAIRLAB_ERR_INTERNAL;
}

#define REQUIRE_PTR(p) \
    do { if (!(p)) { g_last_error = "null argument: " #p; return STAIRLAB_ERR_NULL_POINTER; } } while (0)

// Shared JSON payload builders used by the command surface.

json describe_staircase(const PrincipalStaircase& s, int count) {
    auto steps = generate_prestaircase(s.seed0, s.seed1, s.nu, count);
    json jsteps = json::array();
    for (const ClassTuple& c : steps) jsteps.push_back(to_json(c));
    json out{{"direction", s.dir == Direction::ascending ? "asc" : "desc"},
             {"nu", s.nu.str()},
             {"blocking", to_json(s.blocking)},
             {"steps", jsteps}};
    if (s.nu >= 3) {
        try {
            out["z_limit"] = to_json(
                recursion_limit(s.seed0.p, s.seed1.p, s.seed0.q, s.seed1.q, s.nu));
            out["b_limit"] = to_json(
                recursion_limit(s.seed0.m, s.seed1.m, s.seed0.d, s.seed1.d, s.nu));
        } catch (const Error&) {
            // degenerate denominator sequence: no finite limit to report
        }
    }
    return out;
}

json blocked_query_result(const std::vector<TreeNode>& nodes,
                          const std::function<bool(const ClassTuple&)>& hit) {
    for (const TreeNode& node : nodes) {
        if (node.cls.formal) continue;
        if (hit(node.cls))
            return json{{"blocked", true},
                        {"owner", to_json(node.cls)},
                        {"label", node.label.str()}};
    }
    return json{{"blocked", false}};
}

} // namespace

extern "C" {

const char* stairlab_version(void) { return "1.0.0"; }

const char* stairlab_rc_name(int rc) {
    switch (rc) {
        case STAIRLAB_OK: return "ok";
        case STAIRLAB_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case STAIRLAB_ERR_PARSE: return "parse-error";
        case STAIRLAB_ERR_OUT_OF_DOMAIN: return "out-of-domain";
        case STAIRLAB_ERR_DIVISION_BY_ZERO: return "division-by-zero";
        case STAIRLAB_ERR_NEGATIVE_RADICAND: return "negative-radicand";
        case STAIRLAB_ERR_MIXED_RADICANDS: return "mixed-radicands";
        case STAIRLAB_ERR_NOT_QUASI_PERFECT: return "not-quasi-perfect";
        case STAIRLAB_ERR_FORMAL_CLASS: return "formal-class";
        case STAIRLAB_ERR_NONPOSITIVE_DENOMINATOR: return "nonpositive-denominator";
        case STAIRLAB_ERR_DEGENERATE: return "degenerate";
        case STAIRLAB_ERR_MIXED_EPS: return "mixed-eps";
        case STAIRLAB_ERR_UNORDERED_CENTERS: return "unordered-centers";
        case STAIRLAB_ERR_INVALID_TRIPLE: return "invalid-triple";
        case STAIRLAB_ERR_INVALID_LABEL: return "invalid-label";
        case STAIRLAB_ERR_NO_PREDECESSOR: return "no-predecessor";
        case STAIRLAB_ERR_PARITY: return "parity";
        case STAIRLAB_ERR_INVARIANT: return "invariant-violation";
        case STAIRLAB_ERR_EMPTY_SELECTION: return "empty-selection";
        case STAIRLAB_ERR_NO_BLOCKED_POINT: return "no-blocked-point";
        case STAIRLAB_ERR_NOT_IN_TREE: return "not-in-tree";
        case STAIRLAB_ERR_NOT_REPRESENTABLE: return "not-representable";
        case STAIRLAB_ERR_VERIFY_FAILED: return "verify-failed";
        case STAIRLAB_ERR_NULL_POINTER: return "null-pointer";
        default: return "internal";
    }
}

const char* stairlab_last_error(void) { return g_last_error.c_str(); }

void stairlab_string_free(char* s) { std::free(s); }

int stairlab_surd_create(const char* a, const char* b, const char* c, const char* D,
                         stairlab_surd** out) {
    REQUIRE_PTR(a); REQUIRE_PTR(b); REQUIRE_PTR(c); REQUIRE_PTR(D); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_surd{QuadSurd(Int(a), Int(b), Int(c), Int(D))};
        return STAIRLAB_OK;
    });
}

int stairlab_surd_from_rational(const char* pq, stairlab_surd** out) {
    REQUIRE_PTR(pq); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_surd{QuadSurd(parse_rat(pq))};
        return STAIRLAB_OK;
    });
}

int stairlab_surd_sqrt_rational(const char* pq, stairlab_surd** out) {
    REQUIRE_PTR(pq); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_surd{QuadSurd::sqrt_rational(parse_rat(pq))};
        return STAIRLAB_OK;
    });
}

int stairlab_surd_arith(char op, const stairlab_surd* x, const stairlab_surd* y,
                        stairlab_surd** out) {
    REQUIRE_PTR(x); REQUIRE_PTR(y); REQUIRE_PTR(out);
    return guarded([&] {
        QuadSurd r;
        switch (op) {
            case '+': r = x->value + y->value; break;
            case '-': r = x->value - y->value; break;
            case '*': r = x->value * y->value; break;
            case '/': r = x->value / y->value; break;
            default: raise(errc::invalid_argument, "op must be one of + - * /");
        }
        *out = new stairlab_surd{r};
        return STAIRLAB_OK;
    });
}

int stairlab_surd_cmp(const stairlab_surd* x, const stairlab_surd* y, int* cmp_out) {
    REQUIRE_PTR(x); REQUIRE_PTR(y); REQUIRE_PTR(cmp_out);
    return guarded([&] {
        auto ord = x->value.compare(y->value);
        *cmp_out = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
        return STAIRLAB_OK;
    });
}

int stairlab_surd_to_json(const stairlab_surd* s, int digits, char** json_out) {
    REQUIRE_PTR(s); REQUIRE_PTR(json_out);
    return guarded([&] { return put_string(json_out, to_json(s->value, digits).dump()); });
}

void stairlab_surd_free(stairlab_surd* s) { delete s; }

int stairlab_class_from_center(const char* pq, stairlab_class** out) {
    REQUIRE_PTR(pq); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_class{class_from_center(parse_rat(pq))};
        return STAIRLAB_OK;
    });
}

int stairlab_class_parse(const char* tuple_text, stairlab_class** out) {
    REQUIRE_PTR(tuple_text); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_class{parse_class(tuple_text)};
        return STAIRLAB_OK;
    });
}

int stairlab_class_apply_sym(const char* sym, const stairlab_class* c, stairlab_class** out) {
    REQUIRE_PTR(sym); REQUIRE_PTR(c); REQUIRE_PTR(out);
    return guarded([&] {
        *out = new stairlab_class{apply_sym(parse_sym(sym), c->value)};
        return STAIRLAB_OK;
    });
}

int stairlab_class_to_text(const stairlab_class* c, char** out) {
    REQUIRE_PTR(c); REQUIRE_PTR(out);
    return guarded([&] { return put_string(out, c->value.str()); });
}

int stairlab_class_to_json(const stairlab_class* c, char** json_out) {
    REQUIRE_PTR(c); REQUIRE_PTR(json_out);
    return guarded([&] { return put_string(json_out, to_json(c->value).dump()); });
}

void stairlab_class_free(stairlab_class* c) { delete c; }

int stairlab_acc(const char* b, int digits, char** json_out) {
    REQUIRE_PTR(b); REQUIRE_PTR(json_out);
    return guarded([&] { return put_string(json_out, to_json(acc(parse_rat(b)), digits).dump()); });
}

int stairlab_acc_inv(const char* z, int eps, int digits, char** json_out) {
    REQUIRE_PTR(z); REQUIRE_PTR(json_out);
    return guarded(
        [&] { return put_string(json_out, to_json(acc_inv(parse_rat(z), eps), digits).dump()); });
}

int stairlab_tree_build(long n, int level, const char* sym, stairlab_tree** out) {
    REQUIRE_PTR(out);
    return guarded([&] {
        SymWord w = sym ? parse_sym(sym) : SymWord{};
        auto t = std::make_unique<stairlab_tree>();
        t->n = n;
        t->level = level;
        t->sym = w;
        t->nodes = enumerate_tree(Int(n), level, w);
        *out = t.release();
        return STAIRLAB_OK;
    });
}

int stairlab_tree_node_count(const stairlab_tree* t, size_t* out) {
    REQUIRE_PTR(t); REQUIRE_PTR(out);
    *out = t->nodes.size();
    return STAIRLAB_OK;
}

int stairlab_tree_to_json(const stairlab_tree* t, int digits, char** json_out) {
    REQUIRE_PTR(t); REQUIRE_PTR(json_out);
    return guarded([&] {
        return put_string(json_out, tree_to_json(t->n, t->level, t->sym, digits).dump(2));
    });
}

void stairlab_tree_free(stairlab_tree* t) { delete t; }

int stairlab_cmd_class_from_center(const char* pq, char** json_out) {
    REQUIRE_PTR(pq); REQUIRE_PTR(json_out);
    return guarded([&] {
        ClassTuple c = class_from_center(parse_rat(pq));
        json j = to_json(c);
        j["text"] = c.str();
        return put_string(json_out, j.dump());
    });
}

int stairlab_cmd_apply_sym(const char* sym, const char* pq, char** json_out) {
    REQUIRE_PTR(sym); REQUIRE_PTR(pq); REQUIRE_PTR(json_out);
    return guarded([&] {
        ClassTuple c = apply_sym(parse_sym(sym), class_from_center(parse_rat(pq)));
        json j = to_json(c);
        j["text"] = c.str();
        return put_string(json_out, j.dump());
    });
}

int stairlab_cmd_triple_at(const char* label, char** json_out) {
    REQUIRE_PTR(label); REQUIRE_PTR(json_out);
    return guarded([&] {
        Label lbl = parse_label(label);
        json j = to_json(triple_at_label(lbl));
        j["label"] = lbl.str();
        j["cs_length"] = cs_length(lbl).str();
        return put_string(json_out, j.dump());
    });
}

int stairlab_cmd_triple_mutate(const char* side, const char* label, char** json_out) {
    REQUIRE_PTR(side); REQUIRE_PTR(label); REQUIRE_PTR(json_out);
    return guarded([&] {
        std::string s(side);
        if (s != "x" && s != "y") raise(errc::invalid_argument, "side must be x or y");
        Triple t = mutate(triple_at_label(parse_label(label)),
                          s == "x" ? MutationSide::x : MutationSide::y);
        return put_string(json_out, to_json(t).dump());
    });
}

int stairlab_cmd_staircase(const char* label, const char* side, int count, char** json_out) {
    REQUIRE_PTR(label); REQUIRE_PTR(side); REQUIRE_PTR(json_out);
    return guarded([&] {
        std::string s(side);
        if (s != "asc" && s != "desc") raise(errc::invalid_argument, "side must be asc or desc");
        if (count < 0) raise(errc::invalid_argument, "count must be >= 0");
        PrincipalStaircase st = staircase_at_label(
            parse_label(label), s == "asc" ? Direction::ascending : Direction::descending);
        return put_string(json_out, describe_staircase(st, count).dump());
    });
}

int stairlab_cmd_blocked_z(const char* z, int eps, int level, char** json_out) {
    REQUIRE_PTR(z); REQUIRE_PTR(json_out);
    return guarded([&] {
        Rat zr = parse_rat(z);
        if (eps != 1 && eps != -1) raise(errc::invalid_argument, "eps must be +1 or -1");
        // Families are searched through the symmetry whose image region
        // contains z on the requested side.
        json result{{"blocked", false}};
        if (eps == +1 && zr >= 6) {
            Int n = floor_rat((zr - 6) / 2);
            std::vector<TreeNode> nodes;
            for (Int k = n > 0 ? Int(n - 1) : Int(0); k <= n + 1; ++k) {
                auto part = enumerate_tree(k, level);
                nodes.insert(nodes.end(), part.begin(), part.end());
            }
            result = blocked_query_result(nodes, [&](const ClassTuple& c) {
                return is_blocked_z(c, zr);
            });
        } else {
            // Below 6 (or eps = -1): search S^i R^delta images with matching
            // parity over a modest range.
            for (int i = 0; i <= 6 && !result["blocked"].get<bool>(); ++i) {
                for (int delta = 0; delta <= 1; ++delta) {
                    if (((i + delta) % 2 == 0) != (eps == +1)) continue;
                    if (i == 0 && delta == 0 && zr < 6) continue;
                    SymWord w{Int(i), delta};
                    for (Int k = 0; k <= 4 && !result["blocked"].get<bool>(); ++k) {
                        auto nodes = enumerate_tree(k, level, w);
                        result = blocked_query_result(nodes, [&](const ClassTuple& c) {
                            return is_blocked_z(c, zr);
                        });
                    }
                }
            }
        }
        result["z"] = to_string(zr);
        result["eps"] = eps;
        return put_string(json_out, result.dump());
    });
}

int stairlab_cmd_blocked_b(const char* b, int level, char** json_out) {
    REQUIRE_PTR(b); REQUIRE_PTR(json_out);
    return guarded([&] {
        Rat br = parse_rat(b);
        if (br < 0 || br >= 1) raise(errc::out_of_domain, "b must lie in [0,1)");
        int eps = br > Rat(1, 3) ? +1 : -1;
        json result{{"blocked", false}};
        for (int i = 0; i <= 6 && !result["blocked"].get<bool>(); ++i) {
            for (int delta = 0; delta <= 1; ++delta) {
                if (((i + delta) % 2 == 0) != (eps == +1)) continue;
                SymWord w{Int(i), delta};
                for (Int k = 0; k <= 4 && !result["blocked"].get<bool>(); ++k) {
                    auto nodes = enumerate_tree(k, level, w);
                    result = blocked_query_result(nodes, [&](const ClassTuple& c) {
                        return is_blocked_b(c, br);
                    });
                }
            }
        }
        result["b"] = to_string(br);
        QuadSurd z = acc(br);
        result["acc"] = to_json(z);
        return put_string(json_out, result.dump());
    });
}

int stairlab_cmd_interval(const char* label, const char* bisect_tol, char** json_out) {
    REQUIRE_PTR(label); REQUIRE_PTR(json_out);
    return guarded([&] {
        Label lbl = parse_label(label);
        if (!bisect_tol) return put_string(json_out, to_json(blocked_interval(lbl)).dump());
        Rat tol = parse_rat(bisect_tol);
        BracketedInterval br = blocked_interval_bisect(class_at_label(lbl), tol);
        json j{{"owner", to_json(br.owner)},
               {"z_lo", json{{"lo", to_string(br.z_lo_lo)}, {"hi", to_string(br.z_lo_hi)}}},
               {"z_hi", json{{"lo", to_string(br.z_hi_lo)}, {"hi", to_string(br.z_hi_hi)}}},
               {"tol", to_string(tol)}};
        return put_string(json_out, j.dump());
    });
}

int stairlab_cmd_capacity(const char* b, const char* z_from, const char* z_to, int samples,
                          int pool_level, int include_special, const char* format, char** out) {
    REQUIRE_PTR(b); REQUIRE_PTR(z_from); REQUIRE_PTR(z_to); REQUIRE_PTR(format); REQUIRE_PTR(out);
    return guarded([&] {
        ProfileOptions opt;
        opt.b = parse_rat(b);
        opt.z_from = parse_rat(z_from);
        opt.z_to = parse_rat(z_to);
        opt.samples = samples;
        opt.pool_level = pool_level;
        opt.include_special = include_special != 0;
        std::string fmt(format);
        if (fmt == "csv") return put_string(out, profile_to_csv(opt));
        if (fmt == "json") return put_string(out, profile_to_json(opt).dump(2));
        raise(errc::invalid_argument, "format must be csv or json");
    });
}

int stairlab_cmd_tree(long n, int level, const char* sym, const char* format, char** out) {
    REQUIRE_PTR(format); REQUIRE_PTR(out);
    return guarded([&] {
        SymWord w = sym ? parse_sym(sym) : SymWord{};
        std::string fmt(format);
        if (fmt != "json") raise(errc::invalid_argument, "tree format must be json");
        return put_string(out, tree_to_json(Int(n), level, w).dump(2));
    });
}

int stairlab_cmd_verify(const char* suite, char** json_out) {
    REQUIRE_PTR(suite); REQUIRE_PTR(json_out);
    return guarded([&] {
        std::string name(suite);
        json report;
        bool ok = true;
        if (name == "all") {
            json items = json::array();
            for (const SuiteResult& res : run_all_suites()) {
                items.push_back(json{{"suite", res.name},
                                     {"status", res.status},
                                     {"elapsed_ms", res.elapsed_ms},
                                     {"details", res.details}});
                ok = ok && res.ok();
            }
            report = json{{"suites", items}, {"status", ok ? "pass" : "fail"}};
        } else {
            SuiteResult res = run_suite(name);
            ok = res.ok();
            report = json{{"suite", res.name},
                          {"status", res.status},
                          {"elapsed_ms", res.elapsed_ms},
                          {"details", res.details}};
        }
        int rc = put_string(json_out, report.dump(2));
        if (rc != STAIRLAB_OK) return rc;
        return ok ? STAIRLAB_OK : (int)STAIRLAB_ERR_VERIFY_FAILED;
    });
}

} // extern "C"
