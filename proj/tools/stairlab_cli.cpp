// stairlab: exact staircase/blocking computations for Hirzebruch surfaces.
// Thin command-line front end over the stairlab C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "stairlab.h"

namespace {

using nlohmann::ordered_json;

struct Invocation {
    std::string command;
    bool report = false;
};

// Takes ownership of the C string, prints the payload (or the wrapped
// report), and maps the return code to an exit status.
int finish(const Invocation& inv, int rc, char* payload, bool raw_text,
           std::chrono::steady_clock::time_point start) {
    std::string body = payload ? payload : "";
    stairlab_string_free(payload);
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::string status;
    if (rc == STAIRLAB_OK) status = "pass";
    else if (rc == STAIRLAB_ERR_VERIFY_FAILED) status = "fail";
    else status = "error";
    if (rc != STAIRLAB_OK && rc != STAIRLAB_ERR_VERIFY_FAILED) {
        std::cerr << "error (" << stairlab_rc_name(rc) << "): " << stairlab_last_error() << "\n";
        return 2;
    }
    if (inv.report) {
        ordered_json rep{{"command", inv.command},
                         {"status", inv.command.rfind("verify", 0) == 0 ? status : "info"},
                         {"payload", raw_text ? ordered_json(body)
                                              : ordered_json::parse(body, nullptr, false)},
                         {"elapsed_ms", ms}};
        std::cout << rep.dump(2) << "\n";
    } else if (!body.empty()) {
        std::cout << body;
        if (body.back() != '\n') std::cout << "\n";
    }
    return rc == STAIRLAB_OK ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact staircase and blocking computations for Hirzebruch surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    bool report = false;
    app.add_flag("--report", report, "wrap output in a command report");

    // class from-center | class apply-sym
    auto* cls = app.add_subcommand("class", "class tuple queries");
    cls->require_subcommand(1);
    std::string center_pq;
    auto* from_center = cls->add_subcommand("from-center", "tuple with a given center p/q");
    from_center->add_option("center", center_pq, "center as P/Q")->required();
    std::string sym_word, sym_pq;
    auto* apply = cls->add_subcommand("apply-sym", "symmetry image of the class at a center");
    apply->add_option("sym", sym_word, "symmetry word, e.g. S^2R")->required();
    apply->add_option("center", sym_pq, "center as P/Q")->required();

    // triple at | triple mutate
    auto* triple = app.add_subcommand("triple", "generating triples");
    triple->require_subcommand(1);
    std::string at_label;
    auto* at = triple->add_subcommand("at", "triple whose middle class has the label");
    at->add_option("label", at_label, "label like 0:.021")->required();
    std::string mut_side, mut_label;
    auto* mut = triple->add_subcommand("mutate", "x or y mutation of the triple at a label");
    mut->add_option("side", mut_side, "x or y")->required()->check(CLI::IsMember({"x", "y"}));
    mut->add_option("label", mut_label, "label like 0:.1")->required();

    // staircase
    auto* stair = app.add_subcommand("staircase", "principal pre-staircase steps");
    std::string st_label, st_side = "asc";
    int st_count = 6;
    stair->add_option("--label", st_label, "label like 0:.1")->required();
    stair->add_option("--side", st_side, "asc or desc")->check(CLI::IsMember({"asc", "desc"}));
    stair->add_option("--count", st_count, "number of steps, seeds included");

    // blocked z | blocked b
    auto* blocked = app.add_subcommand("blocked", "blocking queries");
    blocked->require_subcommand(1);
    std::string bz_value, bz_eps = "+1";
    int bz_level = 6;
    auto* bz = blocked->add_subcommand("z", "find a blocking class at a rational z");
    bz->add_option("z", bz_value, "z as P/Q")->required();
    bz->add_option("--eps", bz_eps, "+1 or -1")->check(CLI::IsMember({"+1", "-1", "1"}));
    bz->add_option("--level", bz_level, "tree depth to search");
    std::string bb_value;
    int bb_level = 6;
    auto* bb = blocked->add_subcommand("b", "find a blocking class at a rational b");
    bb->add_option("b", bb_value, "b as P/Q")->required();
    bb->add_option("--level", bb_level, "tree depth to search");

    // interval
    auto* interval = app.add_subcommand("interval", "blocked interval of a labelled class");
    std::string iv_label, iv_tol;
    interval->add_option("--label", iv_label, "label like 0:.01")->required();
    interval->add_option("--bisect", iv_tol, "bracket endpoints to this rational tolerance");

    // capacity
    auto* capacity = app.add_subcommand("capacity", "capacity-profile emitter");
    std::string cap_b, cap_from, cap_to, cap_format = "csv";
    int cap_samples = 100, cap_pool = 4;
    bool cap_special = false;
    capacity->add_option("--b", cap_b, "b as P/Q")->required();
    capacity->add_option("--z-from", cap_from, "start of the z range")->required();
    capacity->add_option("--z-to", cap_to, "end of the z range")->required();
    capacity->add_option("--samples", cap_samples, "grid size");
    capacity->add_option("--pool-level", cap_pool, "tree depth for the obstruction pool");
    capacity->add_option("--format", cap_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    capacity->add_flag("--special", cap_special, "include the class 3L-E0-2E1-E2..6");

    // tree
    auto* tree = app.add_subcommand("tree", "mutation-tree export");
    long tr_n = 0;
    int tr_level = 4;
    std::string tr_sym = "id", tr_format = "json";
    tree->add_option("--n", tr_n, "family index (centers in [2n+6,2n+8])");
    tree->add_option("--level", tr_level, "tree depth");
    tree->add_option("--sym", tr_sym, "symmetry word");
    tree->add_option("--format", tr_format, "json")->check(CLI::IsMember({"json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify
        ->add_option("suite", suite,
                     "identities|adjacency|cremona|intersections|appendixB|density|disjoint|"
                     "slope|farey|noasc|special-b|scan|conjecture-cf|all")
        ->required()
        ->check(CLI::IsMember({"identities", "adjacency", "cremona", "intersections", "appendixB",
                               "density", "disjoint", "slope", "farey", "noasc", "special-b",
                               "scan", "conjecture-cf", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Invocation inv;
    for (int i = 1; i < argc; ++i) inv.command += std::string(i > 1 ? " " : "") + argv[i];
    inv.report = report;
    auto start = std::chrono::steady_clock::now();
    char* out = nullptr;
    int rc = STAIRLAB_ERR_INTERNAL;
    bool raw_text = false;

    if (from_center->parsed()) {
        rc = stairlab_cmd_class_from_center(center_pq.c_str(), &out);
    } else if (apply->parsed()) {
        rc = stairlab_cmd_apply_sym(sym_word.c_str(), sym_pq.c_str(), &out);
    } else if (at->parsed()) {
        rc = stairlab_cmd_triple_at(at_label.c_str(), &out);
    } else if (mut->parsed()) {
        rc = stairlab_cmd_triple_mutate(mut_side.c_str(), mut_label.c_str(), &out);
    } else if (stair->parsed()) {
        rc = stairlab_cmd_staircase(st_label.c_str(), st_side.c_str(), st_count, &out);
    } else if (bz->parsed()) {
        int eps = bz_eps == "-1" ? -1 : +1;
        rc = stairlab_cmd_blocked_z(bz_value.c_str(), eps, bz_level, &out);
    } else if (bb->parsed()) {
        rc = stairlab_cmd_blocked_b(bb_value.c_str(), bb_level, &out);
    } else if (interval->parsed()) {
        rc = stairlab_cmd_interval(iv_label.c_str(), iv_tol.empty() ? nullptr : iv_tol.c_str(),
                                   &out);
    } else if (capacity->parsed()) {
        raw_text = cap_format == "csv";
        rc = stairlab_cmd_capacity(cap_b.c_str(), cap_from.c_str(), cap_to.c_str(), cap_samples,
                                   cap_pool, cap_special ? 1 : 0, cap_format.c_str(), &out);
    } else if (tree->parsed()) {
        rc = stairlab_cmd_tree(tr_n, tr_level, tr_sym.c_str(), tr_format.c_str(), &out);
    } else if (verify->parsed()) {
        rc = stairlab_cmd_verify(suite.c_str(), &out);
    }

    return finish(inv, rc, out, raw_text, start);
}
