#pragma once

#include <json.hpp>

#include "stairlab/block.hpp"

namespace stairlab {

using json = nlohmann::ordered_json;

// Big integers are serialized as strings so values survive any JSON parser.
json to_json(const QuadSurd& s, int digits = 12);
QuadSurd surd_from_json(const json& j);

json to_json(const ClassTuple& c);
ClassTuple class_from_json(const json& j);
ClassTuple parse_class(const std::string& text); // "(14,9,29,4,13,+1)"

json to_json(const ExcVector& v);
ExcVector exc_from_json(const json& j);

json to_json(const Triple& t);
json to_json(const BlockedInterval& iv, int digits = 12);
json to_json(const TreeNode& node, int digits = 12);

json tree_to_json(const Int& n, int level, const SymWord& sym, int digits = 12);

struct ProfileOptions {
    Rat b;
    Rat z_from, z_to;
    int samples = 100;
    int pool_level = 4;
    bool include_special = false; // adds the class 3L - E_0 - 2E_1 - E_{2..6}
    int digits = 12;
};

/// Capacity profile rows over a rational grid, with the exact centers of
/// in-range pool classes inserted so corners land on sampled points.
json profile_to_json(const ProfileOptions& opt);
std::string profile_to_csv(const ProfileOptions& opt);

} // namespace stairlab
