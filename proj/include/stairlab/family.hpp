#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stairlab/classes.hpp"

namespace stairlab {

/// Adjacency relation (p+q)(p'+q') - tt' = 8pq' with p/q < p'/q'; equivalent
/// to dd' - mm' = pq'.  Symmetric in its arguments; requires equal eps.
bool adjacent(const ClassTuple& a, const ClassTuple& b);

/// x^T A x' = 4 t'' for the form A of the class surface.  For adjacent pairs
/// this is |p'q - pq'| = t''.
bool t_compatible(const ClassTuple& a, const ClassTuple& b, const Int& tpp);

/// Ordered generating triple (left, mid, right); quasi marks condition (e)
/// waived (seed triads).
struct Triple {
    ClassTuple left, mid, right;
    bool quasi = false;
};

struct TripleDiagnostics {
    bool a = false; // left/right adjacent
    bool b = false; // left/mid adjacent and t_right-compatible
    bool c = false; // mid/right adjacent and t_left-compatible
    bool d = false; // t_l t_r - t_m = q_l p_r - p_l q_r
    bool e = false; // acc ordering of the slope ratios
    bool all() const { return a && b && c && d && e; }
    bool quasi_ok() const { return a && b && c && d; }
};

/// Evaluates conditions (a)-(e).  Condition (e) uses the exact equivalence
/// acc(m/d) > acc(m'/d') <=> t r' > t' r (with r = p+q), which also covers
/// the formal tuples.
TripleDiagnostics check_triple(const ClassTuple& l, const ClassTuple& m, const ClassTuple& r);

enum class MutationSide { x, y };

/// x: (l, t_l*m - r, m);  y: (m, t_r*m - l, r).  Requires (a)-(d); with
/// allow_quasi=false condition (e) is required as well.
Triple mutate(const Triple& t, MutationSide side, bool allow_quasi = true);

/// Componentwise recursion x_{k+1} = nu*x_k - x_{k-1} on (d,m,p,q,t).
/// Returns `count` classes starting with the two seeds; every produced tuple
/// is checked against the Diophantine identities.
std::vector<ClassTuple> generate_prestaircase(const ClassTuple& seed0, const ClassTuple& seed1,
                                              const Int& nu, size_t count);

/// Exact limit of x_k/y_k for x_{k+1} = nu*x_k - x_{k-1}, in Q(sqrt(nu^2-4)).
QuadSurd recursion_limit(const Int& x0, const Int& x1, const Int& y0, const Int& y1,
                         const Int& nu);

/// Symmetry word S^i R^delta acting on (p,q,t).
struct SymWord {
    Int i = 0;
    int delta = 0; // 0 or 1

    bool is_identity() const { return i == 0 && delta == 0; }
    /// True when the word preserves the order of centers on the z-axis.
    bool preserves_order() const { return delta == 0; }
    std::string str() const; // "id", "S", "S^2R", ...
};

SymWord parse_sym(const std::string& text);

/// Ternary label of a tree node: family n, symmetry, and an address that is
/// either digits over {0,2} followed by an implicit final 1 (middle classes)
/// or an endpoint token L/R.
struct Label {
    Int n = 0;
    SymWord sym;
    bool endpoint = false;
    bool endpoint_right = false; // valid when endpoint
    std::vector<int> digits;     // over {0,2}; excludes the final 1

    size_t level() const { return endpoint ? 0 : digits.size() + 1; }
    std::string address() const; // ".021", "L", "R"
    std::string str() const;     // "n=0 sym=id addr=.021"
};

Label parse_label(const std::string& text); // "0:.021", "0:L", "S^2R:1:.01"

/// Blocking class B^U_n = (n+3, n+2, 2n+6, 1, 2n+3, +1).
ClassTuple blocking_class_BU(const Int& n);
/// Shared first step with center [2n+7; 2n+4].
ClassTuple first_step_E1(const Int& n);
/// Base triple (B^U_n, E_[2n+7;2n+4], B^U_{n+1}).
Triple base_triple(const Int& n);
/// Formal seeds (1,1,1,1,2,+1) and (-2,0,-5,-1,2,+1).
ClassTuple lower_seed();
ClassTuple upper_seed();

/// The triple whose middle class carries the label; endpoint labels are
/// rejected (InvalidLabel).  Digits are applied left to right, 0 -> x and
/// 2 -> y, with the two mutations swapped under order-reversing symmetries.
Triple triple_at_label(const Label& lbl);

/// The class at a label (middle of its triple, or an endpoint class).
ClassTuple class_at_label(const Label& lbl);

/// Predecessor (middle of the parent triple) and the shared remaining vertex.
std::pair<Label, Label> pre_and_ppre(const Label& lbl);

/// Recursive CS-length: endpoints 1, level-one middle 2, otherwise
/// len(pre) + len(ppre).
Int cs_length(const Label& lbl);

enum class Direction { ascending, descending };

/// Steps of the non-principal pre-staircase selected by an infinite-address
/// prefix: ascending keeps indices k with a_k = 0, a_{k+1} = 2, descending
/// the dual.  Output centers are strictly monotone.
std::vector<ClassTuple> nonprincipal_steps(const Int& n, const std::vector<int>& digits,
                                           Direction dir);

/// One enumerated tree node.
struct TreeNode {
    Label label;
    ClassTuple cls;
    Triple triple; // for endpoints: the base triple of the family
    Int cs_len;
    int level; // endpoints 1, middle at address length k -> k+1
    std::string parent; // address of the parent middle ("" for level <= 2)
};

/// Breadth-first enumeration: endpoint classes first (level 1), then middle
/// classes by level, children x before y.  `level >= 1`; middles are
/// enumerated while address length + 1 <= level.
std::vector<TreeNode> enumerate_tree(const Int& n, int level, const SymWord& sym = SymWord{});

/// The two principal staircases attached to a label: for a middle class the
/// triple's own staircases (ascending seeds (l,m) with nu = t_r, descending
/// seeds (r,m) with nu = t_l); for endpoint classes the staircases that have
/// the endpoint as blocking class.
struct PrincipalStaircase {
    Direction dir;
    ClassTuple seed0, seed1;
    Int nu;
    ClassTuple blocking;
};

PrincipalStaircase staircase_at_label(const Label& lbl, Direction dir);

} // namespace stairlab
