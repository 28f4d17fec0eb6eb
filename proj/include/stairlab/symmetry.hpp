#pragma once

#include <optional>

#include "stairlab/family.hpp"

namespace stairlab {

/// Image of a class under S^i R^delta: (p,q) through the matrices, t fixed,
/// eps negated per generator, (d,m) recomputed.  With check_domain, R
/// requires the center to be > 6 (p > 6q), the center-6 case falling back to
/// the formal tuple.
ClassTuple apply_sym(const SymWord& w, const ClassTuple& c, bool check_domain = true);

/// Entrywise image; R reverses the entry order.  Output must satisfy at
/// least the quasi-triple conditions.
Triple apply_sym_triple(const SymWord& w, const Triple& t, bool check_domain = true);

/// y_0 = 0, y_1 = 1, y_{i+1} = 6 y_i - y_{i-1}.
Int y_seq(const Int& i);
/// v_i = y_i / y_{i-1}; v_1 is the point at infinity (nullopt).
std::optional<Rat> v_seq(const Int& i);
/// w_i = (y_{i+1} + y_i)/(y_i + y_{i-1}); w_1 = 7, w_2 = 41/7, ...
Rat w_seq(const Int& i);

/// b_{eps,i+1} = (y_{i+1} + y_i + 3 eps)/(3 y_{i+1} + 3 y_i + eps), defined
/// when eps = (-1)^i; acc of it is v_{i+1} exactly.
Rat special_b(int eps, const Int& i);

/// Step i >= 1 of the third strand at b = 1/3: center g_i/g_{i-1} with
/// g_i = y_{i+1} - y_i, t = 2, eps = (-1)^i.
ClassTuple third_strand(const Int& i);

/// z where the flat obstruction of c meets the line (1+z)/(3-b).
Rat z_crossing(const ClassTuple& c, const Rat& b);

/// Coefficientwise identity in b behind the no-ascending-staircase argument,
/// with the 1/16 normalization; returns false if any coefficient differs.
bool noasc_identity(const Int& i);

/// (d,m,p,q,t) -> (m+3Q, d+Q, p-q+5Q, Q, p+q) with Q = (p-q-t)/2.
ClassTuple a_sharp(const ClassTuple& c);

} // namespace stairlab
