#pragma once

#include <string>
#include <vector>

#include "stairlab/cf.hpp"
#include "stairlab/surd.hpp"

namespace stairlab {

/// Quasi-perfect class tuple (d,m,p,q,t,eps).
///
/// Every instance satisfies the three Diophantine identities
///   t^2 = p^2 - 6pq + q^2 + 8,   3d = m + p + q,   d^2 - m^2 = pq - 1.
/// Geometric tuples additionally have p > q >= 1, d >= 1, m >= 0 and
/// eps = +1 exactly when 3m > d; tuples violating the positivity part are
/// marked `formal` and excluded from geometric predicates.
struct ClassTuple {
    Int d, m, p, q, t;
    int eps = +1;
    bool formal = false;

    ClassTuple() : d(0), m(0), p(0), q(0), t(0) {}
    ClassTuple(Int d, Int m, Int p, Int q, Int t, int eps);

    Rat center() const;      // p/q, requires q != 0
    Rat slope_ratio() const; // m/d, requires d != 0

    bool operator==(const ClassTuple& rhs) const {
        return d == rhs.d && m == rhs.m && p == rhs.p && q == rhs.q && t == rhs.t &&
               eps == rhs.eps;
    }

    std::string str() const; // "(14,9,29,4,13,+1)"
};

/// Homology-class coefficient vector (deg; m, m_1, ..., m_n).
/// coeffs[0] is the blowup coefficient m; the rest are the ball weights.
struct ExcVector {
    Int deg;
    std::vector<Int> coeffs;

    std::string str() const;
};

/// The unique quasi-perfect tuple with center p/q, or NotQuasiPerfect.
ClassTuple class_from_center(const Int& p, const Int& q);
ClassTuple class_from_center(const Rat& z);

/// (d; m, W(p/q)); non-coprime (p,q) scale the reduced weight expansion.
ExcVector exc_vector(const ClassTuple& c);

/// deg*deg' - sum coeffs_i * coeffs'_i, shorter list zero-padded.
Int intersection(const ExcVector& v, const ExcVector& w);

struct CremonaResult {
    ExcVector terminal;
    Int steps;
    bool exceptional;
};

/// Repeated Cremona moves: sort coefficients descending, defect
/// delta = deg - (c1+c2+c3); while delta < 0 add delta to deg and the three
/// largest coefficients.  Terminal (0; -1, 0, ...) up to permutation means
/// the class is exceptional.
CremonaResult cremona_reduce(const ExcVector& v);

/// Necessary-condition screen: nonnegative intersection with every pool member.
bool perfectness_screen(const ClassTuple& c, const std::vector<ExcVector>& pool);

/// Accumulation point: the root > 1 of z^2 - ((3-b)^2/(1-b^2) - 2) z + 1 = 0.
QuadSurd acc(const Rat& b);
/// Same, for an exact surd b on which the coefficient happens to be rational.
QuadSurd acc(const QuadSurd& b);

/// Inverse branch: with w = z + 1/z + 2, b = (3 + eps*sqrt(w^2-8w))/(1+w).
QuadSurd acc_inv(const Rat& z, int eps);
QuadSurd acc_inv_surd(const QuadSurd& z, int eps);

/// Volume bound sqrt(z/(1-b^2)), exact.
QuadSurd volume(const Rat& b, const Rat& z);

/// Obstruction at a rational b: qz/(d-mb) left of the center, p/(d-mb) right.
Rat obstruction_mu(const ClassTuple& c, const Rat& b, const Rat& z);
QuadSurd obstruction_mu(const ClassTuple& c, const QuadSurd& b, const Rat& z);

/// General form for an arbitrary coefficient vector:
/// <(m_1,...), W(z)> / (q_z * (deg - m b)).
Rat obstruction_mu(const ExcVector& v, const Rat& b, const Rat& z);

/// |bd - m| < sqrt(1 - b^2), decided by squaring.
bool obstructive_at_center(const ClassTuple& c, const Rat& b);

} // namespace stairlab
