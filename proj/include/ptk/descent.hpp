#ifndef PTK_DESCENT_HPP
#define PTK_DESCENT_HPP

/*
 * Rank bounds for elliptic curves y^2 = x(x^2 + ax + b) with integer
 * coefficients, by descent through the rational 2-isogeny.  The upper
 * bound comes from local solvability of the quartic spaces
 * w^2 = d M^4 + a M^2 e^2 + (b/d) e^4 over the squarefree divisors d of b,
 * for the curve and its partner y^2 = x(x^2 - 2ax + (a^2 - 4b)); the lower
 * bound comes from a height-limited point search.
 */

#include <string>
#include <vector>

#include "ptk/padic.hpp"

namespace ptk {

struct CurveModel {
    Int a, b;

    CurveModel(Int a_, Int b_);

    // the 2-isogenous curve y^2 = x(x^2 - 2ax + (a^2 - 4b))
    CurveModel partner() const;
};

struct CurvePoint {
    bool infinite = true;
    Rat x, y;

    static CurvePoint origin() { return CurvePoint{}; }
    static CurvePoint affine(Rat x, Rat y);

    bool operator==(const CurvePoint& o) const;
};

bool on_curve(const CurveModel& e, const CurvePoint& p);

// log sup{|s|, |t|, |r|} for the point written (s/r, t/r) in lowest terms;
// the height of the origin is zero
double naive_height(const CurveModel& e, const CurvePoint& p);

// all points whose naive height is at most the bound, origin included,
// sorted by height, then x, then decreasing y
std::vector<CurvePoint> point_search(const CurveModel& e, double height_bound);

CurvePoint negate_point(const CurveModel& e, const CurvePoint& p);
CurvePoint add_points(const CurveModel& e, const CurvePoint& p, const CurvePoint& q);

// decided by the first twelve multiples
bool is_torsion(const CurveModel& e, const CurvePoint& p);

// image of the point in Q^x modulo squares: the squarefree part of x,
// with the origin mapping to 1 and (0, 0) to the class of b
Int square_class(const CurveModel& e, const CurvePoint& p);

// whether w^2 = d M^4 + a M^2 e^2 + (b/d) e^4 has a nontrivial point over
// R (place = 0) or over Q_p (place = p); requires squarefree d dividing b.
// Throws precision_error when the disk recursion cannot decide.
bool local_solvable(const CurveModel& e, const Int& d, const Int& place);

// squarefree divisor classes passing every local test, at the real place
// and at the primes dividing 2b(a^2 - 4b); undecided classes are kept
// separately and still count toward the bound
struct SelmerSet {
    std::vector<Int> classes;
    std::vector<Int> undecided;
    int dim2() const;
};
SelmerSet selmer_set(const CurveModel& e);

// dim2 for the curve plus dim2 for the partner, minus two
int two_descent_bound(const CurveModel& e);

struct DescentReport {
    Int a, b;
    int selmer_upper_bound = 0;
    int rank_lower_bound = 0;
    bool rank_determined = false;
    bool flagged = false; // an undecided local test weakened the upper bound
    std::vector<CurvePoint> points_found;
    std::vector<double> heights; // parallel to points_found
    std::vector<CurvePoint> generators;
    SelmerSet selmer, partner_selmer;

    const char* verdict() const { return rank_determined ? "rank-determined" : "gap-remains"; }
};

// searches at increasing height up to max_height, stopping as soon as the
// point-derived lower bound meets the local upper bound
DescentReport conditional_rank(const CurveModel& e, double max_height);

} // namespace ptk

#endif
