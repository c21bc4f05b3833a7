#ifndef PTK_PADIC_SERIES_HPP
#define PTK_PADIC_SERIES_HPP

/*
 * Truncated power series over Q_p in a local coordinate u around a center,
 * intended for evaluation on the small disk v(u) >= 1.
 *
 * A series keeps finitely many coefficients a_0..a_{M} plus a tail exponent
 * T certifying that every omitted term satisfies v(a_n) + n >= T, so that on
 * v(u) >= 1 the omitted remainder is O(p^T).  Polynomials carry T = infinity.
 * Arithmetic propagates both the per-coefficient precision and the tail
 * exponent.  Termwise antidifferentiation of an unknown tail has no p-adic
 * bound at all, so integrate() insists on a polynomial; callers that know an
 * analytic bound for the full series attach it afterwards with with_tail().
 */

#include <vector>

#include "ptk/padic.hpp"

namespace ptk {

Int binomial_int(long long n, long long k);

class PadicSeries {
  public:
    static constexpr int tail_infinity = 1 << 28;

    PadicSeries(PadicNumber center, std::vector<PadicNumber> coeffs,
                int tail = tail_infinity);

    long long prime() const { return p_; }
    const PadicNumber& center() const { return center_; }
    int length() const { return static_cast<int>(coeffs_.size()); }
    int degree() const { return length() - 1; }
    // a_n; zero (to the tail bound) beyond the stored range
    PadicNumber coeff(int n) const;
    int tail() const { return tail_; }

    // Replaces the tail exponent with a caller-proven analytic bound.
    PadicSeries with_tail(int t) const;
    // Forgets the tail: the stored terms reinterpreted as an exact polynomial.
    PadicSeries stored_polynomial() const;
    // Drops terms above max_deg, folding them into the tail exponent.
    PadicSeries truncated(int max_deg) const;

    PadicSeries operator-() const;
    PadicSeries operator+(const PadicSeries& g) const;
    PadicSeries operator-(const PadicSeries& g) const;
    PadicSeries operator*(const PadicSeries& g) const;
    PadicSeries operator*(const PadicNumber& s) const;

    PadicSeries derivative() const;
    // Antiderivative with zero constant term; requires an infinite tail.
    PadicSeries integrate() const;
    // u -> s*u with v(s) >= 0.
    PadicSeries scale_variable(const PadicNumber& s) const;

    // Valuation lower bound for values on v(u) >= 1.
    int value_floor() const;

    // Evaluation at v(u) >= 1; the tail caps the result precision.
    PadicNumber evaluate(const PadicNumber& u) const;
    // Same, with u = z - center.
    PadicNumber evaluate_at_point(const PadicNumber& z) const;

  private:
    long long p_;
    PadicNumber center_;
    std::vector<PadicNumber> coeffs_;
    int tail_;
};

/*
 * All roots of a polynomial sum c_i t^i in Z_p, coefficients carried at
 * finite precision.  Residue roots where the reduced derivative does not
 * vanish are lifted by Newton iteration and come back with absolute
 * precision N - v(f'(root)).  Repeated residue roots are split recursively
 * on subdisks; where the carried precision or the depth budget cannot
 * separate root behavior, the whole subdisk is reported as undecided rather
 * than silently dropped.
 */
struct RootFindReport {
    std::vector<PadicNumber> roots;
    // centers of subdisks (precision = known digits) the search could not decide
    std::vector<PadicNumber> undecided;
};

RootFindReport hensel_roots(const std::vector<PadicNumber>& poly, int depth_budget = 48);

// Roots of a series on the closed subdisk v(u) >= 1 of its coordinate,
// reported in the u coordinate.  The tail exponent caps usable precision.
RootFindReport disk_roots(const PadicSeries& f, int depth_budget = 48);

PadicNumber eval_poly(const std::vector<PadicNumber>& poly, const PadicNumber& t);

} // namespace ptk

#endif
