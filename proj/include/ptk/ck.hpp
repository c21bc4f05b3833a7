#ifndef PTK_CK_HPP
#define PTK_CK_HPP

/*
 * Locating the S-unit points of P^1 minus {0, 1, infinity} inside its
 * p-adic points, for p outside S.
 *
 * A solution of x + y = 1 in S-units has v_p(x) = v_p(1-x) = 0, so all
 * solutions land in the unit residue disks away from 0 and 1.  On those
 * disks the depth-two function
 *
 *     f_2(z) = ell_2(z) + (1/2) log z log(1-z)
 *
 * and, at depth four (enough for S = {2}),
 *
 *     f_4(z) = zeta_p(3) ell_4(z) + (8/7) c log z ell_3(z)
 *              + ((4/21) c + zeta_p(3)/24) (log z)^3 log(1-z),
 *     c = (log 2)^3 / 24 + ell_4(1/2) / log 2,
 *
 * are locally analytic, vanish on the S-unit points for S = {2}, and have
 * finitely many zeros, so the point search reduces to disk-by-disk root
 * finding on explicit power series.  Zeros that match no supplied candidate
 * are reported as extras; subdisks the root finder cannot resolve are
 * reported as undecided rather than dropped.
 */

#include <map>
#include <optional>
#include <vector>

#include "ptk/padic_series.hpp"
#include "ptk/polylog.hpp"

namespace ptk {

// A function given by one convergent expansion per unit residue disk.
struct LocallyAnalyticFunction {
    long long p = 0;
    int prec = 0;
    int depth = 0;
    std::map<long long, PadicSeries> pieces; // residue disk -> expansion

    // Dispatches on the residue disk of z; z must be a unit in a covered disk.
    PadicNumber evaluate(const PadicNumber& z) const;
};

// The vanishing functions above, expanded on every disk the table covers.
LocallyAnalyticFunction depth_two_function(const PolylogTable& table);
LocallyAnalyticFunction depth_four_function(const PolylogTable& table);

struct DiskZeros {
    long long disk = 0;
    std::vector<PadicNumber> zeros;
    std::vector<PadicNumber> undecided; // centers of unresolved subdisks
};

std::vector<DiskZeros> find_zeros(const LocallyAnalyticFunction& f,
                                  int depth_budget = 48);

// All z with z and 1-z both units of Z[1/s_1...1/s_r], enumerated over
// exponent vectors bounded by `bound`.
std::vector<Rat> s_unit_points(const std::vector<long long>& s, int bound);

struct CandidateMatch {
    Rat value;
    long long disk = -1; // residue disk at p, or -1 when not a p-unit
    bool found = false;
    std::optional<PadicNumber> zero; // the matching zero when found
};

struct SolveReport {
    long long p = 0;
    int prec = 0;
    int depth = 0;
    std::vector<DiskZeros> disks;
    std::vector<CandidateMatch> candidates;
    std::vector<PadicNumber> extras; // zeros matching no candidate
};

// End-to-end search: build the depth-2 or depth-4 function at working
// precision prec + 8, find all zeros, and match them against the candidate
// rationals at precision prec - slack.
SolveReport solve_unit_equation(long long p, int prec, int depth,
                                const std::vector<Rat>& candidates,
                                int slack = 3);

} // namespace ptk

#endif
