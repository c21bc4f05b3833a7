#ifndef PTK_POLYLOG_HPP
#define PTK_POLYLOG_HPP

/*
 * p-adic polylogarithms ell_k on P^1 minus {0, 1, infinity}, on the branch
 * with log p = 0.
 *
 * The construction works through the Frobenius-smoothed combinations
 *
 *     F_k(z) = ell_k(z) - p^(-k) ell_k(z^p),
 *
 * which are rigid analytic on the affinoid |1-z| >= 1 and therefore have a
 * global expansion sum_m b_m w^m in the coordinate w = 1/(1-z).  F_1 is
 * p^(-1) log(w^p - (w-1)^p), an explicit convergent series, and each F_k is
 * the primitive of F_{k-1} dz/z that vanishes at z = 0; vanishing at z =
 * infinity (forced by the z -> 1/z antisymmetry of F_k) pins the remaining
 * constant and kills both logarithmic terms the integration step could
 * produce.  Residues at the two poles of dz/z are checked to vanish
 * numerically at each level.
 *
 * Values of ell_k itself are then recovered disk by disk: at a Teichmuller
 * point xi (xi^p = xi) the smoothing collapses to (1 - p^(-k)) ell_k(xi),
 * and the expansion of ell_k around xi follows by integrating ell_{k-1}/z
 * termwise with the constant term pinned at xi.  On v(z) >= 1 the defining
 * series sum z^n / n^k converges and is used directly.  Values at |z| > 1
 * come from the inversion formula.  The residue disk of 1 is not covered.
 */

#include <map>
#include <vector>

#include "ptk/padic_series.hpp"

namespace ptk {

// min over n >= q of (n - k * floor(log_p n)): the valuation floor of an
// omitted weight-k series tail starting at degree q, on the small disk
int tail_exponent_floor(long long q, int k, long long p);

class PolylogTable {
  public:
    PolylogTable(long long p, int prec, int kmax);

    long long prime() const { return p_; }
    int precision() const { return prec_; }
    int depth() const { return kmax_; }

    // ell_k(z) for z outside the residue disk of 1; ell_k(0) = 0
    PadicNumber ell(int k, const PadicNumber& z) const;

    // ell_k(z) - p^(-k) ell_k(z^p) evaluated through the global basis;
    // defined on |1-z| >= 1
    PadicNumber frobenius_smoothed(int k, const PadicNumber& z) const;

    // ell_k at the Teichmuller representative of disk a, 2 <= a <= p-1
    const PadicNumber& ell_at_teichmuller(int k, long long a) const;
    // expansion of ell_k on disk a (a = 0 or 2 <= a <= p-1)
    const PadicSeries& disk_series(int k, long long a) const;
    const PadicNumber& teichmuller_center(long long a) const;

    int series_length() const { return m_; }
    int basis_length() const { return h_; }
    // coefficient of w^m in the basis expansion of F_k
    const PadicNumber& basis_coeff(int k, int m) const;

  private:
    long long p_;
    int prec_, kmax_, h_, m_, wprec_;
    std::vector<std::vector<PadicNumber>> basis_;
    std::vector<int> basis_tail_;
    std::map<long long, PadicNumber> centers_;
    std::map<long long, std::vector<PadicNumber>> consts_;
    std::map<long long, std::vector<PadicSeries>> disks_;

    void build_basis();
    void build_disks();
    PadicNumber eval_basis(int k, const PadicNumber& w0) const;
    void check_range(int k) const;
};

} // namespace ptk

#endif
