#ifndef PTK_ZETAP_HPP
#define PTK_ZETAP_HPP

/*
 * Kubota-Leopoldt L-values at integer arguments, computed from the
 * convergent Bernoulli-weighted sum over residues modulo F with p | F.
 * Characters are powers of the Teichmuller character omega; odd powers give
 * the zero function and return exact zero.
 *
 * zeta_p(k) is the branch L_p(k, omega^(1-k)).  It vanishes at positive even
 * k, has a pole at k = 1 (domain_error), and at k = 1-n for even n >= 2
 * interpolates -(1 - p^(n-1)) B_n / n exactly.
 */

#include "ptk/bernoulli.hpp"
#include "ptk/padic.hpp"

namespace ptk {

// L_p(s, omega^chi_power) for integer s != 1.  f_mult in {1, 2} selects the
// auxiliary modulus F = f_mult * p; both give the same value.
PadicNumber lp_value(long long s, int chi_power, long long p, int prec,
                     int f_mult = 1);

PadicNumber zeta_p(long long k, long long p, int prec, int f_mult = 1);

} // namespace ptk

#endif
