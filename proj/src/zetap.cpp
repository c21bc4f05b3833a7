#include "ptk/zetap.hpp"

#include "ptk/padic_series.hpp"

namespace ptk {

namespace {

// C(m, j) for any integer m and j >= 0; always an integer.
Int falling_binomial(long long m, long long j) {
    Rat r = 1;
    for (long long i = 1; i <= j; ++i) r *= Rat(m - i + 1, i);
    if (denominator(r) != 1) throw domain_error("falling_binomial: not integral");
    return numerator(r);
}

} // namespace

PadicNumber lp_value(long long s, int chi_power, long long p, int prec, int f_mult) {
    if (!is_odd_prime(p)) throw domain_error("p must be an odd prime >= 3");
    if (prec < 1 || prec > 512) throw domain_error("precision out of range");
    if (s == 1) throw domain_error("L_p has a pole at s = 1");
    if (f_mult != 1 && f_mult != 2) throw domain_error("modulus must be p or 2p");

    int j = ((chi_power % (p - 1)) + (p - 1)) % static_cast<int>(p - 1);
    if (j % 2 == 1) return PadicNumber(p, prec, true);

    int vs = valuation_long(s - 1, p);
    int w = prec + vs + 6;
    long long jmax = prec + vs + 6;
    long long big_f = f_mult * p;

    BernoulliTable bern;
    PadicNumber total(p, 8 * PadicNumber::max_precision);
    for (long long a = 1; a <= big_f; ++a) {
        if (a % p == 0) continue;
        PadicNumber api = PadicNumber::from_integer(Int(a), p, w);
        PadicNumber chi = teichmuller(api).pow(j);
        PadicNumber angle = unit_angle(api).pow(1 - s);
        PadicNumber inner(p, 8 * PadicNumber::max_precision);
        for (long long i = 0; i <= jmax; ++i) {
            Rat r = Rat(falling_binomial(1 - s, i)) * bern.get(static_cast<int>(i)) *
                    Rat(pow_int(Int(big_f), static_cast<unsigned long>(i)),
                        pow_int(Int(a), static_cast<unsigned long>(i)));
            if (r == 0) continue;
            inner = inner + PadicNumber::from_rational(r, p, w);
        }
        total = total + chi * angle * inner;
    }
    PadicNumber value = total.div_int(Int(big_f) * Int(s - 1));
    return value.truncate(std::min(value.precision(), prec));
}

PadicNumber zeta_p(long long k, long long p, int prec, int f_mult) {
    if (k == 1) throw domain_error("zeta_p has a pole at k = 1");
    long long pw = 1 - k;
    return lp_value(k, static_cast<int>(((pw % (p - 1)) + (p - 1)) % (p - 1)), p,
                    prec, f_mult);
}

} // namespace ptk
