#ifndef PTK_PADIC_HPP
#define PTK_PADIC_HPP

/*
 * Elements of Q_p carried at a finite absolute precision O(p^N).
 *
 * A nonzero value is stored as p^v * u where v is the valuation and u is a
 * unit residue modulo p^(N-v), so exactly N-v unit digits are known.  Zero
 * is a distinguished state: "no nonzero digit below p^N", with an extra flag
 * recording whether the value is exactly zero (as opposed to merely
 * indistinguishable from zero at this precision).
 *
 * Precision propagates through arithmetic by the usual ultrametric rules:
 *   N(x+y)  = min(N_x, N_y)
 *   N(x*y)  = min(N_x + v_y, N_y + v_x)
 * and inversion of p^v*u yields absolute precision N - 2v.  All operations
 * are pure; values are immutable.
 */

#include <string>
#include <boost/multiprecision/cpp_int.hpp>

#include "ptk/errors.hpp"

namespace ptk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_odd_prime(long long p);
Int pow_int(Int base, unsigned long e);
Int p_power(long long p, int k);
// Inverse of a mod m, m > 1, gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);
// Largest k with p^k | n, for n != 0.
int valuation_int(Int n, long long p);
int valuation_long(long long n, long long p);

class PadicNumber {
  public:
    static constexpr int max_precision = 2048;

    // Zero at O(p^N).
    PadicNumber(long long p, int abs_precision, bool exact = false);

    static PadicNumber from_integer(const Int& n, long long p, int abs_precision);
    static PadicNumber from_rational(const Int& num, const Int& den, long long p,
                                     int abs_precision);
    static PadicNumber from_rational(const Rat& r, long long p, int abs_precision);
    // p^v * u known mod p^(abs_precision - v); u is reduced and may carry
    // extra powers of p, which are folded into v.
    static PadicNumber from_unit_part(long long p, int v, const Int& u,
                                      int abs_precision);
    static PadicNumber one(long long p, int abs_precision);

    long long prime() const { return p_; }
    int precision() const { return prec_; }
    bool is_zero() const { return unit_ == 0; }
    bool is_exact_zero() const { return unit_ == 0 && exact_zero_; }
    // Valuation; for the zero state this is the declared precision, i.e. the
    // best known lower bound.
    int valuation() const { return v_; }
    const Int& unit() const { return unit_; }
    bool is_unit() const { return !is_zero() && v_ == 0; }

    // Value mod p^k as an integer in [0, p^k); requires v >= 0 and k <= N.
    Int residue(int k) const;
    // First significant digit; requires a unit.
    long long residue_disk() const;
    // True when |x|_p <= p^(-k), i.e. the value is zero mod p^k and the
    // precision is sufficient to assert it.
    bool zero_to(int k) const;
    bool agrees_with(const PadicNumber& other, int k) const;
    // Same value to the common precision.
    bool operator==(const PadicNumber& other) const;
    bool operator!=(const PadicNumber& other) const { return !(*this == other); }

    // Reduce to a lower absolute precision; a no-op when already coarser.
    PadicNumber truncate(int abs_precision) const;

    // Multiplication and division by exact integers; unlike operator* these
    // never cost relative precision, and stray powers of p shift v.
    PadicNumber times_int(const Int& k) const;
    PadicNumber div_int(const Int& k) const;

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& y) const;
    PadicNumber operator-(const PadicNumber& y) const;
    PadicNumber operator*(const PadicNumber& y) const;
    PadicNumber operator/(const PadicNumber& y) const;
    PadicNumber inverse() const;
    PadicNumber pow(long long e) const;

    // Canonical rendering: a_0 + a_1*p + ... + O(p^N), nonzero digits only;
    // negative valuation uses a p^v*( ... ) prefix around the unit digits.
    std::string str() const;
    static PadicNumber parse(const std::string& text, long long p);

  private:
    long long p_;
    int v_;
    int prec_;
    Int unit_;
    bool exact_zero_ = false;

    PadicNumber() : p_(0), v_(0), prec_(0), unit_(0) {}
    void check_same_field(const PadicNumber& y) const;
};

// teichmuller() lifts the first digit of a unit to the (p-1)-st root of
// unity congruent to it; unit_angle() is the complementary factor, a
// one-unit.
PadicNumber teichmuller(const PadicNumber& x);
PadicNumber unit_angle(const PadicNumber& x); // <x> = x * p^-v / teichmuller(x)

// Iwasawa branch: log p = 0, log vanishes on roots of unity.
PadicNumber log_iwasawa(const PadicNumber& x);
// Exponential, convergent for v(x) >= 1 (p odd).
PadicNumber exp_p(const PadicNumber& x);

} // namespace ptk

#endif
