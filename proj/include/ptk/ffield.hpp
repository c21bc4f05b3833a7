#ifndef PTK_FFIELD_HPP
#define PTK_FFIELD_HPP

/*
 * Small finite fields F_{q^m} for prime q, built as F_q[x] modulo the
 * first irreducible monic polynomial of degree m in lexicographic order.
 * Elements are encoded as integers in [0, q^m): the base-q digits are the
 * polynomial coefficients, least significant first.
 */

#include <vector>

namespace ptk {

class SmallField {
public:
    SmallField(long long q, int m);

    long long characteristic() const { return q_; }
    int degree() const { return m_; }
    long long size() const { return size_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    long long add(long long x, long long y) const;
    long long neg(long long x) const;
    long long mul(long long x, long long y) const;
    long long pow(long long x, long long e) const;
    long long frobenius(long long x) const { return pow(x, q_); }

private:
    long long q_ = 2;
    int m_ = 1;
    long long size_ = 2;
    std::vector<long long> modulus_;
};

struct KummerReport {
    long long q = 0;
    long long n = 0;
    int m = 0;
    long long mu_order = 0;   // number of n-th roots of unity in F_{q^m}
    long long h1_order = 0;   // classes of cocycles for the Frobenius action
    long long unit_index = 0; // order of F_q^x modulo n-th powers, by direct count
};

// H^1 of the cyclic Galois group of F_{q^m} over F_q acting on the n-th
// roots of unity, compared against the group of units modulo n-th powers.
KummerReport kummer_h1(long long q, long long n, int m);

} // namespace ptk

#endif
