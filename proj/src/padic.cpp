#include "ptk/padic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ptk {

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Int p_power(long long p, int k) {
    if (k < 0) throw domain_error("p_power: negative exponent");
    return pow_int(Int(p), static_cast<unsigned long>(k));
}

Int inv_mod(const Int& a, const Int& m) {
    // Extended Euclid; requires gcd(a, m) = 1.
    Int r0 = m, r1 = ((a % m) + m) % m;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw domain_error("inv_mod: not invertible");
    return ((t0 % m) + m) % m;
}

int valuation_int(Int n, long long p) {
    if (n == 0) throw domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

int valuation_long(long long n, long long p) {
    return valuation_int(Int(n), p);
}

namespace {

// Absolute precision may go nonpositive for deep negative valuations, so the
// internal range check is symmetric; user entry points demand N >= 1.
void check_prime_prec(long long p, int prec) {
    if (!is_odd_prime(p)) throw domain_error("p must be an odd prime >= 3");
    if (prec < -8 * PadicNumber::max_precision || prec > 8 * PadicNumber::max_precision)
        throw domain_error("precision out of range");
}

void check_user_prec(int prec) {
    if (prec < 1 || prec > PadicNumber::max_precision)
        throw domain_error("precision out of range");
}

} // namespace

PadicNumber::PadicNumber(long long p, int abs_precision, bool exact)
    : p_(p), v_(abs_precision), prec_(abs_precision), unit_(0), exact_zero_(exact) {
    check_prime_prec(p, abs_precision);
}

PadicNumber PadicNumber::from_unit_part(long long p, int v, const Int& u,
                                        int abs_precision) {
    check_prime_prec(p, abs_precision);
    PadicNumber x;
    x.p_ = p;
    x.prec_ = abs_precision;
    int rel = abs_precision - v;
    if (rel <= 0) {
        x.v_ = abs_precision;
        x.unit_ = 0;
        return x;
    }
    Int mod = p_power(p, rel);
    Int w = ((u % mod) + mod) % mod;
    if (w == 0) {
        x.v_ = abs_precision;
        x.unit_ = 0;
        return x;
    }
    int extra = valuation_int(w, p);
    v += extra;
    rel -= extra;
    x.v_ = v;
    x.unit_ = (w / p_power(p, extra)) % p_power(p, rel);
    return x;
}

PadicNumber PadicNumber::from_integer(const Int& n, long long p, int abs_precision) {
    check_user_prec(abs_precision);
    if (n == 0) return PadicNumber(p, abs_precision, true);
    return from_unit_part(p, 0, n, abs_precision);
}

PadicNumber PadicNumber::from_rational(const Int& num, const Int& den, long long p,
                                       int abs_precision) {
    check_prime_prec(p, abs_precision);
    check_user_prec(abs_precision);
    if (den == 0) throw domain_error("from_rational: zero denominator");
    if (num == 0) return PadicNumber(p, abs_precision, true);
    int vn = valuation_int(num, p);
    int vd = valuation_int(den, p);
    int v = vn - vd;
    int rel = abs_precision - v;
    if (rel <= 0) return PadicNumber(p, abs_precision);
    Int mod = p_power(p, rel);
    Int a = (num / p_power(p, vn)) % mod;
    Int b = (den / p_power(p, vd)) % mod;
    a = ((a % mod) + mod) % mod;
    b = ((b % mod) + mod) % mod;
    return from_unit_part(p, v, a * inv_mod(b, mod), abs_precision);
}

PadicNumber PadicNumber::from_rational(const Rat& r, long long p, int abs_precision) {
    return from_rational(numerator(r), denominator(r), p, abs_precision);
}

PadicNumber PadicNumber::one(long long p, int abs_precision) {
    return from_unit_part(p, 0, 1, abs_precision);
}

void PadicNumber::check_same_field(const PadicNumber& y) const {
    if (p_ != y.p_) throw domain_error("mixed primes");
}

Int PadicNumber::residue(int k) const {
    if (k < 0) throw domain_error("residue: negative modulus exponent");
    if (k > prec_) throw precision_error("residue: beyond known precision");
    if (is_zero()) return 0;
    if (v_ < 0) throw domain_error("residue: negative valuation");
    if (v_ >= k) return 0;
    return (unit_ * p_power(p_, v_)) % p_power(p_, k);
}

long long PadicNumber::residue_disk() const {
    if (!is_unit()) throw domain_error("residue_disk: not a unit");
    return static_cast<long long>(unit_ % p_);
}

bool PadicNumber::zero_to(int k) const {
    if (is_zero()) return prec_ >= k;
    return v_ >= k;
}

bool PadicNumber::agrees_with(const PadicNumber& other, int k) const {
    check_same_field(other);
    return (*this - other).zero_to(k);
}

bool PadicNumber::operator==(const PadicNumber& other) const {
    check_same_field(other);
    return agrees_with(other, std::min(prec_, other.prec_));
}

PadicNumber PadicNumber::truncate(int abs_precision) const {
    if (abs_precision >= prec_) return *this;
    if (abs_precision < -8 * max_precision)
        throw domain_error("truncate: precision out of range");
    if (is_zero()) {
        PadicNumber z(p_, abs_precision);
        z.exact_zero_ = exact_zero_;
        return z;
    }
    return from_unit_part(p_, v_, unit_, abs_precision);
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    Int mod = p_power(p_, prec_ - v_);
    PadicNumber r = *this;
    r.unit_ = mod - unit_;
    return r;
}

PadicNumber PadicNumber::operator+(const PadicNumber& y) const {
    check_same_field(y);
    int target = std::min(prec_, y.prec_);
    if (is_zero() && y.is_zero()) {
        PadicNumber z(p_, target);
        z.exact_zero_ = exact_zero_ && y.exact_zero_;
        return z;
    }
    int m = std::min(v_, y.v_);
    int rel = target - m;
    if (rel <= 0) return PadicNumber(p_, target);
    Int mod = p_power(p_, rel);
    Int s = 0;
    if (!is_zero()) s += unit_ * p_power(p_, v_ - m);
    if (!y.is_zero()) s += y.unit_ * p_power(p_, y.v_ - m);
    return from_unit_part(p_, m, s % mod, target);
}

PadicNumber PadicNumber::operator-(const PadicNumber& y) const {
    return *this + (-y);
}

PadicNumber PadicNumber::operator*(const PadicNumber& y) const {
    check_same_field(y);
    long long nstar = std::min<long long>(static_cast<long long>(prec_) + y.v_,
                                          static_cast<long long>(y.prec_) + v_);
    nstar = std::clamp<long long>(nstar, -8 * max_precision, 8 * max_precision);
    int target = static_cast<int>(nstar);
    if (is_zero() || y.is_zero()) {
        PadicNumber z(p_, target);
        z.exact_zero_ = exact_zero_ || y.exact_zero_;
        return z;
    }
    int v = v_ + y.v_;
    int rel = target - v;
    // rel = min of the operands' relative precisions, which is >= 1 here
    Int mod = p_power(p_, rel);
    PadicNumber r;
    r.p_ = p_;
    r.v_ = v;
    r.prec_ = target;
    r.unit_ = (unit_ * y.unit_) % mod;
    return r;
}

PadicNumber PadicNumber::times_int(const Int& k) const {
    if (k == 0) {
        PadicNumber z(p_, prec_);
        z.exact_zero_ = true;
        return z;
    }
    int vk = valuation_int(k, p_);
    int target = std::min(prec_ + vk, 8 * max_precision);
    if (is_zero()) {
        PadicNumber z(p_, target);
        z.exact_zero_ = exact_zero_;
        return z;
    }
    Int mod = p_power(p_, prec_ - v_);
    Int ku = ((k / p_power(p_, vk)) % mod + mod) % mod;
    return from_unit_part(p_, v_ + vk, unit_ * ku, target);
}

PadicNumber PadicNumber::div_int(const Int& k) const {
    if (k == 0) throw domain_error("div_int: division by zero");
    int vk = valuation_int(k, p_);
    int target = std::max(prec_ - vk, -8 * max_precision);
    if (is_zero()) {
        PadicNumber z(p_, target);
        z.exact_zero_ = exact_zero_;
        return z;
    }
    Int mod = p_power(p_, prec_ - v_);
    Int ku = ((k / p_power(p_, vk)) % mod + mod) % mod;
    return from_unit_part(p_, v_ - vk, unit_ * inv_mod(ku, mod), target);
}

PadicNumber PadicNumber::inverse() const {
    if (is_zero()) {
        if (exact_zero_) throw domain_error("inverse of zero");
        throw precision_error("inverse of a value indistinguishable from zero");
    }
    int rel = prec_ - v_;
    PadicNumber r;
    r.p_ = p_;
    r.v_ = -v_;
    r.prec_ = rel - v_; // N - 2v
    r.unit_ = inv_mod(unit_, p_power(p_, rel));
    return r;
}

PadicNumber PadicNumber::operator/(const PadicNumber& y) const {
    check_same_field(y);
    return *this * y.inverse();
}

PadicNumber PadicNumber::pow(long long e) const {
    if (e == 0) return one(p_, prec_ - std::min(0, v_));
    if (e < 0) return inverse().pow(-e);
    PadicNumber base = *this;
    PadicNumber acc = base;
    --e;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string PadicNumber::str() const {
    std::ostringstream out;
    auto pterm = [&](const Int& digit, int k) {
        if (k == 0) { out << digit; return; }
        out << digit << "*" << p_;
        if (k > 1) out << "^" << k;
    };
    if (is_zero()) {
        out << "0 + O(" << p_ << "^" << prec_ << ")";
        return out.str();
    }
    if (v_ < 0) out << p_ << "^" << v_ << "*(";
    // digits of the unit for v < 0, of the value itself otherwise
    Int rest = (v_ < 0) ? unit_ : unit_ * p_power(p_, v_);
    int top = (v_ < 0) ? prec_ - v_ : prec_;
    bool first = true;
    for (int k = 0; k < top && rest != 0; ++k) {
        Int digit = rest % p_;
        rest /= p_;
        if (digit == 0) continue;
        if (!first) out << " + ";
        pterm(digit, k);
        first = false;
    }
    if (!first) out << " + ";
    out << "O(" << p_ << "^" << top << ")";
    if (v_ < 0) out << ")";
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    long long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (!peek_digit()) throw domain_error("parse: integer expected");
        long long n = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            n = n * 10 + (s[i] - '0');
            if (n > (1LL << 58)) throw domain_error("parse: integer too large");
            ++i;
        }
        return neg ? -n : n;
    }
};

} // namespace

PadicNumber PadicNumber::parse(const std::string& text, long long p) {
    Cursor c{text};
    long long shift = 0;
    size_t mark = c.i;
    // optional p^v*( ... ) prefix
    {
        c.skip();
        size_t save = c.i;
        bool prefixed = false;
        if (c.peek_digit()) {
            long long base = c.integer();
            if (c.eat('^')) {
                long long e = c.integer();
                if (c.eat('*') && c.eat('(')) {
                    if (base != p) throw domain_error("parse: wrong prime");
                    shift = e;
                    prefixed = true;
                }
            }
            if (!prefixed) c.i = save;
        }
        (void)mark;
        Int value = 0;
        int big_o = -1;
        bool done = false;
        while (!done) {
            c.skip();
            if (c.i < c.s.size() && c.s[c.i] == 'O') {
                ++c.i;
                if (!c.eat('(')) throw domain_error("parse: malformed O(...)");
                long long base = c.integer();
                if (base != p) throw domain_error("parse: wrong prime");
                long long n = 1;
                if (c.eat('^')) n = c.integer();
                if (!c.eat(')')) throw domain_error("parse: malformed O(...)");
                if (n < 1 || n > max_precision) throw domain_error("parse: precision out of range");
                big_o = static_cast<int>(n);
                done = true;
            } else {
                long long d = c.integer();
                if (d < 0 || d >= p) throw domain_error("parse: digit out of range");
                long long k = 0;
                if (c.eat('*')) {
                    long long base = c.integer();
                    if (base != p) throw domain_error("parse: wrong prime");
                    k = 1;
                    if (c.eat('^')) k = c.integer();
                    if (k < 0 || k > max_precision) throw domain_error("parse: exponent out of range");
                }
                value += Int(d) * p_power(p, static_cast<int>(k));
            }
            if (!done && !c.eat('+')) throw domain_error("parse: '+' expected");
        }
        if (shift != 0 && !c.eat(')')) throw domain_error("parse: ')' expected");
        c.skip();
        if (c.i != c.s.size()) throw domain_error("parse: trailing input");
        long long abs_prec = big_o + shift;
        if (abs_prec < -max_precision || abs_prec > max_precision)
            throw domain_error("parse: precision out of range");
        if (value == 0) return PadicNumber(p, static_cast<int>(abs_prec));
        return from_unit_part(p, static_cast<int>(shift), value, static_cast<int>(abs_prec));
    }
}

PadicNumber teichmuller(const PadicNumber& x) {
    if (x.is_zero() || x.valuation() != 0)
        throw domain_error("teichmuller: unit required");
    long long p = x.prime();
    int n = x.precision();
    Int mod = p_power(p, n);
    Int t = x.unit() % mod;
    for (int k = 1; k < n; ++k)
        t = boost::multiprecision::powm(t, Int(p), mod);
    return PadicNumber::from_unit_part(p, 0, t, n);
}

PadicNumber unit_angle(const PadicNumber& x) {
    if (x.is_zero()) throw domain_error("unit_angle: zero has no unit part");
    PadicNumber u = PadicNumber::from_unit_part(x.prime(), 0, x.unit(),
                                                x.precision() - x.valuation());
    return u / teichmuller(u);
}

PadicNumber log_iwasawa(const PadicNumber& x) {
    if (x.is_zero()) throw domain_error("log of zero");
    long long p = x.prime();
    PadicNumber a = unit_angle(x);
    int rel = a.precision();
    PadicNumber w = PadicNumber::one(p, rel) - a; // log(a) = -sum w^n / n
    if (w.is_zero()) return PadicNumber(p, rel);
    int m = w.valuation();
    int target = rel + 2;
    PadicNumber acc(p, rel + 4);
    PadicNumber wpow = PadicNumber::one(p, rel + 4 + target);
    long long n = 0;
    auto ilog_p = [&](long long k) {
        int r = 0;
        while (k >= p) { k /= p; ++r; }
        return r;
    };
    for (;;) {
        ++n;
        wpow = wpow * w;
        acc = acc - wpow / PadicNumber::from_integer(Int(n), p, wpow.precision() + ilog_p(n) + 1);
        // stop once every later term is provably below the target
        if (static_cast<long long>(n + 1) * m - ilog_p(n + 1) >= target) break;
        if (n > 100000) throw resource_error("log series budget exceeded");
    }
    return acc.truncate(std::min(acc.precision(), target));
}

PadicNumber exp_p(const PadicNumber& x) {
    long long p = x.prime();
    if (x.is_zero()) return PadicNumber::one(p, x.precision());
    if (x.valuation() < 1) throw domain_error("exp_p: requires v(x) >= 1");
    int m = x.valuation();
    int target = x.precision() + 2;
    // terms x^n/n! have valuation at least n*(m - 1/(p-1))
    long long nstop = 1 + (static_cast<long long>(target) * (p - 1)) /
                              (static_cast<long long>(m) * (p - 1) - 1);
    PadicNumber acc = PadicNumber::one(p, target + 2);
    PadicNumber term = PadicNumber::one(p, target + 2 + 2 * static_cast<int>(nstop));
    for (long long n = 1; n <= nstop; ++n) {
        term = term * x / PadicNumber::from_integer(Int(n), p, term.precision());
        acc = acc + term;
    }
    return acc.truncate(std::min(acc.precision(), target));
}

} // namespace ptk
