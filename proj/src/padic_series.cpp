#include "ptk/padic_series.hpp"

#include <algorithm>
#include <cassert>

namespace ptk {

Int binomial_int(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

int clamp_tail(long long t) {
    return static_cast<int>(std::clamp<long long>(t, -PadicSeries::tail_infinity,
                                                  PadicSeries::tail_infinity));
}

} // namespace

PadicSeries::PadicSeries(PadicNumber center, std::vector<PadicNumber> coeffs, int tail)
    : p_(center.prime()), center_(std::move(center)), coeffs_(std::move(coeffs)),
      tail_(tail) {
    for (const auto& c : coeffs_)
        if (c.prime() != p_) throw domain_error("series: mixed primes");
    if (tail_ > tail_infinity) tail_ = tail_infinity;
}

PadicNumber PadicSeries::coeff(int n) const {
    if (n < 0) throw domain_error("coeff: negative index");
    if (n < length()) return coeffs_[static_cast<size_t>(n)];
    if (tail_ >= tail_infinity)
        return PadicNumber(p_, PadicNumber::max_precision, true);
    return PadicNumber(p_, std::clamp(tail_ - n, -8 * PadicNumber::max_precision,
                                      PadicNumber::max_precision));
}

PadicSeries PadicSeries::with_tail(int t) const {
    PadicSeries r = *this;
    r.tail_ = std::min(t, static_cast<int>(tail_infinity));
    return r;
}

PadicSeries PadicSeries::stored_polynomial() const {
    PadicSeries r = *this;
    r.tail_ = tail_infinity;
    return r;
}

PadicSeries PadicSeries::truncated(int max_deg) const {
    if (max_deg < 0) throw domain_error("truncated: negative degree");
    if (max_deg >= degree()) return *this;
    long long t = tail_;
    for (int n = max_deg + 1; n < length(); ++n) {
        const auto& c = coeffs_[static_cast<size_t>(n)];
        long long vn = (c.is_zero() ? c.precision() : c.valuation()) + n;
        t = std::min(t, vn);
    }
    PadicSeries r = *this;
    r.coeffs_.resize(static_cast<size_t>(max_deg + 1),
                     PadicNumber(p_, PadicNumber::max_precision, true));
    r.tail_ = clamp_tail(t);
    return r;
}

PadicSeries PadicSeries::operator-() const {
    PadicSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PadicSeries PadicSeries::operator+(const PadicSeries& g) const {
    if (p_ != g.p_) throw domain_error("series: mixed primes");
    if (!(center_ == g.center_)) throw domain_error("series: mismatched centers");
    std::vector<PadicNumber> c;
    int n = std::max(length(), g.length());
    c.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c.push_back(coeff(i) + g.coeff(i));
    return PadicSeries(center_, std::move(c), std::min(tail_, g.tail_));
}

PadicSeries PadicSeries::operator-(const PadicSeries& g) const {
    return *this + (-g);
}

int PadicSeries::value_floor() const {
    long long m = tail_;
    for (int n = 0; n < length(); ++n) {
        const auto& c = coeffs_[static_cast<size_t>(n)];
        m = std::min<long long>(m, (c.is_zero() ? c.precision() : c.valuation()) + n);
    }
    return clamp_tail(m);
}

PadicSeries PadicSeries::operator*(const PadicSeries& g) const {
    if (p_ != g.p_) throw domain_error("series: mixed primes");
    if (!(center_ == g.center_)) throw domain_error("series: mismatched centers");
    long long t = std::min<long long>(
        {static_cast<long long>(tail_) + g.value_floor(),
         static_cast<long long>(g.tail_) + value_floor(),
         static_cast<long long>(tail_) + g.tail_});
    if (length() == 0 || g.length() == 0)
        return PadicSeries(center_, {}, clamp_tail(t));
    std::vector<PadicNumber> c(static_cast<size_t>(length() + g.length() - 1),
                               PadicNumber(p_, PadicNumber::max_precision, true));
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < g.length(); ++j) {
            auto& slot = c[static_cast<size_t>(i + j)];
            slot = slot + coeffs_[static_cast<size_t>(i)] * g.coeffs_[static_cast<size_t>(j)];
        }
    return PadicSeries(center_, std::move(c), clamp_tail(t));
}

PadicSeries PadicSeries::operator*(const PadicNumber& s) const {
    if (p_ != s.prime()) throw domain_error("series: mixed primes");
    std::vector<PadicNumber> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    long long shift = s.is_zero() ? s.precision() : s.valuation();
    return PadicSeries(center_, std::move(c), clamp_tail(tail_ + shift));
}

PadicSeries PadicSeries::derivative() const {
    std::vector<PadicNumber> c;
    for (int n = 1; n < length(); ++n)
        c.push_back(coeffs_[static_cast<size_t>(n)].times_int(n));
    long long t = (tail_ >= tail_infinity) ? tail_infinity
                                           : static_cast<long long>(tail_) - 1;
    return PadicSeries(center_, std::move(c), clamp_tail(t));
}

PadicSeries PadicSeries::integrate() const {
    if (tail_ < tail_infinity)
        throw domain_error("integrate: tail must carry an analytic bound first");
    std::vector<PadicNumber> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(PadicNumber(p_, PadicNumber::max_precision, true));
    for (int n = 0; n < length(); ++n)
        c.push_back(coeffs_[static_cast<size_t>(n)].div_int(n + 1));
    return PadicSeries(center_, std::move(c), tail_infinity);
}

PadicSeries PadicSeries::scale_variable(const PadicNumber& s) const {
    if (s.prime() != p_) throw domain_error("series: mixed primes");
    if (!s.is_zero() && s.valuation() < 0)
        throw domain_error("scale_variable: scale must be integral");
    std::vector<PadicNumber> c;
    c.reserve(coeffs_.size());
    PadicNumber pw = PadicNumber::one(p_, 4 * PadicNumber::max_precision);
    for (int n = 0; n < length(); ++n) {
        c.push_back(coeffs_[static_cast<size_t>(n)] * pw);
        pw = pw * s;
    }
    return PadicSeries(center_, std::move(c), tail_);
}

PadicNumber PadicSeries::evaluate(const PadicNumber& u) const {
    if (u.prime() != p_) throw domain_error("series: mixed primes");
    bool small = u.is_zero() ? u.precision() >= 1 : u.valuation() >= 1;
    if (!small) throw domain_error("evaluate: point outside the small disk");
    PadicNumber acc(p_, 8 * PadicNumber::max_precision);
    for (int n = length() - 1; n >= 0; --n)
        acc = acc * u + coeffs_[static_cast<size_t>(n)];
    if (tail_ < tail_infinity)
        acc = acc.truncate(std::min(acc.precision(), tail_));
    return acc;
}

PadicNumber PadicSeries::evaluate_at_point(const PadicNumber& z) const {
    return evaluate(z - center_);
}

PadicNumber eval_poly(const std::vector<PadicNumber>& poly, const PadicNumber& t) {
    if (poly.empty()) throw domain_error("eval_poly: empty polynomial");
    PadicNumber acc(t.prime(), 8 * PadicNumber::max_precision);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
    return acc;
}

namespace {

struct LocalSolve {
    long long p;
    int iter_cap = 64;

    // All roots of the polynomial on Z_p in local coordinates.
    RootFindReport run(std::vector<PadicNumber> c, int depth) {
        RootFindReport rep;
        // strip content so the reduction mod p is visible
        int m = 8 * PadicNumber::max_precision;
        for (const auto& a : c)
            m = std::min(m, a.is_zero() ? a.precision() : a.valuation());
        if (m != 0) {
            Int pm = p_power(p, std::abs(m));
            for (auto& a : c) a = (m > 0) ? a.div_int(pm) : a.times_int(pm);
        }
        int nmin = 8 * PadicNumber::max_precision;
        for (const auto& a : c) nmin = std::min(nmin, a.precision());
        if (nmin < 1) {
            rep.undecided.push_back(PadicNumber(p, 0));
            return rep;
        }

        std::vector<long long> digit(c.size());
        bool all0 = true;
        for (size_t i = 0; i < c.size(); ++i) {
            digit[i] = (c[i].is_zero() || c[i].valuation() > 0)
                           ? 0
                           : static_cast<long long>(c[i].unit() % p);
            if (digit[i] != 0) all0 = false;
        }
        assert(!all0);
        (void)all0;

        std::vector<PadicNumber> dc;
        for (size_t i = 1; i < c.size(); ++i)
            dc.push_back(c[i].times_int(Int(static_cast<long long>(i))));

        for (long long r = 0; r < p; ++r) {
            long long fr = 0, dfr = 0, rpow = 1;
            for (size_t i = 0; i < c.size(); ++i) {
                fr = (fr + digit[i] * rpow) % p;
                if (i + 1 < c.size())
                    dfr = (dfr + (digit[i + 1] * ((i + 1) % p)) % p * rpow) % p;
                rpow = (rpow * r) % p;
            }
            if (fr != 0) continue;
            if (dfr != 0) {
                lift_simple(c, dc, r, nmin, rep);
            } else if (depth <= 0) {
                rep.undecided.push_back(PadicNumber::from_unit_part(p, 0, Int(r), 1));
            } else {
                descend(c, r, depth, rep);
            }
        }
        return rep;
    }

    void lift_simple(const std::vector<PadicNumber>& c,
                     const std::vector<PadicNumber>& dc, long long r, int nmin,
                     RootFindReport& rep) {
        PadicNumber t = PadicNumber::from_unit_part(p, 0, Int(r), nmin);
        for (int it = 0; it < iter_cap; ++it) {
            PadicNumber ft = eval_poly(c, t);
            if (ft.is_zero()) break;
            PadicNumber dft = eval_poly(dc, t);
            t = t - ft / dft;
        }
        if (eval_poly(c, t).is_zero())
            rep.roots.push_back(t);
        else
            rep.undecided.push_back(PadicNumber::from_unit_part(p, 0, Int(r), 1));
    }

    // Zoom into the subdisk r + pZ_p via f(r + p s).
    void descend(const std::vector<PadicNumber>& c, long long r, int depth,
                 RootFindReport& rep) {
        size_t deg = c.size();
        std::vector<PadicNumber> g(deg, PadicNumber(p, 8 * PadicNumber::max_precision, true));
        for (size_t j = 0; j < deg; ++j) {
            PadicNumber acc = g[j];
            for (size_t n = j; n < deg; ++n) {
                Int w = binomial_int(static_cast<long long>(n), static_cast<long long>(j)) *
                        pow_int(Int(r), static_cast<unsigned long>(n - j)) *
                        p_power(p, static_cast<int>(j));
                acc = acc + c[n].times_int(w);
            }
            g[j] = acc;
        }
        RootFindReport sub = run(std::move(g), depth - 1);
        for (const auto& s : sub.roots) rep.roots.push_back(map_back(r, s));
        for (const auto& s : sub.undecided) rep.undecided.push_back(map_back(r, s));
    }

    PadicNumber map_back(long long r, const PadicNumber& s) const {
        PadicNumber base = PadicNumber::from_unit_part(p, 0, Int(r), s.precision() + 1);
        return base + s.times_int(Int(p));
    }
};

} // namespace

RootFindReport hensel_roots(const std::vector<PadicNumber>& poly, int depth_budget) {
    if (poly.empty()) throw domain_error("hensel_roots: empty polynomial");
    long long p = poly.front().prime();
    bool all_zero = true;
    for (const auto& c : poly) {
        if (c.prime() != p) throw domain_error("hensel_roots: mixed primes");
        if (!c.is_zero()) all_zero = false;
    }
    if (all_zero)
        throw precision_error("hensel_roots: polynomial is zero to working precision");
    LocalSolve solver{p};
    auto rep = solver.run(poly, depth_budget);
    if (rep.roots.size() > poly.size() - 1)
        throw precision_error("hensel_roots: more roots than degree");
    return rep;
}

RootFindReport disk_roots(const PadicSeries& f, int depth_budget) {
    long long p = f.prime();
    std::vector<PadicNumber> c;
    c.reserve(static_cast<size_t>(f.length()));
    for (int n = 0; n < f.length(); ++n) {
        PadicNumber b = f.coeff(n).times_int(p_power(p, n));
        if (f.tail() < PadicSeries::tail_infinity)
            b = b.truncate(std::min(b.precision(), f.tail()));
        c.push_back(b);
    }
    auto rep = hensel_roots(c, depth_budget);
    RootFindReport out;
    for (const auto& t : rep.roots) out.roots.push_back(t.times_int(Int(p)));
    for (const auto& t : rep.undecided) out.undecided.push_back(t.times_int(Int(p)));
    return out;
}

} // namespace ptk
