#include "ptk/polylog.hpp"

#include <algorithm>
#include <climits>

namespace ptk {

namespace {

int ilog(long long p, long long n) {
    int r = 0;
    while (n >= p) { n /= p; ++r; }
    return r;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

Int factorial_int(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

int tail_exponent_floor(long long q, int k, long long p) {
    if (q < 1) q = 1;
    const long long window = 600;
    long long best = LLONG_MAX;
    for (long long n = q; n < q + window; ++n)
        best = std::min(best, n - static_cast<long long>(k) * ilog(p, n));
    // beyond the window, v_p(n) <= 40 for every index this library can reach
    best = std::min(best, q + window - 41LL * k);
    return static_cast<int>(std::clamp<long long>(best, -(1 << 28), 1 << 28));
}

void PolylogTable::check_range(int k) const {
    if (k < 1 || k > kmax_) throw domain_error("weight out of range");
}

PolylogTable::PolylogTable(long long p, int prec, int kmax)
    : p_(p), prec_(prec), kmax_(kmax) {
    if (!is_odd_prime(p)) throw domain_error("p must be an odd prime >= 3");
    if (prec < 1 || prec > 256) throw domain_error("precision out of range");
    if (kmax < 1 || kmax > 8) throw domain_error("depth out of range");
    build_basis();
    build_disks();
}

void PolylogTable::build_basis() {
    // Valuation floors ff[k][q] <= min over m >= q of v(b_m) for the true
    // level-k coefficients, built from the convergence of the level-1 series
    // (v >= ceil(m/(p-1)) - log_p m - 1) and the division by i at each
    // integration step.  Computed as suffix minima with a crude but safe
    // bound past the table.
    const long long qbig = (p_ - 1) * (prec_ + 220) + 6000;
    std::vector<std::vector<long long>> ff(
        static_cast<size_t>(kmax_) + 1,
        std::vector<long long>(static_cast<size_t>(qbig) + 2, 0));
    ff[1][static_cast<size_t>(qbig) + 1] = ceil_div(qbig + 1, p_ - 1) - 42;
    for (long long q = qbig; q >= 1; --q)
        ff[1][static_cast<size_t>(q)] =
            std::min(ceil_div(q, p_ - 1) - ilog(p_, q) - 1,
                     ff[1][static_cast<size_t>(q) + 1]);
    for (int k = 2; k <= kmax_; ++k) {
        ff[static_cast<size_t>(k)][static_cast<size_t>(qbig) + 1] =
            ceil_div(qbig + 2, p_ - 1) - 42LL * k;
        for (long long q = qbig; q >= 1; --q)
            ff[static_cast<size_t>(k)][static_cast<size_t>(q)] =
                std::min(ff[static_cast<size_t>(k)][static_cast<size_t>(q) + 1],
                         ff[static_cast<size_t>(k) - 1][static_cast<size_t>(q) + 1] -
                             ilog(p_, q));
    }

    h_ = -1;
    for (long long q = 2 * p_; q + 1 <= qbig; ++q)
        if (ff[static_cast<size_t>(kmax_)][static_cast<size_t>(q) + 1] >= prec_ + 4) {
            h_ = static_cast<int>(q);
            break;
        }
    if (h_ < 0) throw resource_error("basis degree bound not reachable");

    wprec_ = prec_ + 4 + kmax_ * (ilog(p_, h_) + 2) + 10;
    const int wext = wprec_ + 20;

    // level 1: p^-1 log(w^p - (w-1)^p), an integral series with u(0) = 0
    std::vector<Int> u(static_cast<size_t>(p_), 0);
    for (long long i = 1; i < p_; ++i) {
        Int c = binomial_int(p_, i);
        u[static_cast<size_t>(i)] = (i % 2 == 0) ? c : -c;
    }
    long long nstop = 1;
    while (tail_exponent_floor(nstop, 1, p_) < wprec_ + 2) ++nstop;

    std::vector<PadicNumber> b(static_cast<size_t>(h_) + 1, PadicNumber(p_, wext, true));
    std::vector<Int> upow(u.begin(), u.end());
    for (long long n = 1; n < nstop; ++n) {
        if (n > 1) {
            std::vector<Int> next(std::min<size_t>(upow.size() + u.size() - 1,
                                                   static_cast<size_t>(h_) + 1),
                                  0);
            for (size_t i = 0; i < upow.size(); ++i) {
                if (upow[i] == 0) continue;
                for (size_t j = 1; j < u.size() && i + j < next.size(); ++j)
                    next[i + j] += upow[i] * u[j];
            }
            upow = std::move(next);
        }
        for (size_t m = 1; m < upow.size() && m <= static_cast<size_t>(h_); ++m) {
            if (upow[m] == 0) continue;
            Int num = (n % 2 == 1) ? upow[m] : -upow[m];
            b[m] = b[m] + PadicNumber::from_rational(num, Int(n) * p_, p_, wext);
        }
    }
    int t1cap = tail_exponent_floor(nstop, 1, p_) - 1;
    for (auto& x : b) x = x.truncate(std::min(x.precision(), t1cap));
    basis_.push_back(std::move(b));
    basis_tail_.push_back(static_cast<int>(ff[1][static_cast<size_t>(h_) + 1]));

    for (int k = 2; k <= kmax_; ++k) {
        const auto& prev = basis_.back();
        int cap_s = static_cast<int>(ff[static_cast<size_t>(k) - 1][static_cast<size_t>(h_) + 1]);
        int cap_c = static_cast<int>(ff[static_cast<size_t>(k)][static_cast<size_t>(h_)]);

        // residue of the integrand at w = 1 must vanish
        PadicNumber s0(p_, 8 * PadicNumber::max_precision);
        for (int m = 1; m <= h_; ++m) s0 = s0 + prev[static_cast<size_t>(m)];
        if (!s0.zero_to(std::min(prec_ + 2, cap_s)))
            throw precision_error("logarithmic residue at w = 1 failed to vanish");

        // t_i = (w-1)^i coefficient of the antiderivative
        std::vector<PadicNumber> t(static_cast<size_t>(h_), PadicNumber(p_, 1, true));
        for (int i = 1; i < h_; ++i) {
            PadicNumber acc(p_, 8 * PadicNumber::max_precision);
            Int binc = 1; // C(m-1, i) at m = i+1
            for (int m = i + 1; m <= h_; ++m) {
                acc = acc + prev[static_cast<size_t>(m)].times_int(binc);
                binc = binc * m / (m - i);
            }
            acc = acc.truncate(std::min(acc.precision(), cap_s));
            t[static_cast<size_t>(i)] = acc.div_int(Int(i));
        }

        std::vector<PadicNumber> c(static_cast<size_t>(h_) + 1,
                                   PadicNumber(p_, wext, true));
        for (int j = 0; j <= h_; ++j) {
            int istart = std::max(j, 1);
            if (istart >= h_) {
                c[static_cast<size_t>(j)] = PadicNumber(p_, std::max(cap_c, 1));
                continue;
            }
            PadicNumber acc(p_, 8 * PadicNumber::max_precision);
            Int binc = 1; // C(istart, j) with istart = max(j, 1)
            int sgn = ((istart - j) % 2 == 0) ? 1 : -1;
            for (int i = istart; i < h_; ++i) {
                acc = acc + t[static_cast<size_t>(i)].times_int(sgn > 0 ? binc : -binc);
                binc = binc * (i + 1) / (i + 1 - j);
                sgn = -sgn;
            }
            c[static_cast<size_t>(j)] = acc.truncate(std::min(acc.precision(), cap_c));
        }

        // the value at infinity (w = 0) must vanish; retarget the residual
        // onto 1 - w, which leaves the value at z = 0 alone
        PadicNumber r0 = c[0];
        if (!r0.zero_to(prec_ + 2))
            throw precision_error("value at infinity failed to vanish");
        c[0] = c[0] - r0;
        c[1] = c[1] + r0;

        basis_.push_back(std::move(c));
        basis_tail_.push_back(static_cast<int>(ff[static_cast<size_t>(k)][static_cast<size_t>(h_) + 1]));
    }

    for (const auto& lvl : basis_)
        for (const auto& x : lvl)
            if (!x.is_zero() && x.precision() < prec_ + 2)
                throw resource_error("working precision exhausted in basis build");
}

PadicNumber PolylogTable::eval_basis(int k, const PadicNumber& w0) const {
    check_range(k);
    if (w0.prime() != p_) throw domain_error("mixed primes");
    if (!w0.is_zero() && w0.valuation() < 0)
        throw domain_error("basis evaluation needs v(w) >= 0");
    const auto& b = basis_[static_cast<size_t>(k) - 1];
    PadicNumber acc(p_, 8 * PadicNumber::max_precision);
    for (int m = h_; m >= 0; --m) acc = acc * w0 + b[static_cast<size_t>(m)];
    return acc.truncate(std::min(acc.precision(), basis_tail_[static_cast<size_t>(k) - 1]));
}

void PolylogTable::build_disks() {
    m_ = std::max(4, prec_);
    while (tail_exponent_floor(m_ + 1, kmax_, p_) < prec_ + 4) ++m_;

    PadicNumber one = PadicNumber::one(p_, wprec_);

    for (long long a = 2; a < p_; ++a) {
        PadicNumber xi = teichmuller(PadicNumber::from_integer(Int(a), p_, wprec_));
        centers_.emplace(a, xi);
        PadicNumber om = one - xi;
        PadicNumber w0 = om.inverse();

        std::vector<PadicNumber> consts;
        consts.push_back(-log_iwasawa(om));
        for (int k = 2; k <= kmax_; ++k) {
            Int pk = p_power(p_, k);
            consts.push_back(eval_basis(k, w0).times_int(pk).div_int(pk - 1));
        }

        std::vector<PadicSeries> col;
        {
            std::vector<PadicNumber> cs;
            cs.push_back(consts[0]);
            PadicNumber pw = one;
            for (int n = 1; n <= m_; ++n) {
                pw = pw * w0; // (1 - xi)^(-n)
                cs.push_back(pw.div_int(Int(n)));
            }
            col.emplace_back(xi, std::move(cs), tail_exponent_floor(m_ + 1, 1, p_));
        }

        PadicSeries geo = [&] {
            std::vector<PadicNumber> g;
            PadicNumber xinv = xi.inverse();
            PadicNumber pw = xinv;
            for (int j = 0; j <= m_; ++j) {
                g.push_back((j % 2 == 0) ? pw : -pw);
                pw = pw * xinv;
            }
            return PadicSeries(xi, std::move(g), m_ + 1);
        }();

        for (int k = 2; k <= kmax_; ++k) {
            PadicSeries prod = (col.back() * geo).truncated(m_);
            PadicSeries integ = prod.stored_polynomial().integrate().truncated(m_);
            PadicSeries sk =
                integ.with_tail(tail_exponent_floor(m_ + 1, k, p_)) +
                PadicSeries(xi, {consts[static_cast<size_t>(k) - 1]});
            col.push_back(std::move(sk));
        }
        consts_.emplace(a, std::move(consts));
        disks_.emplace(a, std::move(col));
    }

    // the disk at 0 carries the defining series directly
    PadicNumber zero0 = PadicNumber::from_integer(Int(0), p_, wprec_);
    std::vector<PadicSeries> col0;
    for (int k = 1; k <= kmax_; ++k) {
        std::vector<PadicNumber> cs;
        cs.push_back(PadicNumber(p_, wprec_, true));
        for (int n = 1; n <= m_; ++n)
            cs.push_back(PadicNumber::from_rational(
                Int(1), pow_int(Int(n), static_cast<unsigned long>(k)), p_, wprec_));
        col0.emplace_back(zero0, std::move(cs), tail_exponent_floor(m_ + 1, k, p_));
    }
    disks_.emplace(0, std::move(col0));
}

const PadicNumber& PolylogTable::basis_coeff(int k, int m) const {
    check_range(k);
    if (m < 0 || m > h_) throw domain_error("basis coefficient out of range");
    return basis_[static_cast<size_t>(k) - 1][static_cast<size_t>(m)];
}

const PadicNumber& PolylogTable::ell_at_teichmuller(int k, long long a) const {
    check_range(k);
    auto it = consts_.find(a);
    if (it == consts_.end()) throw domain_error("unsupported residue disk");
    return it->second[static_cast<size_t>(k) - 1];
}

const PadicSeries& PolylogTable::disk_series(int k, long long a) const {
    check_range(k);
    auto it = disks_.find(a);
    if (it == disks_.end()) throw domain_error("unsupported residue disk");
    return it->second[static_cast<size_t>(k) - 1];
}

const PadicNumber& PolylogTable::teichmuller_center(long long a) const {
    auto it = centers_.find(a);
    if (it == centers_.end()) throw domain_error("unsupported residue disk");
    return it->second;
}

PadicNumber PolylogTable::ell(int k, const PadicNumber& z) const {
    check_range(k);
    if (z.prime() != p_) throw domain_error("mixed primes");
    if (z.is_exact_zero()) return PadicNumber(p_, prec_, true);
    if (z.is_zero() || z.valuation() >= 1) {
        auto r = disks_.at(0)[static_cast<size_t>(k) - 1].evaluate(z);
        return r.truncate(std::min(r.precision(), prec_));
    }
    if (z.valuation() == 0) {
        long long a = z.residue_disk();
        if (a == 1) throw domain_error("residue disk of 1 is not covered");
        auto r = disks_.at(a)[static_cast<size_t>(k) - 1].evaluate_at_point(z);
        return r.truncate(std::min(r.precision(), prec_));
    }
    // |z| > 1: reflect through z -> 1/z
    PadicNumber inner = ell(k, z.inverse());
    PadicNumber logz = log_iwasawa(z);
    PadicNumber r = ((k % 2 == 1) ? inner : -inner) -
                    logz.pow(k).div_int(factorial_int(k));
    return r.truncate(std::min(r.precision(), prec_));
}

PadicNumber PolylogTable::frobenius_smoothed(int k, const PadicNumber& z) const {
    check_range(k);
    if (z.prime() != p_) throw domain_error("mixed primes");
    PadicNumber om = PadicNumber::one(p_, z.precision() + std::max(0, -z.valuation())) - z;
    if (om.is_zero())
        throw precision_error("cannot place the point relative to the disk at 1");
    if (om.valuation() > 0)
        throw domain_error("inside the residue disk of 1");
    PadicNumber r = eval_basis(k, om.inverse());
    return r.truncate(std::min(r.precision(), prec_));
}

} // namespace ptk
