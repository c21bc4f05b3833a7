#include "ptk/ck.hpp"

#include <algorithm>
#include <set>

#include "ptk/zetap.hpp"

namespace ptk {

namespace {

// log(xi + u) on the disk of a, using log xi = 0
PadicSeries log_z_series(const PolylogTable& t, long long a) {
    const PadicNumber& xi = t.teichmuller_center(a);
    long long p = t.prime();
    int m = t.series_length();
    std::vector<PadicNumber> cs;
    cs.push_back(PadicNumber(p, xi.precision(), true));
    PadicNumber xinv = xi.inverse();
    PadicNumber pw = PadicNumber::one(p, xi.precision());
    for (int n = 1; n <= m; ++n) {
        pw = pw * xinv;
        cs.push_back((n % 2 == 1) ? pw.div_int(Int(n)) : -pw.div_int(Int(n)));
    }
    return PadicSeries(xi, std::move(cs), tail_exponent_floor(m + 1, 1, p));
}

// log(1 - xi - u) on the disk of a
PadicSeries log_one_minus_z_series(const PolylogTable& t, long long a) {
    const PadicNumber& xi = t.teichmuller_center(a);
    long long p = t.prime();
    int m = t.series_length();
    PadicNumber om = PadicNumber::one(p, xi.precision()) - xi;
    std::vector<PadicNumber> cs;
    cs.push_back(log_iwasawa(om));
    PadicNumber ominv = om.inverse();
    PadicNumber pw = PadicNumber::one(p, xi.precision());
    for (int n = 1; n <= m; ++n) {
        pw = pw * ominv;
        cs.push_back(-pw.div_int(Int(n)));
    }
    return PadicSeries(xi, std::move(cs), tail_exponent_floor(m + 1, 1, p));
}

bool is_s_unit(const Rat& q, const std::vector<long long>& s) {
    if (q == 0) return false;
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);
    if (n < 0) n = -n;
    for (long long f : s) {
        while (n % f == 0) n /= f;
        while (d % f == 0) d /= f;
    }
    return n == 1 && d == 1;
}

} // namespace

PadicNumber LocallyAnalyticFunction::evaluate(const PadicNumber& z) const {
    if (z.prime() != p) throw domain_error("mixed primes");
    if (z.is_zero() || z.valuation() != 0)
        throw domain_error("point is not a p-adic unit");
    auto it = pieces.find(z.residue_disk());
    if (it == pieces.end()) throw domain_error("residue disk is not covered");
    PadicNumber r = it->second.evaluate_at_point(z);
    return r.truncate(std::min(r.precision(), prec));
}

LocallyAnalyticFunction depth_two_function(const PolylogTable& table) {
    if (table.depth() < 2) throw domain_error("table depth below 2");
    long long p = table.prime();
    int m = table.series_length();
    LocallyAnalyticFunction f;
    f.p = p;
    f.prec = table.precision();
    f.depth = 2;
    PadicNumber half =
        PadicNumber::from_rational(Int(1), Int(2), p, table.precision() + 24);
    for (long long a = 2; a < p; ++a) {
        PadicSeries lz = log_z_series(table, a);
        PadicSeries l1 = log_one_minus_z_series(table, a);
        PadicSeries piece =
            table.disk_series(2, a) + (lz * l1).truncated(m) * half;
        f.pieces.emplace(a, piece.truncated(m));
    }
    return f;
}

LocallyAnalyticFunction depth_four_function(const PolylogTable& table) {
    if (table.depth() < 4) throw domain_error("table depth below 4");
    long long p = table.prime();
    int m = table.series_length();
    int wide = table.precision() + 16;
    LocallyAnalyticFunction f;
    f.p = p;
    f.prec = table.precision();
    f.depth = 4;

    PadicNumber half = PadicNumber::from_rational(Int(1), Int(2), p, wide);
    PadicNumber log2 = log_iwasawa(PadicNumber::from_integer(Int(2), p, wide));
    // the vanishing coefficients need the zeta value with the Euler factor
    // at p restored, zeta(3) = L_p(3, omega^-2) / (1 - p^-3)
    Int p3 = p_power(p, 3);
    PadicNumber zeta3 =
        zeta_p(3, p, table.precision() + 8).times_int(p3).div_int(p3 - 1);
    PadicNumber c = log2.pow(3).div_int(Int(24)) + table.ell(4, half) / log2;
    PadicNumber c2 = c.times_int(Int(8)).div_int(Int(7));
    PadicNumber c3 = c.times_int(Int(4)).div_int(Int(21)) + zeta3.div_int(Int(24));

    for (long long a = 2; a < p; ++a) {
        PadicSeries lz = log_z_series(table, a);
        PadicSeries l1 = log_one_minus_z_series(table, a);
        PadicSeries lz3 = ((lz * lz).truncated(m) * lz).truncated(m);
        PadicSeries piece = table.disk_series(4, a) * zeta3 +
                            (lz * table.disk_series(3, a)).truncated(m) * c2 +
                            (lz3 * l1).truncated(m) * c3;
        f.pieces.emplace(a, piece.truncated(m));
    }
    return f;
}

std::vector<DiskZeros> find_zeros(const LocallyAnalyticFunction& f,
                                  int depth_budget) {
    std::vector<DiskZeros> out;
    for (const auto& [a, series] : f.pieces) {
        RootFindReport r = disk_roots(series, depth_budget);
        DiskZeros d;
        d.disk = a;
        for (const auto& u : r.roots) d.zeros.push_back(series.center() + u);
        for (const auto& u : r.undecided)
            d.undecided.push_back(series.center() + u);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Rat> s_unit_points(const std::vector<long long>& s, int bound) {
    if (bound < 0) throw domain_error("bound must be nonnegative");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 2) throw domain_error("set members must be at least 2");
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) throw domain_error("set members must be distinct");
    }
    double combos = 2.0;
    for (size_t i = 0; i < s.size(); ++i) {
        combos *= 2.0 * bound + 1.0;
        if (combos > 2e6) throw resource_error("enumeration budget exceeded");
    }

    std::set<Rat> found;
    std::vector<int> e(s.size(), -bound);
    for (;;) {
        Rat z = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Int pw = pow_int(Int(s[i]), static_cast<unsigned long>(std::abs(e[i])));
            if (e[i] >= 0)
                z *= Rat(pw);
            else
                z /= Rat(pw);
        }
        for (int sign = 0; sign < 2; ++sign) {
            Rat cand = sign == 0 ? z : -z;
            if (cand == 1) continue;
            if (is_s_unit(Rat(1) - cand, s)) found.insert(cand);
        }
        size_t i = 0;
        while (i < e.size() && e[i] == bound) e[i++] = -bound;
        if (i == e.size()) break;
        ++e[i];
    }
    return std::vector<Rat>(found.begin(), found.end());
}

SolveReport solve_unit_equation(long long p, int prec, int depth,
                                const std::vector<Rat>& candidates, int slack) {
    if (depth != 2 && depth != 4) throw domain_error("depth must be 2 or 4");
    if (prec < 4 || prec > 200) throw domain_error("precision out of range");
    if (slack < 0 || prec - slack < 1) throw domain_error("slack out of range");

    PolylogTable table(p, prec + 8, depth);
    LocallyAnalyticFunction f =
        depth == 2 ? depth_two_function(table) : depth_four_function(table);

    SolveReport report;
    report.p = p;
    report.prec = prec;
    report.depth = depth;
    report.disks = find_zeros(f);

    std::vector<std::vector<bool>> used;
    for (const auto& d : report.disks)
        used.emplace_back(d.zeros.size(), false);

    for (const auto& r : candidates) {
        CandidateMatch m;
        m.value = r;
        PadicNumber x = PadicNumber::from_rational(r, p, prec + 8);
        if (!x.is_zero() && x.valuation() == 0) m.disk = x.residue_disk();
        for (size_t di = 0; di < report.disks.size() && !m.found; ++di) {
            const auto& zeros = report.disks[di].zeros;
            for (size_t zi = 0; zi < zeros.size(); ++zi) {
                int level = std::min(prec - slack, zeros[zi].precision());
                if (level >= 1 && x.agrees_with(zeros[zi], level)) {
                    m.found = true;
                    m.zero = zeros[zi];
                    used[di][zi] = true;
                    break;
                }
            }
        }
        report.candidates.push_back(std::move(m));
    }

    for (size_t di = 0; di < report.disks.size(); ++di)
        for (size_t zi = 0; zi < report.disks[di].zeros.size(); ++zi)
            if (!used[di][zi]) report.extras.push_back(report.disks[di].zeros[zi]);

    return report;
}

} // namespace ptk
