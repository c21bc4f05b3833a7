/*
 * Acceptance gate.  Runs nine end-to-end checks and prints one line per
 * criterion.  Exits 0 only when every criterion passes.  All tolerances
 * are pinned here as absolute p-adic precision thresholds.
 */

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptk/bar.hpp"
#include "ptk/bernoulli.hpp"
#include "ptk/ck.hpp"
#include "ptk/descent.hpp"
#include "ptk/ffield.hpp"
#include "ptk/group.hpp"
#include "ptk/padic.hpp"
#include "ptk/polylog.hpp"
#include "ptk/zetap.hpp"

using namespace ptk;

namespace {

int failures = 0;

void report(int num, const std::string& label, bool ok) {
    std::printf("criterion %d: %-58s %s\n", num, label.c_str(), ok ? "pass" : "FAIL");
    if (!ok) ++failures;
}

void guarded(int num, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion %d threw: %s\n", num, e.what());
    }
    report(num, label, ok);
}

// deterministic p-adic unit with a prescribed residue
PadicNumber lift_unit(std::mt19937_64& rng, long long p, int prec, long long residue) {
    Int x(residue);
    Int pk(p);
    for (int i = 1; i < prec; ++i) {
        x += pk * static_cast<long long>(rng() % static_cast<std::uint64_t>(p));
        pk *= p;
    }
    return PadicNumber::from_integer(x, p, prec);
}

PadicNumber random_unit(std::mt19937_64& rng, long long p, int prec,
                        const std::vector<long long>& excluded) {
    for (;;) {
        auto d = static_cast<long long>(1 + rng() % static_cast<std::uint64_t>(p - 1));
        bool bad = false;
        for (long long e : excluded) bad = bad || d == e;
        if (!bad) return lift_unit(rng, p, prec, d);
    }
}

PadicNumber random_small(std::mt19937_64& rng, long long p, int prec) {
    auto d = static_cast<long long>(1 + rng() % static_cast<std::uint64_t>(p - 1));
    return lift_unit(rng, p, prec, d * p).truncate(prec);
}

const std::vector<Rat>& unit_points() {
    static const std::vector<Rat> pts{Rat(2), Rat(-1), Rat(1, 2)};
    return pts;
}

PadicNumber direct_series(int k, const PadicNumber& z, int prec) {
    PadicNumber sum(z.prime(), prec, true);
    for (int n = 1; n <= prec + 16; ++n) {
        PadicNumber term = z.pow(n).div_int(pow_int(Int(n), static_cast<unsigned long>(k)));
        sum = sum + term.truncate(prec);
    }
    return sum;
}

bool criterion1(const std::map<long long, PolylogTable>& tables) {
    const int N = 20;
    bool ok = true;
    for (long long p : {3LL, 5LL, 7LL}) {
        LocallyAnalyticFunction f = depth_two_function(tables.at(p));
        for (const Rat& z : unit_points()) {
            PadicNumber val = f.evaluate(PadicNumber::from_rational(z, p, N));
            ok = ok && val.zero_to(N - 3);
        }
    }
    return ok;
}

bool criterion2() {
    const int N = 24;
    bool ok = true;
    for (long long p : {5LL, 11LL}) {
        PolylogTable t(p, N, 4);
        LocallyAnalyticFunction f = depth_four_function(t);
        for (const Rat& z : unit_points()) {
            PadicNumber val = f.evaluate(PadicNumber::from_rational(z, p, N));
            ok = ok && val.zero_to(N - 5);
        }
    }
    return ok;
}

bool criterion3() {
    SolveReport rep = solve_unit_equation(5, 20, 2, unit_points(), 3);
    bool ok = rep.candidates.size() == 3;
    std::map<std::string, long long> disks;
    for (const auto& c : rep.candidates) {
        ok = ok && c.found && c.zero.has_value();
        std::ostringstream os;
        os << c.value;
        disks[os.str()] = c.disk;
    }
    ok = ok && disks["2"] == 2 && disks["1/2"] == 3 && disks["-1"] == 4;

    auto count_zeros = [](const SolveReport& r) {
        size_t n = 0;
        for (const auto& d : r.disks) n += d.zeros.size();
        return n;
    };
    // extras carry any zero beyond the candidate list; the count must be
    // stable under a precision increase
    SolveReport rep30 = solve_unit_equation(5, 30, 2, unit_points(), 3);
    ok = ok && count_zeros(rep) == count_zeros(rep30);
    ok = ok && rep.extras.size() == rep30.extras.size();
    return ok;
}

bool criterion4() {
    std::vector<Rat> pts = s_unit_points({2}, 20);
    return pts == unit_points() ||
           (pts.size() == 3 && pts[0] == Rat(-1) && pts[1] == Rat(1, 2) && pts[2] == Rat(2));
}

bool criterion5(const std::map<long long, PolylogTable>& tables) {
    const int N = 20;
    const int trials = 25;
    bool ok = true;
    for (long long p : {3LL, 5LL, 7LL}) {
        const PolylogTable& t = tables.at(p);
        PadicNumber one = PadicNumber::one(p, N);
        std::mt19937_64 rng(0x5EED0000ULL + static_cast<std::uint64_t>(p));

        for (int i = 0; i < trials; ++i) {
            PadicNumber z = random_unit(rng, p, N, {1});
            PadicNumber refl = t.ell(2, z) + t.ell(2, one - z) +
                               log_iwasawa(z) * log_iwasawa(one - z);
            ok = ok && refl.zero_to(N - 4);
        }

        const Int kfact[5] = {Int(1), Int(1), Int(2), Int(6), Int(24)};
        for (int i = 0; i < trials; ++i) {
            PadicNumber z = random_unit(rng, p, N, {1});
            int k = 2 + i % 3;
            PadicNumber sum = (k % 2 == 0) ? t.ell(k, z) + t.ell(k, z.inverse())
                                           : t.ell(k, z) - t.ell(k, z.inverse());
            ok = ok && (sum + log_iwasawa(z).pow(k).div_int(kfact[k])).zero_to(N - 4);
        }

        for (int i = 0; i < trials; ++i) {
            PadicNumber z = (p == 3) ? random_small(rng, p, N)
                                     : random_unit(rng, p, N, {1, p - 1});
            int k = 1 + i % 4;
            PadicNumber rhs = (t.ell(k, z) + t.ell(k, -z)).times_int(Int(1) << (k - 1));
            ok = ok && (t.ell(k, z * z) - rhs).zero_to(N - 4);
        }

        for (int i = 0; i < trials; ++i) {
            PadicNumber z = random_small(rng, p, N);
            int k = 1 + i % 4;
            ok = ok && (t.ell(k, z) - direct_series(k, z, N)).zero_to(N - 2);
        }
    }
    return ok;
}

bool criterion6() {
    const int N = 15;
    bool ok = true;
    BernoulliTable bern;
    for (long long p : {5LL, 7LL}) {
        for (int n : {2, 4, 6}) {
            PadicNumber lhs = lp_value(1 - n, n, p, N);
            Rat euler = Rat(1) - Rat(pow_int(Int(p), static_cast<unsigned long>(n - 1)));
            Rat expected = -euler * bern.get(n) / n;
            ok = ok && lhs.agrees_with(PadicNumber::from_rational(expected, p, N), N);
        }
        ok = ok && zeta_p(2, p, N).zero_to(N);
    }
    PadicNumber z3a = zeta_p(3, 5, N, 1);
    PadicNumber z3b = zeta_p(3, 5, N, 2);
    ok = ok && z3a.agrees_with(z3b, N) && !z3a.is_zero();
    return ok;
}

bool criterion7() {
    bool ok = true;
    struct Row { long long q, n; int m; };
    for (const Row& r : {Row{7, 3, 3}, Row{7, 5, 4}, Row{13, 4, 4}, Row{13, 3, 3}}) {
        KummerReport rep = kummer_h1(r.q, r.n, r.m);
        ok = ok && rep.h1_order == rep.unit_index;
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        LesReport rep = les_check(random_sequence(seed));
        ok = ok && rep.exact;
    }
    for (int n : {2, 3}) {
        BarModule mod = BarModule::trivial(FiniteGroup::cyclic(n), {Int(n)});
        Int order = 1;
        for (const Int& d : bar_cohomology(mod, 3)) order *= d;
        ok = ok && order == n;
    }
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    ok = ok && cs_class(c2, {0, 0}, 2) == 1;
    ok = ok && cs_class(c2, {0, 1}, 2) == 2;
    return ok;
}

bool criterion8() {
    DescentReport r0 = conditional_rank(CurveModel(0, -1), 3.0);
    bool ok = r0.rank_determined && r0.selmer_upper_bound == 0 && r0.rank_lower_bound == 0;

    DescentReport r1 = conditional_rank(CurveModel(0, -36), 2.5);
    ok = ok && r1.rank_determined && r1.rank_lower_bound == 1 && r1.generators.size() == 1;
    if (ok) {
        const CurvePoint& g = r1.generators[0];
        CurveModel e(0, -36);
        ok = ok && !is_torsion(e, g) && square_class(e, g) != 1;
    }
    return ok;
}

bool criterion9(const std::map<long long, PolylogTable>& low,
                const std::map<long long, PolylogTable>& high) {
    const int N = 18;
    bool ok = true;
    std::mt19937_64 rng(0xACCE97ULL);
    const long long primes[3] = {3, 5, 7};
    for (int i = 0; i < 100; ++i) {
        long long p = primes[i % 3];
        int k = 1 + static_cast<int>(rng() % 4);
        PadicNumber zlo = PadicNumber::one(p, N);
        PadicNumber zhi = PadicNumber::one(p, N + 10);
        if (rng() % 2 == 0) {
            long long d;
            do {
                d = static_cast<long long>(1 + rng() % static_cast<std::uint64_t>(p - 1));
            } while (d == 1);
            Int x(d);
            Int pk(p);
            for (int j = 1; j < N + 10; ++j) {
                x += pk * static_cast<long long>(rng() % static_cast<std::uint64_t>(p));
                pk *= p;
            }
            zlo = PadicNumber::from_integer(x, p, N);
            zhi = PadicNumber::from_integer(x, p, N + 10);
        } else {
            long long num, den;
            do {
                num = static_cast<long long>(2 + rng() % 97);
                den = static_cast<long long>(1 + rng() % 97);
                if (num % p == 0) ++num;
                if (den % p == 0) ++den;
            } while (num % p == den % p); // excludes the disk of 1
            zlo = PadicNumber::from_rational(Int(num), Int(den), p, N);
            zhi = PadicNumber::from_rational(Int(num), Int(den), p, N + 10);
        }
        PadicNumber a = low.at(p).ell(k, zlo);
        PadicNumber b = high.at(p).ell(k, zhi);
        PadicNumber bt = b.truncate(a.precision());
        ok = ok && bt.precision() == a.precision() && bt.str() == a.str();
    }
    return ok;
}

} // namespace

int main() {
    std::map<long long, PolylogTable> t20, t18, t28;
    for (long long p : {3LL, 5LL, 7LL}) {
        t20.emplace(p, PolylogTable(p, 20, 4));
        t18.emplace(p, PolylogTable(p, 18, 4));
        t28.emplace(p, PolylogTable(p, 28, 4));
    }

    guarded(1, "depth-2 vanishing at 2, -1, 1/2 (p = 3, 5, 7; N = 20)",
            [&] { return criterion1(t20); });
    guarded(2, "depth-4 vanishing at 2, -1, 1/2 (p = 5, 11; N = 24)", criterion2);
    guarded(3, "zero recovery in disks 2, 3, 4 at p = 5, stable to N = 30", criterion3);
    guarded(4, "s_unit_points({2}, 20) = {-1, 1/2, 2}", criterion4);
    guarded(5, "polylog identities at 25 random points per prime",
            [&] { return criterion5(t20); });
    guarded(6, "zeta interpolation at n = 2, 4, 6 and special values", criterion6);
    guarded(7, "cohomology suite: kummer, les, H^3, chern-simons", criterion7);
    guarded(8, "descent ranks: 0 for b = -1, 1 with generator for b = -36", criterion8);
    guarded(9, "100 seeded evaluations bit-identical after truncation",
            [&] { return criterion9(t18, t28); });

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAIL\n", failures);
    return 1;
}
