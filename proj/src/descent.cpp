#include "ptk/descent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "ptk/errors.hpp"

namespace ptk {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

double log_int(const Int& x) { return std::log(abs_int(x).convert_to<double>()); }

// prime factorization by trial division; survivors past the cutoff are
// prime whenever they are below cutoff^2
std::vector<std::pair<Int, int>> factor_int(Int n) {
    n = abs_int(n);
    std::vector<std::pair<Int, int>> out;
    if (n <= 1) return out;
    const long long cutoff = 1000000;
    for (long long f = 2; f <= cutoff && Int(f) * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f != 0) continue;
        int e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        out.emplace_back(Int(f), e);
    }
    if (n > 1) {
        if (n > Int(cutoff) * cutoff)
            throw resource_error("coefficient too large to factor");
        out.emplace_back(n, 1);
    }
    return out;
}

bool is_square_int(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// squarefree representative of the class of n modulo squares
Int square_free(const Int& n) {
    Int d = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factor_int(n))
        if (e % 2 == 1) d *= p;
    return d;
}

Int class_mul(const Int& x, const Int& y) {
    Int g = boost::multiprecision::gcd(abs_int(x), abs_int(y));
    return x * y / (g * g);
}

// subgroup of Q^x/(Q^x)^2 spanned by the given squarefree classes
std::set<Int> class_span(const std::vector<Int>& gens) {
    std::set<Int> span{Int(1)};
    for (const Int& g : gens) {
        if (span.count(g)) continue;
        std::set<Int> bigger = span;
        for (const Int& s : span) bigger.insert(class_mul(s, g));
        span = std::move(bigger);
    }
    return span;
}

int dim2_of_count(size_t count) {
    int d = 0;
    while ((size_t(1) << d) < count) ++d;
    return d;
}

// legendre symbol for p an odd prime and u a unit
bool is_qr(const Int& u, const Int& p) {
    Int r = boost::multiprecision::powm(((u % p) + p) % p, (p - 1) / 2, p);
    return r == 1;
}

// decides whether f(u) = A4 u^4 + A2 u^2 + A0 takes a square value in Q_p
// on some u in the disk u0 + p^k Z_p
struct QuarticDisks {
    Int a4, a2, a0, p;
    int cap = 32;

    bool soluble(const Int& u0, const Int& pk, int k) const {
        Int u2 = u0 * u0;
        Int f = a4 * u2 * u2 + a2 * u2 + a0;
        if (f == 0) return true;
        int n = 0;
        Int unit = f;
        while (unit % p == 0) {
            unit /= p;
            ++n;
        }
        if (p == 2 ? n + 3 <= k : n < k) {
            if (n % 2 != 0) return false;
            return p == 2 ? unit % 8 == 1 || unit % 8 == -7 : is_qr(unit, p);
        }
        Int fp = 4 * a4 * u2 * u0 + 2 * a2 * u0;
        if (fp != 0) {
            int m = 0;
            Int fpu = fp;
            while (fpu % p == 0) {
                fpu /= p;
                ++m;
            }
            if (n > 2 * m) return true; // Newton converges to a root, where w = 0
        }
        if (k >= cap) throw precision_error("local solvability undecided");
        for (Int j = 0; j < p; ++j)
            if (soluble(u0 + j * pk, pk * p, k + 1)) return true;
        return false;
    }
};

bool quartic_soluble_at(const Int& d, const Int& a, const Int& c, const Int& p) {
    // chart with e invertible, u = M/e in Z_p
    QuarticDisks main{d, a, c, p};
    if (main.soluble(0, 1, 0)) return true;
    // chart with M invertible, v = e/M in pZ_p
    QuarticDisks flip{c, a, d, p};
    return flip.soluble(0, p, 1);
}

std::vector<Int> squarefree_divisors(const Int& b) {
    std::vector<Int> primes;
    for (const auto& [p, e] : factor_int(b)) primes.push_back(p);
    std::vector<Int> out{Int(1), Int(-1)};
    for (const Int& p : primes) {
        size_t count = out.size();
        for (size_t i = 0; i < count; ++i) out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat curve_rhs(const CurveModel& e, const Rat& x) { return x * (x * x + Rat(e.a) * x + Rat(e.b)); }

struct PointOrder {
    bool operator()(const std::pair<CurvePoint, double>& lhs,
                    const std::pair<CurvePoint, double>& rhs) const {
        if (lhs.first.infinite != rhs.first.infinite) return lhs.first.infinite;
        if (lhs.second != rhs.second) return lhs.second < rhs.second;
        if (lhs.first.x != rhs.first.x) return lhs.first.x < rhs.first.x;
        return lhs.first.y > rhs.first.y;
    }
};

} // namespace

CurveModel::CurveModel(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0 || a * a == 4 * b) throw domain_error("curve model is singular");
}

CurveModel CurveModel::partner() const { return CurveModel(-2 * a, a * a - 4 * b); }

CurvePoint CurvePoint::affine(Rat x, Rat y) {
    CurvePoint p;
    p.infinite = false;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return x == o.x && y == o.y;
}

bool on_curve(const CurveModel& e, const CurvePoint& p) {
    if (p.infinite) return true;
    return p.y * p.y == curve_rhs(e, p.x);
}

double naive_height(const CurveModel& e, const CurvePoint& p) {
    if (!on_curve(e, p)) throw domain_error("point is not on the curve");
    if (p.infinite) return 0.0;
    Int r = boost::multiprecision::lcm(den(p.x), den(p.y));
    Int s = num(p.x) * (r / den(p.x));
    Int t = num(p.y) * (r / den(p.y));
    Int sup = std::max({abs_int(s), abs_int(t), r});
    return log_int(sup);
}

std::vector<CurvePoint> point_search(const CurveModel& e, double height_bound) {
    if (height_bound < 0) throw domain_error("height bound must be nonnegative");
    if (height_bound > 14) throw resource_error("height bound too large to search");
    long long h = static_cast<long long>(std::exp(height_bound) * (1 + 1e-12) + 1e-9);

    std::vector<std::pair<CurvePoint, double>> found;
    found.emplace_back(CurvePoint::origin(), 0.0);
    for (long long de = 1; de * de * de <= h; ++de) {
        Int e2 = Int(de) * de, e3 = e2 * de, e4 = e2 * e2;
        for (long long m = -h / de; m * de <= h; ++m) {
            if (de > 1 && std::gcd(((m % de) + de) % de, de) != 1) continue;
            // numerator of x^3 + ax^2 + bx at x = m/de^2, over denominator de^6
            Int im(m);
            Int top = im * (im * im + e.a * im * e2 + e.b * e4);
            if (top < 0 || !is_square_int(top)) continue;
            Int n = boost::multiprecision::sqrt(top);
            if (n > h) continue;
            Rat x(im, e2);
            CurvePoint p = CurvePoint::affine(x, Rat(n, e3));
            double hp = naive_height(e, p);
            found.emplace_back(p, hp);
            if (n != 0) found.emplace_back(CurvePoint::affine(x, Rat(-n, e3)), hp);
        }
    }
    std::sort(found.begin(), found.end(), PointOrder{});
    std::vector<CurvePoint> out;
    for (auto& [p, hp] : found) out.push_back(std::move(p));
    return out;
}

CurvePoint negate_point(const CurveModel& e, const CurvePoint& p) {
    if (!on_curve(e, p)) throw domain_error("point is not on the curve");
    if (p.infinite) return p;
    return CurvePoint::affine(p.x, -p.y);
}

CurvePoint add_points(const CurveModel& e, const CurvePoint& p, const CurvePoint& q) {
    if (!on_curve(e, p) || !on_curve(e, q)) throw domain_error("point is not on the curve");
    if (p.infinite) return q;
    if (q.infinite) return p;
    Rat lambda;
    if (p.x == q.x) {
        if (p.y != q.y || p.y == 0) return CurvePoint::origin();
        lambda = (3 * p.x * p.x + 2 * Rat(e.a) * p.x + Rat(e.b)) / (2 * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lambda * lambda - Rat(e.a) - p.x - q.x;
    Rat y3 = lambda * (p.x - x3) - p.y;
    return CurvePoint::affine(x3, y3);
}

bool is_torsion(const CurveModel& e, const CurvePoint& p) {
    if (p.infinite) return true;
    CurvePoint q = p;
    for (int k = 2; k <= 12; ++k) {
        q = add_points(e, q, p);
        if (q.infinite) return true;
    }
    return false;
}

Int square_class(const CurveModel& e, const CurvePoint& p) {
    if (!on_curve(e, p)) throw domain_error("point is not on the curve");
    if (p.infinite) return 1;
    if (p.x == 0) return square_free(e.b);
    return square_free(num(p.x) * den(p.x));
}

bool local_solvable(const CurveModel& e, const Int& d, const Int& place) {
    if (d == 0 || e.b % d != 0) throw domain_error("class must divide the coefficient");
    if (square_free(d) != d) throw domain_error("class must be squarefree");
    Int c = e.b / d;
    if (place == 0) return d > 0 || c > 0 || (e.a > 0 && e.a * e.a > 4 * e.b);
    if (place < 2) throw domain_error("place must be a prime or zero");
    if (place != 2 && !is_odd_prime(place.convert_to<long long>()))
        throw domain_error("place must be a prime or zero");
    return quartic_soluble_at(d, e.a, c, place);
}

int SelmerSet::dim2() const { return dim2_of_count(classes.size() + undecided.size()); }

SelmerSet selmer_set(const CurveModel& e) {
    std::vector<Int> places{0, 2};
    for (const auto& [p, ex] : factor_int(e.b)) places.push_back(p);
    for (const auto& [p, ex] : factor_int(e.a * e.a - 4 * e.b)) places.push_back(p);
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    SelmerSet out;
    for (const Int& d : squarefree_divisors(e.b)) {
        bool ok = true, decided = true;
        for (const Int& v : places) {
            try {
                if (!local_solvable(e, d, v)) {
                    ok = false;
                    break;
                }
            } catch (const precision_error&) {
                decided = false;
            }
        }
        if (!ok) continue;
        if (decided)
            out.classes.push_back(d);
        else
            out.undecided.push_back(d);
    }
    return out;
}

int two_descent_bound(const CurveModel& e) {
    return selmer_set(e).dim2() + selmer_set(e.partner()).dim2() - 2;
}

DescentReport conditional_rank(const CurveModel& e, double max_height) {
    if (max_height < 0) throw domain_error("height bound must be nonnegative");
    CurveModel twin = e.partner();

    DescentReport rep;
    rep.a = e.a;
    rep.b = e.b;
    rep.selmer = selmer_set(e);
    rep.partner_selmer = selmer_set(twin);
    rep.flagged = !rep.selmer.undecided.empty() || !rep.partner_selmer.undecided.empty();
    rep.selmer_upper_bound = rep.selmer.dim2() + rep.partner_selmer.dim2() - 2;

    std::vector<CurvePoint> pts, twin_pts;
    for (int step = 0;; ++step) {
        double h = std::min(static_cast<double>(step), max_height);
        pts = point_search(e, h);
        twin_pts = point_search(twin, h);
        std::vector<Int> own, other;
        for (const auto& p : pts) own.push_back(square_class(e, p));
        for (const auto& p : twin_pts) other.push_back(square_class(twin, p));
        int lower = dim2_of_count(class_span(own).size()) +
                    dim2_of_count(class_span(other).size()) - 2;
        rep.rank_lower_bound = std::max(0, lower);
        if (rep.rank_lower_bound >= rep.selmer_upper_bound || h >= max_height) break;
    }
    if (rep.rank_lower_bound > rep.selmer_upper_bound)
        throw std::logic_error("lower bound exceeded the upper bound");
    rep.rank_determined = rep.rank_lower_bound == rep.selmer_upper_bound;

    rep.points_found = pts;
    for (const auto& p : pts) rep.heights.push_back(naive_height(e, p));

    std::set<Int> span{Int(1)};
    for (const auto& p : pts) {
        Int c = square_class(e, p);
        if (span.count(c)) continue;
        std::set<Int> bigger = span;
        for (const Int& s : span) bigger.insert(class_mul(s, c));
        span = std::move(bigger);
        if (!is_torsion(e, p)) rep.generators.push_back(p);
    }
    return rep;
}

} // namespace ptk
