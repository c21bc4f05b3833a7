#include "ptk/ffield.hpp"

#include <algorithm>
#include <set>

#include "ptk/errors.hpp"
#include "ptk/group.hpp"

namespace ptk {

namespace {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<long long>; // coefficients mod q, least significant first

Poly decode(long long x, long long q, int len) {
    Poly p(static_cast<size_t>(len), 0);
    for (int i = 0; i < len && x > 0; ++i) {
        p[static_cast<size_t>(i)] = x % q;
        x /= q;
    }
    return p;
}

long long encode(const Poly& p, long long q) {
    long long x = 0;
    for (size_t i = p.size(); i > 0; --i) x = x * q + p[i - 1];
    return x;
}

int deg(const Poly& p) {
    for (size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<int>(i) - 1;
    return -1;
}

// remainder of a by the monic polynomial b
Poly rem(Poly a, const Poly& b, long long q) {
    int db = deg(b);
    for (int i = deg(a); i >= db && db >= 0; --i) {
        long long c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            long long& t = a[static_cast<size_t>(i - db + j)];
            t = (t - c * b[static_cast<size_t>(j)]) % q;
            if (t < 0) t += q;
        }
    }
    if (static_cast<int>(a.size()) > db) a.resize(static_cast<size_t>(std::max(db, 0)));
    return a;
}

bool divides(const Poly& b, const Poly& a, long long q) {
    return deg(rem(a, b, q)) < 0;
}

Poly find_irreducible(long long q, int m) {
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= q;
    for (long long lo = 0; lo < count; ++lo) {
        Poly cand = decode(lo, q, m);
        cand.push_back(1); // monic of degree m
        bool ok = true;
        // trial division by monic polynomials of degree up to m/2
        for (int d = 1; d <= m / 2 && ok; ++d) {
            long long dcount = 1;
            for (int i = 0; i < d; ++i) dcount *= q;
            for (long long t = 0; t < dcount && ok; ++t) {
                Poly div = decode(t, q, d);
                div.push_back(1);
                ok = !divides(div, cand, q);
            }
        }
        if (ok) return cand;
    }
    throw domain_error("no irreducible polynomial found");
}

} // namespace

SmallField::SmallField(long long q, int m) : q_(q), m_(m) {
    if (!is_prime_ll(q)) throw domain_error("field characteristic must be prime");
    if (m < 1) throw domain_error("field degree must be positive");
    size_ = 1;
    for (int i = 0; i < m; ++i) {
        if (size_ > 2000000 / q) throw resource_error("field enumeration budget exceeded");
        size_ *= q;
    }
    modulus_ = find_irreducible(q, m);
}

long long SmallField::add(long long x, long long y) const {
    Poly a = decode(x, q_, m_), b = decode(y, q_, m_);
    for (int i = 0; i < m_; ++i)
        a[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % q_;
    return encode(a, q_);
}

long long SmallField::neg(long long x) const {
    Poly a = decode(x, q_, m_);
    for (auto& c : a) c = (q_ - c) % q_;
    return encode(a, q_);
}

long long SmallField::mul(long long x, long long y) const {
    Poly a = decode(x, q_, m_), b = decode(y, q_, m_);
    Poly prod(static_cast<size_t>(2 * m_), 0);
    for (int i = 0; i < m_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < m_; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % q_;
    }
    return encode(rem(std::move(prod), modulus_, q_), q_);
}

long long SmallField::pow(long long x, long long e) const {
    long long r = 1, b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

KummerReport kummer_h1(long long q, long long n, int m) {
    if (n < 1) throw domain_error("root order must be positive");
    SmallField f(q, m);
    KummerReport rep;
    rep.q = q;
    rep.n = n;
    rep.m = m;

    std::vector<long long> mu;
    for (long long x = 1; x < f.size(); ++x)
        if (f.pow(x, n) == 1) mu.push_back(x);
    std::sort(mu.begin(), mu.end());
    rep.mu_order = static_cast<long long>(mu.size());

    auto pos = [&](long long x) {
        return static_cast<int>(std::lower_bound(mu.begin(), mu.end(), x) - mu.begin());
    };
    int k = static_cast<int>(mu.size());
    std::vector<std::vector<int>> table(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pos(f.mul(mu[static_cast<size_t>(i)], mu[static_cast<size_t>(j)]));
    GroupAction action;
    action.a = FiniteGroup(std::move(table));
    action.g = FiniteGroup::cyclic(m);
    action.act.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i) {
        long long x = mu[static_cast<size_t>(i)];
        for (int s = 0; s < m; ++s) {
            action.act[static_cast<size_t>(s)][static_cast<size_t>(i)] = pos(x);
            x = f.frobenius(x);
        }
    }
    action.validate();
    rep.h1_order = static_cast<long long>(h1_classes(action, z1_cocycles(action)).size());

    std::set<long long> powers;
    for (long long x = 1; x < q; ++x) {
        long long p = 1;
        for (long long e = 0; e < n; ++e) p = p * x % q;
        powers.insert(p);
    }
    rep.unit_index = (q - 1) / static_cast<long long>(powers.size());
    return rep;
}

} // namespace ptk
