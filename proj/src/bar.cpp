#include "ptk/bar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ptk/errors.hpp"
#include "zmatrix.hpp"

namespace ptk {

namespace {

Int mod_reduce(const Int& x, const Int& m) {
    if (m <= 1) return 0;
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

long long power_ll(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::vector<int> decode_tuple(long long idx, int k, int n) {
    std::vector<int> t(static_cast<size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        t[static_cast<size_t>(i)] = static_cast<int>(idx % n);
        idx /= n;
    }
    return t;
}

long long encode_tuple(const std::vector<int>& t, int n) {
    long long idx = 0;
    for (int d : t) idx = idx * n + d;
    return idx;
}

std::vector<Int> cochain_moduli(const BarModule& mod, int k) {
    long long tuples = power_ll(mod.g.n, k);
    std::vector<Int> mu;
    mu.reserve(static_cast<size_t>(tuples) * mod.m.size());
    for (long long t = 0; t < tuples; ++t)
        for (const Int& m : mod.m) mu.push_back(m);
    return mu;
}

// data describing (solutions of D x = 0 mod nu) / (span of icols and mu)
struct QuotientData {
    zmat::Mat kbasis;      // square basis of the solution lattice
    zmat::Mat u, uinv;     // row transform from the Smith form of the relations
    std::vector<Int> d;    // all invariant factors
};

QuotientData quotient_of_lattices(const zmat::Mat& dmat, const std::vector<Int>& nu,
                                  const std::vector<Int>& mu, const zmat::Mat& icols) {
    int dim = static_cast<int>(mu.size());
    QuotientData q;
    if (dim == 0) return q;

    zmat::Mat gen;
    if (nu.empty()) {
        gen = zmat::identity(dim);
    } else {
        int rows = static_cast<int>(nu.size());
        zmat::Mat stacked = zmat::zero(rows, dim + rows);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < dim; ++j)
                stacked[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    dmat[static_cast<size_t>(i)][static_cast<size_t>(j)];
            stacked[static_cast<size_t>(i)][static_cast<size_t>(dim + i)] = nu[static_cast<size_t>(i)];
        }
        zmat::Mat ker = zmat::kernel(std::move(stacked));
        gen = zmat::zero(dim, zmat::cols(ker) + dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < zmat::cols(ker); ++j)
                gen[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    ker[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int i = 0; i < dim; ++i)
            gen[static_cast<size_t>(i)][static_cast<size_t>(zmat::cols(ker) + i)] = mu[static_cast<size_t>(i)];
    }
    std::vector<int> piv = zmat::column_echelon(gen, nullptr);
    if (static_cast<int>(piv.size()) != dim)
        throw std::logic_error("solution lattice lost full rank");
    q.kbasis = zmat::zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            q.kbasis[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                gen[static_cast<size_t>(i)][static_cast<size_t>(j)];

    zmat::Mat rel = zmat::zero(dim, zmat::cols(icols) + dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < zmat::cols(icols); ++j)
            rel[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                icols[static_cast<size_t>(i)][static_cast<size_t>(j)];
        rel[static_cast<size_t>(i)][static_cast<size_t>(zmat::cols(icols) + i)] = mu[static_cast<size_t>(i)];
    }
    zmat::Mat y = zmat::solve_matrix(q.kbasis, rel);
    zmat::Snf s = zmat::snf(std::move(y));
    q.u = std::move(s.u);
    q.uinv = std::move(s.uinv);
    q.d = std::move(s.d);
    for (const Int& x : q.d)
        if (x == 0) throw std::logic_error("relation lattice lost full rank");
    return q;
}

std::vector<Int> nontrivial_factors(const std::vector<Int>& d) {
    std::vector<Int> out;
    for (const Int& x : d)
        if (x > 1) out.push_back(x);
    return out;
}

} // namespace

Int BarModule::order() const {
    Int n = 1;
    for (const Int& x : m) n *= x;
    return n;
}

void BarModule::validate() const {
    g.validate();
    int r = rank();
    for (const Int& x : m)
        if (x < 1) throw domain_error("module moduli must be positive");
    if (static_cast<int>(act.size()) != g.n) throw domain_error("malformed module action");
    for (const IntMat& a : act) {
        if (static_cast<int>(a.size()) != r) throw domain_error("malformed module action");
        for (const auto& row : a)
            if (static_cast<int>(row.size()) != r) throw domain_error("malformed module action");
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int want = i == j ? 1 : 0;
            if (mod_reduce(act[0][static_cast<size_t>(i)][static_cast<size_t>(j)] - want,
                           m[static_cast<size_t>(i)]) != 0)
                throw domain_error("identity must act trivially");
        }
    for (int s = 0; s < g.n; ++s)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (mod_reduce(m[static_cast<size_t>(j)] *
                                   act[static_cast<size_t>(s)][static_cast<size_t>(i)][static_cast<size_t>(j)],
                               m[static_cast<size_t>(i)]) != 0)
                    throw domain_error("module action is not well defined");
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t) {
            IntMat st = zmat::mul(act[static_cast<size_t>(s)], act[static_cast<size_t>(t)]);
            const IntMat& want = act[static_cast<size_t>(g.op(s, t))];
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (mod_reduce(st[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                       want[static_cast<size_t>(i)][static_cast<size_t>(j)],
                                   m[static_cast<size_t>(i)]) != 0)
                        throw domain_error("module action does not compose");
        }
}

BarModule BarModule::trivial(const FiniteGroup& g, std::vector<Int> moduli) {
    BarModule mod;
    mod.g = g;
    mod.m = std::move(moduli);
    mod.act.assign(static_cast<size_t>(g.n), zmat::identity(mod.rank()));
    return mod;
}

BarModule BarModule::zero(const FiniteGroup& g) { return trivial(g, {}); }

long long cochain_dim(const BarModule& mod, int k) {
    if (k < 0) throw domain_error("cochain degree must be nonnegative");
    return power_ll(mod.g.n, k) * mod.rank();
}

IntMat bar_differential(const BarModule& mod, int k) {
    if (k < 0) throw domain_error("cochain degree must be nonnegative");
    int n = mod.g.n, r = mod.rank();
    long long rows = cochain_dim(mod, k + 1);
    long long colsn = cochain_dim(mod, k);
    zmat::Mat d = zmat::zero(static_cast<int>(rows), static_cast<int>(colsn));
    long long stuples = power_ll(n, k + 1);
    for (long long si = 0; si < stuples; ++si) {
        std::vector<int> s = decode_tuple(si, k + 1, n);
        long long rbase = si * r;
        // leading term: the first entry acts on the value at the tail
        {
            std::vector<int> tail(s.begin() + 1, s.end());
            long long cbase = encode_tuple(tail, n) * r;
            const IntMat& a = mod.act[static_cast<size_t>(s[0])];
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    d[static_cast<size_t>(rbase + i)][static_cast<size_t>(cbase + j)] +=
                        a[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        // interior terms: merge adjacent entries, alternating signs
        for (int i = 1; i <= k; ++i) {
            std::vector<int> merged;
            merged.reserve(static_cast<size_t>(k));
            for (int j = 0; j < i - 1; ++j) merged.push_back(s[static_cast<size_t>(j)]);
            merged.push_back(mod.g.op(s[static_cast<size_t>(i - 1)], s[static_cast<size_t>(i)]));
            for (int j = i + 1; j <= k; ++j) merged.push_back(s[static_cast<size_t>(j)]);
            long long cbase = encode_tuple(merged, n) * r;
            int sign = i % 2 == 0 ? 1 : -1;
            for (int j = 0; j < r; ++j)
                d[static_cast<size_t>(rbase + j)][static_cast<size_t>(cbase + j)] += sign;
        }
        // trailing term: drop the last entry
        {
            std::vector<int> head(s.begin(), s.end() - 1);
            long long cbase = encode_tuple(head, n) * r;
            int sign = (k + 1) % 2 == 0 ? 1 : -1;
            for (int j = 0; j < r; ++j)
                d[static_cast<size_t>(rbase + j)][static_cast<size_t>(cbase + j)] += sign;
        }
    }
    return d;
}

CohomologyGroup::CohomologyGroup(const BarModule& mod, int k, long long budget) : k_(k) {
    mod.validate();
    if (k < 0) throw domain_error("cochain degree must be nonnegative");
    if (cochain_dim(mod, k + 1) > budget)
        throw resource_error("cochain dimension budget exceeded");
    dim_ = cochain_dim(mod, k);
    mu_ = cochain_moduli(mod, k);
    IntMat up = bar_differential(mod, k);
    std::vector<Int> nu = cochain_moduli(mod, k + 1);
    zmat::Mat icols = k >= 1 ? bar_differential(mod, k - 1)
                             : zmat::zero(static_cast<int>(dim_), 0);
    QuotientData q = quotient_of_lattices(up, nu, mu_, icols);
    kbasis_ = std::move(q.kbasis);
    u_ = std::move(q.u);
    uinv_ = std::move(q.uinv);
    d_ = std::move(q.d);
    nontrivial_ = nontrivial_factors(d_);
}

Int CohomologyGroup::order() const {
    Int n = 1;
    for (const Int& x : nontrivial_) n *= x;
    return n;
}

bool CohomologyGroup::is_cocycle(const std::vector<Int>& v) const {
    if (static_cast<long long>(v.size()) != dim_) return false;
    return zmat::solve(kbasis_, v).has_value();
}

std::vector<Int> CohomologyGroup::canonical(const std::vector<Int>& v) const {
    if (static_cast<long long>(v.size()) != dim_) throw domain_error("cochain has the wrong length");
    auto c = zmat::solve(kbasis_, v);
    if (!c) throw domain_error("cochain is not a cocycle");
    std::vector<Int> t = zmat::mul_vec(u_, *c);
    std::vector<Int> out;
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i] > 1) out.push_back(mod_reduce(t[i], d_[i]));
    return out;
}

Int CohomologyGroup::class_order(const std::vector<Int>& v) const {
    std::vector<Int> t = canonical(v);
    Int order = 1;
    for (size_t i = 0; i < nontrivial_.size(); ++i) {
        Int part = nontrivial_[i] / gcd(nontrivial_[i], t[i]);
        order = lcm(order, part);
    }
    return order;
}

std::vector<std::vector<Int>> CohomologyGroup::elements(long long budget) const {
    Int total = order();
    if (total > budget) throw resource_error("cohomology enumeration budget exceeded");
    std::vector<size_t> pos;
    for (size_t i = 0; i < d_.size(); ++i)
        if (d_[i] > 1) pos.push_back(i);
    std::vector<std::vector<Int>> out;
    std::vector<Int> counter(pos.size(), 0);
    for (;;) {
        std::vector<Int> t(d_.size(), 0);
        for (size_t i = 0; i < pos.size(); ++i) t[pos[i]] = counter[i];
        std::vector<Int> c = zmat::mul_vec(uinv_, t);
        out.push_back(zmat::mul_vec(kbasis_, c));
        size_t carry = 0;
        while (carry < counter.size()) {
            counter[carry] += 1;
            if (counter[carry] < d_[pos[carry]]) break;
            counter[carry] = 0;
            ++carry;
        }
        if (carry == counter.size()) break;
    }
    return out;
}

std::vector<Int> bar_cohomology(const BarModule& mod, int k, long long budget) {
    return CohomologyGroup(mod, k, budget).invariants();
}

std::vector<Int> cyclic_cohomology(const BarModule& mod, int k) {
    mod.validate();
    if (k < 0) throw domain_error("cohomology degree must be nonnegative");
    int gen = -1;
    for (int s = 0; s < mod.g.n; ++s)
        if (mod.g.element_order(s) == mod.g.n) {
            gen = s;
            break;
        }
    if (gen < 0) throw domain_error("group is not cyclic");
    int r = mod.rank();
    zmat::Mat sigma = mod.act[static_cast<size_t>(gen)];
    for (int i = 0; i < r; ++i) sigma[static_cast<size_t>(i)][static_cast<size_t>(i)] -= 1;
    zmat::Mat norm = zmat::zero(r, r);
    for (int s = 0; s < mod.g.n; ++s)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                norm[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    mod.act[static_cast<size_t>(s)][static_cast<size_t>(i)][static_cast<size_t>(j)];
    QuotientData q;
    if (k == 0)
        q = quotient_of_lattices(sigma, mod.m, mod.m, zmat::zero(r, 0));
    else if (k % 2 == 0)
        q = quotient_of_lattices(sigma, mod.m, mod.m, norm);
    else
        q = quotient_of_lattices(norm, mod.m, mod.m, sigma);
    return nontrivial_factors(q.d);
}

void validate_module_map(const BarModule& src, const BarModule& tgt, const IntMat& f) {
    if (src.g.mul != tgt.g.mul) throw domain_error("modules must share the acting group");
    if (static_cast<int>(f.size()) != tgt.rank()) throw domain_error("malformed module map");
    for (const auto& row : f)
        if (static_cast<int>(row.size()) != src.rank()) throw domain_error("malformed module map");
    for (int i = 0; i < tgt.rank(); ++i)
        for (int j = 0; j < src.rank(); ++j)
            if (mod_reduce(src.m[static_cast<size_t>(j)] * f[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           tgt.m[static_cast<size_t>(i)]) != 0)
                throw domain_error("module map is not well defined");
    for (int s = 0; s < src.g.n; ++s) {
        zmat::Mat lhs = zmat::mul(f, src.act[static_cast<size_t>(s)]);
        zmat::Mat rhs = zmat::mul(tgt.act[static_cast<size_t>(s)], f);
        for (int i = 0; i < tgt.rank(); ++i)
            for (int j = 0; j < src.rank(); ++j)
                if (mod_reduce(lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                   rhs[static_cast<size_t>(i)][static_cast<size_t>(j)],
                               tgt.m[static_cast<size_t>(i)]) != 0)
                    throw domain_error("module map is not equivariant");
    }
}

std::vector<Int> map_cochain(const BarModule& src, const BarModule& tgt, const IntMat& f,
                             int k, const std::vector<Int>& x) {
    long long tuples = power_ll(src.g.n, k);
    if (static_cast<long long>(x.size()) != tuples * src.rank())
        throw domain_error("cochain has the wrong length");
    std::vector<Int> y(static_cast<size_t>(tuples * tgt.rank()), 0);
    for (long long t = 0; t < tuples; ++t)
        for (int i = 0; i < tgt.rank(); ++i) {
            Int acc = 0;
            for (int j = 0; j < src.rank(); ++j)
                acc += f[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       x[static_cast<size_t>(t * src.rank() + j)];
            y[static_cast<size_t>(t * tgt.rank() + i)] = mod_reduce(acc, tgt.m[static_cast<size_t>(i)]);
        }
    return y;
}

void ShortExactSequence::validate() const {
    validate_module_map(a, b, alpha);
    validate_module_map(b, c, pi);
    zmat::Mat comp = zmat::mul(pi, alpha);
    for (int i = 0; i < c.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            if (mod_reduce(comp[static_cast<size_t>(i)][static_cast<size_t>(j)],
                           c.m[static_cast<size_t>(i)]) != 0)
                throw domain_error("composite of the sequence maps is nonzero");
    if (a.order() * c.order() != b.order())
        throw domain_error("sequence orders are inconsistent");
    QuotientData ka = quotient_of_lattices(alpha, b.m, a.m, zmat::zero(a.rank(), 0));
    Int ka_order = 1;
    for (const Int& x : ka.d) ka_order *= x;
    if (ka_order != 1) throw domain_error("first sequence map is not injective");
    QuotientData kp = quotient_of_lattices(pi, c.m, b.m, zmat::zero(b.rank(), 0));
    Int kp_order = 1;
    for (const Int& x : kp.d) kp_order *= x;
    if (kp_order != a.order()) throw domain_error("sequence is not exact in the middle");
}

std::vector<Int> connecting_cochain(const ShortExactSequence& s, int k,
                                    const std::vector<Int>& z) {
    int ra = s.a.rank(), rb = s.b.rank(), rc = s.c.rank();
    long long tuples = power_ll(s.c.g.n, k);
    if (static_cast<long long>(z.size()) != tuples * rc)
        throw domain_error("cochain has the wrong length");
    // a cocycle is required for the result to land in the kernel
    if (rc > 0) {
        zmat::Mat d = bar_differential(s.c, k);
        std::vector<Int> w = zmat::mul_vec(d, z);
        for (size_t i = 0; i < w.size(); ++i)
            if (mod_reduce(w[i], s.c.m[i % static_cast<size_t>(rc)]) != 0)
                throw domain_error("cochain is not a cocycle");
    }
    // integer section of pi
    zmat::Mat pisys = zmat::zero(rc, rb + rc);
    for (int i = 0; i < rc; ++i) {
        for (int j = 0; j < rb; ++j)
            pisys[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s.pi[static_cast<size_t>(i)][static_cast<size_t>(j)];
        pisys[static_cast<size_t>(i)][static_cast<size_t>(rb + i)] = s.c.m[static_cast<size_t>(i)];
    }
    zmat::Mat section = zmat::zero(rb, rc);
    for (int j = 0; j < rc; ++j) {
        std::vector<Int> e(static_cast<size_t>(rc), 0);
        e[static_cast<size_t>(j)] = 1;
        auto sol = zmat::solve(pisys, e);
        if (!sol) throw domain_error("second sequence map is not surjective");
        for (int i = 0; i < rb; ++i)
            section[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(i)];
    }
    // lift, differentiate, pull back
    std::vector<Int> lift(static_cast<size_t>(tuples * rb), 0);
    for (long long t = 0; t < tuples; ++t)
        for (int i = 0; i < rb; ++i) {
            Int acc = 0;
            for (int j = 0; j < rc; ++j)
                acc += section[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       z[static_cast<size_t>(t * rc + j)];
            lift[static_cast<size_t>(t * rb + i)] = acc;
        }
    std::vector<Int> w = zmat::mul_vec(bar_differential(s.b, k), lift);
    zmat::Mat asys = zmat::zero(rb, ra + rb);
    for (int i = 0; i < rb; ++i) {
        for (int j = 0; j < ra; ++j)
            asys[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                s.alpha[static_cast<size_t>(i)][static_cast<size_t>(j)];
        asys[static_cast<size_t>(i)][static_cast<size_t>(ra + i)] = s.b.m[static_cast<size_t>(i)];
    }
    long long up_tuples = power_ll(s.c.g.n, k + 1);
    std::vector<Int> out(static_cast<size_t>(up_tuples * ra), 0);
    for (long long t = 0; t < up_tuples; ++t) {
        std::vector<Int> block(static_cast<size_t>(rb));
        for (int i = 0; i < rb; ++i) block[static_cast<size_t>(i)] = w[static_cast<size_t>(t * rb + i)];
        auto sol = zmat::solve(asys, block);
        if (!sol) throw domain_error("lifted differential misses the kernel");
        for (int i = 0; i < ra; ++i)
            out[static_cast<size_t>(t * ra + i)] =
                mod_reduce((*sol)[static_cast<size_t>(i)], s.a.m[static_cast<size_t>(i)]);
    }
    return out;
}

LesReport les_check(const ShortExactSequence& s, long long element_budget) {
    s.validate();
    CohomologyGroup ha0(s.a, 0), hb0(s.b, 0), hc0(s.c, 0);
    CohomologyGroup ha1(s.a, 1), hb1(s.b, 1), hc1(s.c, 1);
    CohomologyGroup ha2(s.a, 2);
    LesReport rep;
    for (const CohomologyGroup* h : {&ha0, &hb0, &hc0, &ha1, &hb1, &hc1, &ha2})
        rep.h_orders.push_back(h->order());

    auto ea0 = ha0.elements(element_budget);
    auto eb0 = hb0.elements(element_budget);
    auto ec0 = hc0.elements(element_budget);
    auto ea1 = ha1.elements(element_budget);
    auto eb1 = hb1.elements(element_budget);
    auto ec1 = hc1.elements(element_budget);

    auto zero_of = [](const CohomologyGroup& h) {
        return std::vector<Int>(h.invariants().size(), 0);
    };

    using Canon = std::vector<Int>;
    auto node = [&](const std::vector<std::vector<Int>>& source,
                    const std::function<std::vector<Int>(const std::vector<Int>&)>& fin,
                    const CohomologyGroup& here, const std::vector<std::vector<Int>>& own,
                    const std::function<std::vector<Int>(const std::vector<Int>&)>& fout,
                    const CohomologyGroup& next) {
        std::set<Canon> image, kernel;
        for (const auto& x : source) image.insert(here.canonical(fin(x)));
        Canon zero_next = zero_of(next);
        for (const auto& y : own)
            if (next.canonical(fout(y)) == zero_next) kernel.insert(here.canonical(y));
        return image == kernel;
    };

    auto alpha0 = [&](const std::vector<Int>& x) { return map_cochain(s.a, s.b, s.alpha, 0, x); };
    auto pi0 = [&](const std::vector<Int>& x) { return map_cochain(s.b, s.c, s.pi, 0, x); };
    auto delta0 = [&](const std::vector<Int>& x) { return connecting_cochain(s, 0, x); };
    auto alpha1 = [&](const std::vector<Int>& x) { return map_cochain(s.a, s.b, s.alpha, 1, x); };
    auto pi1 = [&](const std::vector<Int>& x) { return map_cochain(s.b, s.c, s.pi, 1, x); };
    auto delta1 = [&](const std::vector<Int>& x) { return connecting_cochain(s, 1, x); };

    bool ok = node(ea0, alpha0, hb0, eb0, pi0, hc0);
    ok = node(eb0, pi0, hc0, ec0, delta0, ha1) && ok;
    ok = node(ec0, delta0, ha1, ea1, alpha1, hb1) && ok;
    ok = node(ea1, alpha1, hb1, eb1, pi1, hc1) && ok;
    ok = node(eb1, pi1, hc1, ec1, delta1, ha2) && ok;
    rep.exact = ok;
    return rep;
}

namespace {

long long rand_below(std::mt19937_64& rng, long long n) {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
}

long long random_unit(std::mt19937_64& rng, long long m) {
    if (m == 1) return 0;
    for (;;) {
        long long u = 1 + rand_below(rng, m - 1);
        if (std::gcd(u, m) == 1) return u;
    }
}

long long pow_mod_ll(long long b, long long e, long long m) {
    if (m == 1) return 0;
    long long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

ShortExactSequence random_sequence(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    const long long pool[] = {2, 3, 4, 6, 8, 9, 12};
    int gorder = 1 + static_cast<int>(rand_below(rng, 6));
    FiniteGroup g = FiniteGroup::cyclic(gorder);
    int r = 1 + static_cast<int>(rand_below(rng, 3));
    std::vector<long long> m(static_cast<size_t>(r));
    for (auto& x : m) x = pool[rand_below(rng, 7)];

    // monomial generator matrix: a modulus-preserving permutation whose
    // order divides |G|, with unit scalings whose cycle products have the
    // matching power equal to one
    std::vector<int> perm(static_cast<size_t>(r), -1);
    std::vector<long long> scal(static_cast<size_t>(r), 1);
    std::vector<long long> divisors;
    for (long long d = 1; d <= gorder; ++d)
        if (gorder % d == 0) divisors.push_back(d);
    for (long long modulus : pool) {
        std::vector<int> idx;
        for (int i = 0; i < r; ++i)
            if (m[static_cast<size_t>(i)] == modulus) idx.push_back(i);
        for (size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[static_cast<size_t>(rand_below(rng, static_cast<long long>(i)))]);
        size_t at = 0;
        while (at < idx.size()) {
            long long rem = static_cast<long long>(idx.size() - at);
            long long d;
            do {
                d = divisors[rand_below(rng, static_cast<long long>(divisors.size()))];
            } while (d > rem);
            for (long long j = 0; j < d; ++j) {
                int from = idx[at + static_cast<size_t>(j)];
                int to = idx[at + static_cast<size_t>((j + 1) % d)];
                perm[static_cast<size_t>(from)] = to;
                scal[static_cast<size_t>(from)] = random_unit(rng, modulus);
            }
            long long prod = 1 % modulus;
            for (long long j = 0; j < d; ++j)
                prod = prod * scal[static_cast<size_t>(idx[at + static_cast<size_t>(j)])] % modulus;
            // replace the last scalar so the cycle product lands on a unit
            // whose (|G|/d)-th power is one
            std::vector<long long> good;
            for (long long u = 1; u < modulus; ++u)
                if (std::gcd(u, modulus) == 1 && pow_mod_ll(u, gorder / d, modulus) == 1)
                    good.push_back(u);
            if (modulus == 1) good.push_back(0);
            long long target = good[static_cast<size_t>(rand_below(rng, static_cast<long long>(good.size())))];
            long long pinv = 1;
            for (long long t = 1; t < modulus; ++t)
                if (prod * t % modulus == 1) pinv = t;
            size_t last = static_cast<size_t>(idx[at + static_cast<size_t>(d - 1)]);
            scal[last] = scal[last] * (pinv * target % modulus) % modulus;
            at += static_cast<size_t>(d);
        }
    }
    zmat::Mat sigma = zmat::zero(r, r);
    for (int j = 0; j < r; ++j)
        sigma[static_cast<size_t>(perm[static_cast<size_t>(j)])][static_cast<size_t>(j)] =
            scal[static_cast<size_t>(j)];

    BarModule b;
    b.g = g;
    for (long long x : m) b.m.push_back(x);
    b.act.assign(static_cast<size_t>(gorder), zmat::identity(r));
    for (int s = 1; s < gorder; ++s) {
        zmat::Mat prev = b.act[static_cast<size_t>(s - 1)];
        zmat::Mat cur = zmat::mul(sigma, prev);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                cur[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    mod_reduce(cur[static_cast<size_t>(i)][static_cast<size_t>(j)], b.m[static_cast<size_t>(i)]);
        b.act[static_cast<size_t>(s)] = cur;
    }

    // stable subgroup generated by the orbits of one or two random vectors
    int ngens = 1 + static_cast<int>(rand_below(rng, 2));
    zmat::Mat span = zmat::zero(r, ngens * gorder + r);
    int col = 0;
    for (int t = 0; t < ngens; ++t) {
        std::vector<Int> x(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) x[static_cast<size_t>(i)] = rand_below(rng, m[static_cast<size_t>(i)]);
        for (int s = 0; s < gorder; ++s) {
            std::vector<Int> y = zmat::mul_vec(b.act[static_cast<size_t>(s)], x);
            for (int i = 0; i < r; ++i)
                span[static_cast<size_t>(i)][static_cast<size_t>(col)] =
                    mod_reduce(y[static_cast<size_t>(i)], b.m[static_cast<size_t>(i)]);
            ++col;
        }
    }
    for (int i = 0; i < r; ++i)
        span[static_cast<size_t>(i)][static_cast<size_t>(col + i)] = b.m[static_cast<size_t>(i)];
    std::vector<int> piv = zmat::column_echelon(span, nullptr);
    if (static_cast<int>(piv.size()) != r) throw std::logic_error("subgroup lattice lost full rank");
    zmat::Mat w = zmat::zero(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] = span[static_cast<size_t>(i)][static_cast<size_t>(j)];

    ShortExactSequence seq;
    seq.b = b;

    // the subgroup with its induced action
    zmat::Mat mdiag = zmat::zero(r, r);
    for (int i = 0; i < r; ++i) mdiag[static_cast<size_t>(i)][static_cast<size_t>(i)] = b.m[static_cast<size_t>(i)];
    zmat::Mat rel = zmat::solve_matrix(w, mdiag);
    zmat::Snf sa = zmat::snf(rel);
    std::vector<int> apos;
    for (int i = 0; i < r; ++i)
        if (sa.d[static_cast<size_t>(i)] > 1) apos.push_back(i);
    int ra = static_cast<int>(apos.size());
    seq.a.g = g;
    for (int i : apos) seq.a.m.push_back(sa.d[static_cast<size_t>(i)]);
    seq.alpha = zmat::zero(r, ra);
    for (int jj = 0; jj < ra; ++jj) {
        std::vector<Int> e(static_cast<size_t>(r), 0);
        e[static_cast<size_t>(apos[static_cast<size_t>(jj)])] = 1;
        std::vector<Int> gen = zmat::mul_vec(w, zmat::mul_vec(sa.uinv, e));
        for (int i = 0; i < r; ++i)
            seq.alpha[static_cast<size_t>(i)][static_cast<size_t>(jj)] =
                mod_reduce(gen[static_cast<size_t>(i)], b.m[static_cast<size_t>(i)]);
    }
    seq.a.act.assign(static_cast<size_t>(gorder), zmat::zero(ra, ra));
    for (int s = 0; s < gorder; ++s)
        for (int jj = 0; jj < ra; ++jj) {
            std::vector<Int> v(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                v[static_cast<size_t>(i)] = seq.alpha[static_cast<size_t>(i)][static_cast<size_t>(jj)];
            std::vector<Int> img = zmat::mul_vec(b.act[static_cast<size_t>(s)], v);
            auto y = zmat::solve(w, img);
            if (!y) throw std::logic_error("subgroup is not stable");
            std::vector<Int> t = zmat::mul_vec(sa.u, *y);
            for (int ii = 0; ii < ra; ++ii)
                seq.a.act[static_cast<size_t>(s)][static_cast<size_t>(ii)][static_cast<size_t>(jj)] =
                    mod_reduce(t[static_cast<size_t>(apos[static_cast<size_t>(ii)])],
                               seq.a.m[static_cast<size_t>(ii)]);
        }

    // the quotient
    zmat::Snf sc = zmat::snf(w);
    std::vector<int> cpos;
    for (int i = 0; i < r; ++i)
        if (sc.d[static_cast<size_t>(i)] > 1) cpos.push_back(i);
    int rc = static_cast<int>(cpos.size());
    seq.c.g = g;
    for (int i : cpos) seq.c.m.push_back(sc.d[static_cast<size_t>(i)]);
    seq.pi = zmat::zero(rc, r);
    for (int ii = 0; ii < rc; ++ii)
        for (int j = 0; j < r; ++j)
            seq.pi[static_cast<size_t>(ii)][static_cast<size_t>(j)] =
                mod_reduce(sc.u[static_cast<size_t>(cpos[static_cast<size_t>(ii)])][static_cast<size_t>(j)],
                           seq.c.m[static_cast<size_t>(ii)]);
    seq.c.act.assign(static_cast<size_t>(gorder), zmat::zero(rc, rc));
    for (int s = 0; s < gorder; ++s)
        for (int jj = 0; jj < rc; ++jj) {
            std::vector<Int> e(static_cast<size_t>(r), 0);
            e[static_cast<size_t>(cpos[static_cast<size_t>(jj)])] = 1;
            std::vector<Int> x = zmat::mul_vec(sc.uinv, e);
            std::vector<Int> t = zmat::mul_vec(sc.u, zmat::mul_vec(b.act[static_cast<size_t>(s)], x));
            for (int ii = 0; ii < rc; ++ii)
                seq.c.act[static_cast<size_t>(s)][static_cast<size_t>(ii)][static_cast<size_t>(jj)] =
                    mod_reduce(t[static_cast<size_t>(cpos[static_cast<size_t>(ii)])],
                               seq.c.m[static_cast<size_t>(ii)]);
        }

    seq.validate();
    return seq;
}

Int cs_class(const FiniteGroup& g, const std::vector<int>& rho, long long n, long long budget) {
    if (n < 1) throw domain_error("target order must be positive");
    if (static_cast<int>(rho.size()) != g.n) throw domain_error("malformed homomorphism");
    for (int x : rho)
        if (x < 0 || x >= n) throw domain_error("homomorphism value out of range");
    if (rho[0] != 0) throw domain_error("map is not a homomorphism");
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (rho[static_cast<size_t>(g.op(a, b))] !=
                (rho[static_cast<size_t>(a)] + rho[static_cast<size_t>(b)]) % n)
                throw domain_error("map is not a homomorphism");
    BarModule mod = BarModule::trivial(g, {Int(n)});
    CohomologyGroup h3(mod, 3, budget);
    long long tuples = power_ll(g.n, 3);
    std::vector<Int> x(static_cast<size_t>(tuples), 0);
    for (long long t = 0; t < tuples; ++t) {
        std::vector<int> s = decode_tuple(t, 3, g.n);
        long long carry = (rho[static_cast<size_t>(s[1])] + rho[static_cast<size_t>(s[2])]) >= n ? 1 : 0;
        x[static_cast<size_t>(t)] = rho[static_cast<size_t>(s[0])] * carry % n;
    }
    return h3.class_order(x);
}

} // namespace ptk
