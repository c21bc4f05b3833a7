#include "ptk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ptk/errors.hpp"

namespace ptk {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : mul(std::move(table)) {
    n = static_cast<int>(mul.size());
    inv.assign(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0) inv[static_cast<size_t>(a)] = b;
    validate();
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = op(x, a);
        ++k;
    }
    return k;
}

void FiniteGroup::validate() const {
    if (n < 1 || static_cast<int>(mul.size()) != n) throw domain_error("malformed group table");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n) throw domain_error("malformed group table");
        for (int x : row)
            if (x < 0 || x >= n) throw domain_error("group table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (op(0, a) != a || op(a, 0) != a) throw domain_error("element 0 is not an identity");
    if (static_cast<int>(inv.size()) != n) throw domain_error("malformed inverse table");
    for (int a = 0; a < n; ++a) {
        int b = inv[static_cast<size_t>(a)];
        if (b < 0 || b >= n || op(a, b) != 0 || op(b, a) != 0)
            throw domain_error("missing inverse in group table");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw domain_error("group table is not associative");
}

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw domain_error("cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int m) {
    if (m < 1) throw domain_error("dihedral parameter must be positive");
    int n = 2 * m;
    auto idx = [m](int flip, int rot) { return flip * m + ((rot % m) + m) % m; };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < m; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < m; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + (f2 ? -r1 : r1))
                    int rot = f2 ? r2 - r1 : r2 + r1;
                    t[static_cast<size_t>(idx(f1, r1))][static_cast<size_t>(idx(f2, r2))] =
                        idx((f1 + f2) % 2, rot);
                }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
    int n = g.n * h.n;
    auto idx = [&](int a, int b) { return a * h.n + b; };
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int b1 = 0; b1 < h.n; ++b1)
            for (int a2 = 0; a2 < g.n; ++a2)
                for (int b2 = 0; b2 < h.n; ++b2)
                    t[static_cast<size_t>(idx(a1, b1))][static_cast<size_t>(idx(a2, b2))] =
                        idx(g.op(a1, a2), h.op(b1, b2));
    return FiniteGroup(std::move(t));
}

Subgroup span_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    for (int x : gens)
        if (x < 0 || x >= g.n) throw domain_error("generator out of range");
    std::vector<bool> in(static_cast<size_t>(g.n), false);
    in[0] = true;
    std::vector<int> work{0};
    for (int x : gens)
        if (!in[static_cast<size_t>(x)]) {
            in[static_cast<size_t>(x)] = true;
            work.push_back(x);
        }
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < work.size(); ++j) {
            int y = g.op(work[i], work[j]);
            if (!in[static_cast<size_t>(y)]) {
                in[static_cast<size_t>(y)] = true;
                work.push_back(y);
            }
        }
    Subgroup s;
    for (int x = 0; x < g.n; ++x)
        if (in[static_cast<size_t>(x)]) s.elements.push_back(x);
    int m = static_cast<int>(s.elements.size());
    auto pos = [&](int x) {
        return static_cast<int>(std::lower_bound(s.elements.begin(), s.elements.end(), x) -
                                s.elements.begin());
    };
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pos(g.op(s.elements[static_cast<size_t>(i)], s.elements[static_cast<size_t>(j)]));
    s.group = FiniteGroup(std::move(t));
    return s;
}

void GroupAction::validate() const {
    g.validate();
    a.validate();
    if (static_cast<int>(act.size()) != g.n) throw domain_error("malformed action table");
    for (const auto& row : act) {
        if (static_cast<int>(row.size()) != a.n) throw domain_error("malformed action table");
        for (int x : row)
            if (x < 0 || x >= a.n) throw domain_error("action table entry out of range");
    }
    for (int x = 0; x < a.n; ++x)
        if (apply(0, x) != x) throw domain_error("identity must act trivially");
    for (int s = 0; s < g.n; ++s) {
        std::vector<bool> hit(static_cast<size_t>(a.n), false);
        for (int x = 0; x < a.n; ++x) {
            int y = apply(s, x);
            if (hit[static_cast<size_t>(y)]) throw domain_error("action is not by bijections");
            hit[static_cast<size_t>(y)] = true;
        }
        for (int x = 0; x < a.n; ++x)
            for (int y = 0; y < a.n; ++y)
                if (apply(s, a.op(x, y)) != a.op(apply(s, x), apply(s, y)))
                    throw domain_error("action is not by homomorphisms");
    }
    for (int s = 0; s < g.n; ++s)
        for (int t = 0; t < g.n; ++t)
            for (int x = 0; x < a.n; ++x)
                if (apply(s, apply(t, x)) != apply(g.op(s, t), x))
                    throw domain_error("action does not compose");
}

GroupAction GroupAction::trivial(const FiniteGroup& g, const FiniteGroup& a) {
    GroupAction act;
    act.g = g;
    act.a = a;
    std::vector<int> id(static_cast<size_t>(a.n));
    std::iota(id.begin(), id.end(), 0);
    act.act.assign(static_cast<size_t>(g.n), id);
    return act;
}

namespace {

// Forces values c(st) = c(s) * s(c(t)) from the pending elements until no
// new value appears; returns false on contradiction.
bool propagate(const GroupAction& action, std::vector<int>& c, std::vector<int> pending,
               std::uint64_t& budget) {
    const FiniteGroup& g = action.g;
    const FiniteGroup& a = action.a;
    while (!pending.empty()) {
        int s = pending.back();
        pending.pop_back();
        for (int t = 0; t < g.n; ++t) {
            if (c[static_cast<size_t>(t)] < 0) continue;
            for (int pass = 0; pass < 2; ++pass) {
                int x = pass ? t : s, y = pass ? s : t;
                if (budget == 0) throw resource_error("cocycle enumeration budget exceeded");
                --budget;
                int u = g.op(x, y);
                int v = a.op(c[static_cast<size_t>(x)],
                             action.apply(x, c[static_cast<size_t>(y)]));
                if (c[static_cast<size_t>(u)] < 0) {
                    c[static_cast<size_t>(u)] = v;
                    pending.push_back(u);
                } else if (c[static_cast<size_t>(u)] != v) {
                    return false;
                }
                if (x == y) break;
            }
        }
    }
    return true;
}

void search(const GroupAction& action, std::vector<int>& c, std::uint64_t& budget,
            std::vector<std::vector<int>>& out) {
    int free_at = -1;
    for (int s = 0; s < action.g.n; ++s)
        if (c[static_cast<size_t>(s)] < 0) {
            free_at = s;
            break;
        }
    if (free_at < 0) {
        out.push_back(c);
        return;
    }
    for (int v = 0; v < action.a.n; ++v) {
        std::vector<int> trial = c;
        trial[static_cast<size_t>(free_at)] = v;
        if (propagate(action, trial, {free_at}, budget)) search(action, trial, budget, out);
    }
}

std::vector<int> twist(const GroupAction& action, const std::vector<int>& c, int u) {
    const FiniteGroup& a = action.a;
    std::vector<int> d(c.size());
    for (int s = 0; s < action.g.n; ++s)
        d[static_cast<size_t>(s)] =
            a.op(a.op(a.inverse(u), c[static_cast<size_t>(s)]), action.apply(s, u));
    return d;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    }
};

} // namespace

std::vector<std::vector<int>> z1_cocycles(const GroupAction& action, std::uint64_t budget) {
    std::vector<int> c(static_cast<size_t>(action.g.n), -1);
    c[0] = 0;
    std::vector<std::vector<int>> out;
    if (propagate(action, c, {0}, budget)) search(action, c, budget, out);
    return out;
}

std::vector<std::vector<int>> h1_classes(const GroupAction& action,
                                         const std::vector<std::vector<int>>& cocycles) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(cocycles.size()); ++i)
        index[cocycles[static_cast<size_t>(i)]] = i;
    UnionFind uf(static_cast<int>(cocycles.size()));
    for (int i = 0; i < static_cast<int>(cocycles.size()); ++i)
        for (int u = 0; u < action.a.n; ++u) {
            auto it = index.find(twist(action, cocycles[static_cast<size_t>(i)], u));
            if (it == index.end())
                throw domain_error("cocycle list is not closed under equivalence");
            uf.unite(i, it->second);
        }
    std::map<int, std::vector<int>> orbits;
    for (int i = 0; i < static_cast<int>(cocycles.size()); ++i)
        orbits[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    std::vector<int> zero(static_cast<size_t>(action.g.n), 0);
    auto zit = index.find(zero);
    if (zit != index.end()) {
        int root = uf.find(zit->second);
        out.push_back(orbits[root]);
        orbits.erase(root);
    }
    for (auto& [root, members] : orbits) out.push_back(members);
    return out;
}

bool is_principal(const GroupAction& action, const std::vector<int>& c) {
    for (int u = 0; u < action.a.n; ++u) {
        bool ok = true;
        for (int s = 0; s < action.g.n && ok; ++s)
            ok = c[static_cast<size_t>(s)] == action.a.op(action.a.inverse(u), action.apply(s, u));
        if (ok) return true;
    }
    return false;
}

GroupAction restrict_action(const GroupAction& action, const Subgroup& h) {
    GroupAction r;
    r.g = h.group;
    r.a = action.a;
    for (int e : h.elements) r.act.push_back(action.act[static_cast<size_t>(e)]);
    return r;
}

std::vector<int> restrict_cocycle(const std::vector<int>& c, const Subgroup& h) {
    std::vector<int> r;
    for (int e : h.elements) r.push_back(c[static_cast<size_t>(e)]);
    return r;
}

std::vector<int> kernel_of_joint_restriction(const GroupAction& action,
                                             const std::vector<std::vector<int>>& cocycles,
                                             const std::vector<std::vector<int>>& classes,
                                             const std::vector<Subgroup>& subgroups) {
    std::vector<GroupAction> restricted;
    restricted.reserve(subgroups.size());
    for (const auto& h : subgroups) restricted.push_back(restrict_action(action, h));
    std::vector<int> kept;
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        const auto& rep = cocycles.at(static_cast<size_t>(classes[static_cast<size_t>(k)].at(0)));
        bool all = true;
        for (size_t j = 0; j < subgroups.size() && all; ++j)
            all = is_principal(restricted[j], restrict_cocycle(rep, subgroups[j]));
        if (all) kept.push_back(k);
    }
    return kept;
}

void validate_torsor(const GroupAction& action, const Torsor& t) {
    int m = t.size();
    if (m != action.a.n) throw domain_error("torsor size must match the structure group");
    if (static_cast<int>(t.gact.size()) != action.g.n) throw domain_error("malformed torsor tables");
    for (const auto& row : t.gact)
        if (static_cast<int>(row.size()) != m) throw domain_error("malformed torsor tables");
    for (const auto& row : t.aact)
        if (static_cast<int>(row.size()) != action.a.n) throw domain_error("malformed torsor tables");
    for (int x = 0; x < m; ++x) {
        if (t.aact[static_cast<size_t>(x)][0] != x) throw domain_error("right action ignores identity");
        std::vector<bool> hit(static_cast<size_t>(m), false);
        for (int a = 0; a < action.a.n; ++a) {
            int y = t.aact[static_cast<size_t>(x)][static_cast<size_t>(a)];
            if (hit[static_cast<size_t>(y)]) throw domain_error("right action is not simply transitive");
            hit[static_cast<size_t>(y)] = true;
            for (int b = 0; b < action.a.n; ++b)
                if (t.aact[static_cast<size_t>(y)][static_cast<size_t>(b)] !=
                    t.aact[static_cast<size_t>(x)][static_cast<size_t>(action.a.op(a, b))])
                    throw domain_error("right action does not compose");
        }
    }
    for (int x = 0; x < m; ++x) {
        if (t.gact[0][static_cast<size_t>(x)] != x) throw domain_error("identity must act trivially");
        for (int s = 0; s < action.g.n; ++s) {
            for (int u = 0; u < action.g.n; ++u)
                if (t.gact[static_cast<size_t>(s)]
                          [static_cast<size_t>(t.gact[static_cast<size_t>(u)][static_cast<size_t>(x)])] !=
                    t.gact[static_cast<size_t>(action.g.op(s, u))][static_cast<size_t>(x)])
                    throw domain_error("torsor group action does not compose");
            for (int a = 0; a < action.a.n; ++a)
                if (t.gact[static_cast<size_t>(s)]
                          [static_cast<size_t>(t.aact[static_cast<size_t>(x)][static_cast<size_t>(a)])] !=
                    t.aact[static_cast<size_t>(t.gact[static_cast<size_t>(s)][static_cast<size_t>(x)])]
                          [static_cast<size_t>(action.apply(s, a))])
                    throw domain_error("torsor actions are incompatible");
        }
    }
}

Torsor torsor_of_cocycle(const GroupAction& action, const std::vector<int>& c) {
    if (static_cast<int>(c.size()) != action.g.n || c.empty() || c[0] != 0)
        throw domain_error("malformed cocycle");
    Torsor t;
    t.gact.assign(static_cast<size_t>(action.g.n), std::vector<int>(static_cast<size_t>(action.a.n)));
    t.aact.assign(static_cast<size_t>(action.a.n), std::vector<int>(static_cast<size_t>(action.a.n)));
    for (int s = 0; s < action.g.n; ++s)
        for (int x = 0; x < action.a.n; ++x)
            t.gact[static_cast<size_t>(s)][static_cast<size_t>(x)] =
                action.a.op(c[static_cast<size_t>(s)], action.apply(s, x));
    for (int x = 0; x < action.a.n; ++x)
        for (int a = 0; a < action.a.n; ++a)
            t.aact[static_cast<size_t>(x)][static_cast<size_t>(a)] = action.a.op(x, a);
    return t;
}

std::vector<int> torsor_cocycle(const GroupAction& action, const Torsor& t, int basepoint) {
    if (basepoint < 0 || basepoint >= t.size()) throw domain_error("basepoint out of range");
    std::vector<int> c(static_cast<size_t>(action.g.n), -1);
    for (int s = 0; s < action.g.n; ++s) {
        int target = t.gact[static_cast<size_t>(s)][static_cast<size_t>(basepoint)];
        for (int a = 0; a < action.a.n; ++a)
            if (t.aact[static_cast<size_t>(basepoint)][static_cast<size_t>(a)] == target) {
                c[static_cast<size_t>(s)] = a;
                break;
            }
        if (c[static_cast<size_t>(s)] < 0) throw domain_error("right action is not transitive");
    }
    return c;
}

bool torsors_isomorphic(const GroupAction& action, const Torsor& s, const Torsor& t) {
    int m = action.a.n;
    if (s.size() != m || t.size() != m) throw domain_error("torsor size must match the structure group");
    for (int y0 = 0; y0 < m; ++y0) {
        // the A-equivariant map with f(x0) = y0, for x0 = 0
        std::vector<int> f(static_cast<size_t>(m), -1);
        for (int a = 0; a < m; ++a)
            f[static_cast<size_t>(s.aact[0][static_cast<size_t>(a)])] =
                t.aact[static_cast<size_t>(y0)][static_cast<size_t>(a)];
        bool ok = true;
        for (int g = 0; g < action.g.n && ok; ++g)
            for (int x = 0; x < m && ok; ++x)
                ok = f[static_cast<size_t>(s.gact[static_cast<size_t>(g)][static_cast<size_t>(x)])] ==
                     t.gact[static_cast<size_t>(g)][static_cast<size_t>(f[static_cast<size_t>(x)])];
        if (ok) return true;
    }
    return false;
}

namespace {

Torsor relabel_quotient(const GroupAction& dst, int nx, int nb, UnionFind& uf,
                        const std::vector<std::vector<int>>& gmoves,
                        const std::vector<std::vector<int>>& amoves) {
    int total = nx * nb;
    std::vector<int> label(static_cast<size_t>(total), -1);
    std::vector<int> reps;
    for (int i = 0; i < total; ++i) {
        int r = uf.find(i);
        if (label[static_cast<size_t>(r)] < 0) {
            label[static_cast<size_t>(r)] = static_cast<int>(reps.size());
            reps.push_back(r);
        }
        label[static_cast<size_t>(i)] = label[static_cast<size_t>(r)];
    }
    int m = static_cast<int>(reps.size());
    if (m != dst.a.n) throw domain_error("quotient is not a torsor for the target group");
    Torsor t;
    t.gact.assign(static_cast<size_t>(dst.g.n), std::vector<int>(static_cast<size_t>(m)));
    t.aact.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(dst.a.n)));
    for (int s = 0; s < dst.g.n; ++s)
        for (int k = 0; k < m; ++k)
            t.gact[static_cast<size_t>(s)][static_cast<size_t>(k)] =
                label[static_cast<size_t>(gmoves[static_cast<size_t>(s)][static_cast<size_t>(reps[static_cast<size_t>(k)])])];
    for (int k = 0; k < m; ++k)
        for (int b = 0; b < dst.a.n; ++b)
            t.aact[static_cast<size_t>(k)][static_cast<size_t>(b)] =
                label[static_cast<size_t>(amoves[static_cast<size_t>(b)][static_cast<size_t>(reps[static_cast<size_t>(k)])])];
    return t;
}

} // namespace

Torsor pushout_torsor(const GroupAction& src, const GroupAction& dst,
                      const std::vector<int>& phi, const Torsor& x) {
    if (static_cast<int>(phi.size()) != src.a.n) throw domain_error("malformed homomorphism");
    for (int a = 0; a < src.a.n; ++a)
        for (int b = 0; b < src.a.n; ++b)
            if (phi[static_cast<size_t>(src.a.op(a, b))] !=
                dst.a.op(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
                throw domain_error("map is not a homomorphism");
    for (int s = 0; s < src.g.n; ++s)
        for (int a = 0; a < src.a.n; ++a)
            if (phi[static_cast<size_t>(src.apply(s, a))] != dst.apply(s, phi[static_cast<size_t>(a)]))
                throw domain_error("map is not equivariant");
    int nx = x.size(), nb = dst.a.n;
    auto idx = [nb](int u, int b) { return u * nb + b; };
    UnionFind uf(nx * nb);
    for (int u = 0; u < nx; ++u)
        for (int a = 0; a < src.a.n; ++a)
            for (int b = 0; b < nb; ++b)
                uf.unite(idx(x.aact[static_cast<size_t>(u)][static_cast<size_t>(a)], b),
                         idx(u, dst.a.op(phi[static_cast<size_t>(a)], b)));
    std::vector<std::vector<int>> gmoves(static_cast<size_t>(dst.g.n),
                                         std::vector<int>(static_cast<size_t>(nx * nb)));
    for (int s = 0; s < dst.g.n; ++s)
        for (int u = 0; u < nx; ++u)
            for (int b = 0; b < nb; ++b)
                gmoves[static_cast<size_t>(s)][static_cast<size_t>(idx(u, b))] =
                    idx(x.gact[static_cast<size_t>(s)][static_cast<size_t>(u)], dst.apply(s, b));
    std::vector<std::vector<int>> amoves(static_cast<size_t>(nb),
                                         std::vector<int>(static_cast<size_t>(nx * nb)));
    for (int c = 0; c < nb; ++c)
        for (int u = 0; u < nx; ++u)
            for (int b = 0; b < nb; ++b)
                amoves[static_cast<size_t>(c)][static_cast<size_t>(idx(u, b))] =
                    idx(u, dst.a.op(b, c));
    return relabel_quotient(dst, nx, nb, uf, gmoves, amoves);
}

Torsor product_torsor(const GroupAction& action, const Torsor& x, const Torsor& y) {
    if (!action.a.is_abelian()) throw domain_error("torsor product needs an abelian structure group");
    int nx = x.size(), ny = y.size(), na = action.a.n;
    auto idx = [ny](int u, int v) { return u * ny + v; };
    UnionFind uf(nx * ny);
    for (int u = 0; u < nx; ++u)
        for (int v = 0; v < ny; ++v)
            for (int a = 0; a < na; ++a)
                uf.unite(idx(x.aact[static_cast<size_t>(u)][static_cast<size_t>(a)], v),
                         idx(u, y.aact[static_cast<size_t>(v)][static_cast<size_t>(a)]));
    std::vector<std::vector<int>> gmoves(static_cast<size_t>(action.g.n),
                                         std::vector<int>(static_cast<size_t>(nx * ny)));
    for (int s = 0; s < action.g.n; ++s)
        for (int u = 0; u < nx; ++u)
            for (int v = 0; v < ny; ++v)
                gmoves[static_cast<size_t>(s)][static_cast<size_t>(idx(u, v))] =
                    idx(x.gact[static_cast<size_t>(s)][static_cast<size_t>(u)],
                        y.gact[static_cast<size_t>(s)][static_cast<size_t>(v)]);
    std::vector<std::vector<int>> amoves(static_cast<size_t>(na),
                                         std::vector<int>(static_cast<size_t>(nx * ny)));
    for (int a = 0; a < na; ++a)
        for (int u = 0; u < nx; ++u)
            for (int v = 0; v < ny; ++v)
                amoves[static_cast<size_t>(a)][static_cast<size_t>(idx(u, v))] =
                    idx(u, y.aact[static_cast<size_t>(v)][static_cast<size_t>(a)]);
    return relabel_quotient(action, nx, ny, uf, gmoves, amoves);
}

} // namespace ptk
