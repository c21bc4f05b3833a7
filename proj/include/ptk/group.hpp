#ifndef PTK_GROUP_HPP
#define PTK_GROUP_HPP

/*
 * Finite groups by multiplication table, actions of one finite group on
 * another by automorphisms, one-cocycles and their classification up to
 * coboundary, and torsors with their standard constructions.
 *
 * Conventions.  Element 0 is always the identity.  A one-cocycle for an
 * action of G on A is a map c with c(st) = c(s) * s(c(t)); it is stored as
 * a vector of A-indices of length |G|.  Two cocycles are equivalent when
 * c'(s) = u^-1 * c(s) * s(u) for some fixed u in A.  A torsor is a finite
 * set with a left G-action and a simply transitive right A-action
 * satisfying s(x * a) = s(x) * s(a).
 */

#include <cstdint>
#include <vector>

namespace ptk {

struct FiniteGroup {
    int n = 1;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;

    FiniteGroup() : mul{{0}}, inv{0} {}
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    int op(int a, int b) const { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inverse(int a) const { return inv[static_cast<size_t>(a)]; }
    bool is_abelian() const;
    int element_order(int a) const;

    // throws domain_error when the table is not a group with identity 0
    void validate() const;

    static FiniteGroup cyclic(int m);
    static FiniteGroup dihedral(int m); // order 2m; m >= 1
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);
};

// Subgroup spanned by the given elements, as its own group plus the
// embedding of its elements into the parent.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> elements; // elements[i] = parent index of element i
};
Subgroup span_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

// G acting on A by automorphisms.
struct GroupAction {
    FiniteGroup g;
    FiniteGroup a;
    std::vector<std::vector<int>> act; // act[s][x]

    int apply(int s, int x) const { return act[static_cast<size_t>(s)][static_cast<size_t>(x)]; }
    void validate() const;

    static GroupAction trivial(const FiniteGroup& g, const FiniteGroup& a);
};

// All one-cocycles, found by constraint propagation.  The budget caps the
// number of propagation steps; exceeding it raises resource_error.
std::vector<std::vector<int>> z1_cocycles(const GroupAction& action,
                                          std::uint64_t budget = 1u << 22);

// Partition of the cocycle list into equivalence classes.  The class of
// the trivial cocycle comes first; each class lists indices into the
// input.  Cocycles must all belong to the given action.
std::vector<std::vector<int>> h1_classes(const GroupAction& action,
                                         const std::vector<std::vector<int>>& cocycles);

// Whether c is equivalent to the trivial cocycle.
bool is_principal(const GroupAction& action, const std::vector<int>& c);

// Action of a subgroup of G on the same A, and the matching cocycle
// restriction.
GroupAction restrict_action(const GroupAction& action, const Subgroup& h);
std::vector<int> restrict_cocycle(const std::vector<int>& c, const Subgroup& h);

// Indices of the classes (as returned by h1_classes) whose restriction to
// every listed subgroup is principal.
std::vector<int> kernel_of_joint_restriction(const GroupAction& action,
                                             const std::vector<std::vector<int>>& cocycles,
                                             const std::vector<std::vector<int>>& classes,
                                             const std::vector<Subgroup>& subgroups);

struct Torsor {
    std::vector<std::vector<int>> gact; // gact[s][x]
    std::vector<std::vector<int>> aact; // aact[x][a], right action
    int size() const { return static_cast<int>(aact.size()); }
};

// throws domain_error when t is not a torsor for the action
void validate_torsor(const GroupAction& action, const Torsor& t);

// The set A twisted by c: s acts by x -> c(s) * s(x), A acts by right
// multiplication.
Torsor torsor_of_cocycle(const GroupAction& action, const std::vector<int>& c);

// Cocycle of a torsor at a basepoint: s(x0) = x0 * c(s).
std::vector<int> torsor_cocycle(const GroupAction& action, const Torsor& t, int basepoint);

bool torsors_isomorphic(const GroupAction& action, const Torsor& s, const Torsor& t);

// Change of structure group along the equivariant homomorphism
// phi : A -> B (vector of B-indices): the quotient of X x B by
// (x * a, b) ~ (x, phi(a) * b).
Torsor pushout_torsor(const GroupAction& src, const GroupAction& dst,
                      const std::vector<int>& phi, const Torsor& x);

// For abelian A: the quotient of X x Y by (x * a, y) ~ (x, y * a), which
// realises the sum of the two classes.
Torsor product_torsor(const GroupAction& action, const Torsor& x, const Torsor& y);

} // namespace ptk

#endif
