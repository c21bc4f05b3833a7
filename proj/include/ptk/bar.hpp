#ifndef PTK_BAR_HPP
#define PTK_BAR_HPP

/*
 * Cohomology of a finite group with coefficients in a finite abelian group,
 * computed from the inhomogeneous cochain complex.  A coefficient module is
 * presented as a direct sum of cyclic groups Z/m_j together with one integer
 * matrix per group element (column j holds the image of the j-th generator).
 *
 * Degree-k cochains are integer vectors indexed by (tuple, generator):
 * the coordinate of the tuple (g_1, ..., g_k) and generator j sits at
 * tuple_index * rank + j, where tuple_index reads the tuple as base-|G|
 * digits, g_1 most significant.  Cohomology groups are reported through
 * their invariant factors, and classes through canonical residue
 * coordinates with respect to those factors.
 */

#include <cstdint>
#include <vector>

#include "ptk/group.hpp"
#include "ptk/padic.hpp"

namespace ptk {

using IntMat = std::vector<std::vector<Int>>;

struct BarModule {
    FiniteGroup g;
    std::vector<Int> m;       // summand moduli, each >= 1
    std::vector<IntMat> act;  // rank x rank matrix per group element

    int rank() const { return static_cast<int>(m.size()); }
    Int order() const;
    void validate() const;

    static BarModule trivial(const FiniteGroup& g, std::vector<Int> moduli);
    static BarModule zero(const FiniteGroup& g);
};

long long cochain_dim(const BarModule& mod, int k);

// matrix of d : C^k -> C^(k+1)
IntMat bar_differential(const BarModule& mod, int k);

// H^k(G, M) with explicit cocycle representatives.  The budget bounds the
// cochain dimension; exceeding it raises resource_error.
class CohomologyGroup {
public:
    CohomologyGroup(const BarModule& mod, int k, long long budget = 200000);

    int degree() const { return k_; }
    long long dim() const { return dim_; }

    // invariant factors greater than one, in a divisibility chain
    const std::vector<Int>& invariants() const { return nontrivial_; }
    Int order() const;

    bool is_cocycle(const std::vector<Int>& v) const;

    // residue coordinates of the class of a cocycle, one per invariant;
    // throws domain_error when v is not a cocycle
    std::vector<Int> canonical(const std::vector<Int>& v) const;

    Int class_order(const std::vector<Int>& v) const;

    // one representative cochain per class; the budget caps the group order
    std::vector<std::vector<Int>> elements(long long budget = 4096) const;

private:
    int k_ = 0;
    long long dim_ = 0;
    std::vector<Int> mu_;
    IntMat kbasis_;        // basis of the cocycle lattice, square
    IntMat u_, uinv_;      // row transform of the relation matrix
    std::vector<Int> d_;   // all invariant factors, length dim
    std::vector<Int> nontrivial_;
};

// invariant factors (> 1) of H^k(G, M)
std::vector<Int> bar_cohomology(const BarModule& mod, int k, long long budget = 200000);

// the same group computed from the period-two description available when G
// is cyclic: invariants of M^G for k = 0, of M^G / N M for positive even k,
// and of ker N / (sigma - 1) M for odd k, with N the full group norm
std::vector<Int> cyclic_cohomology(const BarModule& mod, int k);

// f is a map of G-modules src -> tgt given by a matrix with tgt.rank() rows
void validate_module_map(const BarModule& src, const BarModule& tgt, const IntMat& f);

// induced map on degree-k cochains
std::vector<Int> map_cochain(const BarModule& src, const BarModule& tgt, const IntMat& f,
                             int k, const std::vector<Int>& x);

struct ShortExactSequence {
    BarModule a, b, c;
    IntMat alpha; // b.rank() x a.rank()
    IntMat pi;    // c.rank() x b.rank()

    void validate() const;
};

// image under the connecting map H^k(C) -> H^(k+1)(A) of the class of z,
// as a representative cocycle for A
std::vector<Int> connecting_cochain(const ShortExactSequence& s, int k,
                                    const std::vector<Int>& z);

struct LesReport {
    std::vector<Int> h_orders; // H0(A), H0(B), H0(C), H1(A), H1(B), H1(C), H2(A)
    bool exact = false;
};

// checks image = kernel at the five interior nodes of the seven-term
// sequence induced in cohomology, element by element
LesReport les_check(const ShortExactSequence& s, long long element_budget = 4096);

// deterministic pseudorandom short exact sequence: a cyclic group of order
// at most six acting monomially on a sum of cyclic groups, with a stable
// subgroup and its quotient
ShortExactSequence random_sequence(std::uint64_t seed);

// order of the pullback along rho : G -> Z/n of the canonical generator of
// H^3(Z/n, Z/n); rho is given by residues, coefficients carry the trivial
// action
Int cs_class(const FiniteGroup& g, const std::vector<int>& rho, long long n,
             long long budget = 200000);

} // namespace ptk

#endif
