#pragma once

#include "stk/abelian_group.hpp"
#include "stk/ideal_lattice.hpp"
#include "stk/rational.hpp"

#include <vector>

namespace stk {

// Finite abelian group with an action of G: coordinates in prod Z/m_i
// (invariant factors, ascending divisibility chain), one action matrix per
// canonical generator of G, entries of row i reduced mod m_i.
struct GModuleFinite {
    AbelianGroup acting_group;
    std::vector<Int> invariant_factors;
    std::vector<IntMat> action;

    long rank() const { return static_cast<long>(invariant_factors.size()); }
};

// Canonicalize Z^k / colspan(relations) with the given action (matrices over
// the raw coordinates). Validates that the action respects the relations of
// G and descends to the quotient; throws if the quotient is infinite.
GModuleFinite normalized_module(const AbelianGroup& G, const IntMat& relations,
                                const std::vector<IntMat>& action);

IntMat action_of_element(const GModuleFinite& M, long elem);

Int module_order(const GModuleFinite& M);

GModuleFinite direct_sum(const GModuleFinite& A, const GModuleFinite& B);

GModuleFinite odd_part(const GModuleFinite& M);

// M / (1 + rho) M; requires odd order, where it realizes the minus part.
GModuleFinite minus_quotient(const GModuleFinite& M, long rho);

// M / < G-orbit of v >.
GModuleFinite quotient_by_orbit(const GModuleFinite& M, const IntVec& v);

// Pontryagin dual with the contragredient action (sigma f)(x) = f(sigma^{-1} x).
GModuleFinite dualize(const GModuleFinite& M);

// Finitely presented module over R^-: cokernel of the relation matrix, one
// row per relation, entries in R^-.
struct PresentedModule {
    MinusRing ring;
    long num_generators = 0;
    std::vector<std::vector<GroupRingElement>> relations;
};

// Free cover of M by its coordinate generators over R^-; requires rho to act
// as -1 and odd order. The relation lattice is the full kernel of the
// evaluation map, computed by integer linear algebra.
PresentedModule present_over_minus_ring(const GModuleFinite& M, const MinusRing& ring);

// Ideal of maximal minors of the relation matrix; unit ideal for the zero
// module; throws if the cokernel is infinite.
IdealLattice fitting_ideal(const PresentedModule& P);

}  // namespace stk
