#pragma once

#include "stk/abelian_field.hpp"
#include "stk/group_ring.hpp"

#include <vector>

namespace stk {

// B_{1,chi} = (1/f) sum_{a=1}^{f} chi(a) a for primitive chi of conductor
// f > 1; the trivial character uses B_1 = 1/2 so that L(0, chi_triv) = -1/2.
Cyclotomic bernoulli_b1(const DirichletCharacter& chi);

// L_{S,T}(0, chi) = prod_{v in S} (1 - chi(v)) * prod_{v in T} (1 - chi(v) v)
//                   * L(0, chi),
// with chi(v) = 0 for v dividing the conductor of chi and
// L(0, chi) = -B_{1,chi} (chi nontrivial), -1/2 (chi trivial).
Cyclotomic l_value_at_zero(const DirichletCharacter& chi,
                           const std::vector<long>& S, const std::vector<long>& T);

// theta^T_{F,S} = sum_chi L_{S,T}(0, chi^{-1}) eps_chi. Requires S to
// contain every ramified prime and S, T disjoint. When T is admissible the
// result must be integral; a non-integral result is reported as an internal
// error, never repaired.
GroupRingElement theta_ST(const AbelianField& F, const std::vector<long>& S,
                          const std::vector<long>& T);

// omega^T = sum_chi L_T(0, chi^{-1}) eps_chi (primitive L-functions, no
// S-truncation); generally non-integral.
GroupRingElement omega_T(const AbelianField& K, const std::vector<long>& T);

// theta^T_{F, S u {v}} == (1 - F_v^{-1}) * theta^T_{F,S}, exactly.
bool euler_enlargement_holds(const AbelianField& F, const std::vector<long>& S,
                             const std::vector<long>& T, long v);

}  // namespace stk
