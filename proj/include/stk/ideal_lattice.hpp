#pragma once

#include "stk/abelian_field.hpp"
#include "stk/group_ring.hpp"
#include "stk/normal_form.hpp"

#include <json.hpp>

#include <vector>

namespace stk {

// Coordinates for the minus ring R^- = Z[1/2][G]^-: e^- Q[G] has the basis
// (t_i - rho t_i) over a transversal t_1, ..., t_d of G mod <rho>, d = #G/2;
// the coordinate of a minus element x at t_i is its coefficient there.
class MinusRing {
  public:
    MinusRing(AbelianGroup group, long rho);

    const AbelianGroup& group() const { return group_; }
    long rho() const { return rho_; }
    long dim() const { return static_cast<long>(transversal_.size()); }
    const std::vector<long>& transversal() const { return transversal_; }

    RatVec coords(const GroupRingElement& x) const;  // coordinates of e^- x
    GroupRingElement lift(const RatVec& c) const;    // sum c_i (t_i - rho t_i)
    GroupRingElement minus_unit() const;             // e^- = (1 - rho)/2

    bool operator==(const MinusRing& o) const {
        return group_ == o.group_ && rho_ == o.rho_;
    }

  private:
    AbelianGroup group_;
    long rho_;
    std::vector<long> transversal_;
};

// Full-rank lattice in either Q[G] (coordinates = plain coefficient vectors)
// or the minus ring. Stored as (1/denominator) * rowspan(hnf) with hnf an
// integer row-style HNF and gcd(content(hnf), denominator) = 1.
struct IdealLattice {
    enum class Ambient { FullGroupRing, Minus };
    Ambient ambient = Ambient::Minus;
    AbelianGroup group;
    long rho = 0;  // meaningful for Minus
    IntMat hnf;
    Int denominator = 1;

    long dim() const { return hnf.cols(); }
    bool contains(const GroupRingElement& x) const;
    nlohmann::json to_json() const;
};

// Z[G]-span (resp. R^--span) of the given elements, as a lattice. Throws if
// the span is rank deficient.
IdealLattice full_ideal_from_generators(const AbelianGroup& g,
                                        const std::vector<GroupRingElement>& gens);
IdealLattice ideal_from_generators(const MinusRing& ring,
                                   const std::vector<GroupRingElement>& gens);
IdealLattice unit_ideal(const MinusRing& ring);

// Minus projection of a full-group-ring lattice.
IdealLattice minus_part(const IdealLattice& full, const MinusRing& ring);

// U_v = (N_{I_v}, 1 - (N_{I_v}/#I_v) F_v^{-1}) Z[G], for ramified v only.
IdealLattice u_v_lattice(const AbelianField& K, long v);

// nu_J: Z[Gal(K_J/Q)] -> Z[G], multiplication by prod_{v in J} N_{I_v} of any
// coefficientwise lift through G ->> Gal(K_J/Q).
GroupRingElement nu_J(const AbelianField& K, const std::vector<long>& J,
                      const GroupRingElement& x);

// { nu_J(theta^T_{K_J, S_ram - J}) : J subset of S_ram }, subsets in bitmask
// order over the ascending ramified primes.
std::vector<GroupRingElement> theta_ideal_generators(const AbelianField& K,
                                                     const std::vector<long>& T);

// nu_J(theta^T_{K_J, S_r - J}) ==
//   prod_{v in J} N_{I_v} * prod_{v in S_r - J} (1 - (N_{I_v}/#I_v) F_v^{-1})
//   * omega^T, exactly in Q[G].
bool nuJ_identity_holds(const AbelianField& K, const std::vector<long>& T,
                        const std::vector<long>& J);

// Theta^T(K)' as an HNF lattice in R^-, built from the nu_J generators and
// cross-checked against (prod_v minus(U_v)) * minus(Z[G] omega^T); a mismatch
// is an internal error.
IdealLattice theta_ideal_minus(const AbelianField& K, const std::vector<long>& T);

IdealLattice lattice_product(const IdealLattice& a, const IdealLattice& b);
IdealLattice lattice_sharp(const IdealLattice& a);

struct LatticeComparison {
    bool equal_away_from_2 = false;
    Int index_left = 0;   // [join : left], a power of 2 iff left matches join away from 2
    Int index_right = 0;  // [join : right]
    Rat index_ratio;      // index_left / index_right
};
LatticeComparison lattices_equal_away_from_2(const IdealLattice& a,
                                             const IdealLattice& b);

}  // namespace stk
