#pragma once

#include "stk/abelian_group.hpp"
#include "stk/character.hpp"
#include "stk/group_ring.hpp"

#include <json.hpp>

#include <memory>
#include <vector>

namespace stk {

inline constexpr long kDefaultConductorCap = 100000;

// Decomposition data of a rational prime in K/Q.
struct PlaceData {
    long p = 0;
    bool ramified = false;
    std::vector<long> inertia;    // sorted element indices of I_v
    long frobenius = 0;           // designated lift of F_v to G
    long residue_degree = 0;      // order of F_v in G/I_v
    long num_primes_above = 0;    // #G / (f * #I_v)
};

// chi in G^ viewed as a primitive Dirichlet character of conductor f_chi.
// Values are exponents of zeta_e with e the exponent of G (or -1 where the
// character vanishes).
class DirichletCharacter {
  public:
    DirichletCharacter(Character chi, long conductor, std::vector<long> value_exps,
                       bool odd);

    const Character& character() const { return chi_; }
    long conductor() const { return conductor_; }
    long zeta_order() const { return chi_.group().exponent(); }
    bool is_odd() const { return odd_; }

    // exponent of zeta_e for chi(a), or -1 when gcd(a, f) > 1
    long value_exponent(long a) const;
    Cyclotomic value(long a) const;  // zero when gcd(a, f) > 1

  private:
    Character chi_;
    long conductor_;
    std::vector<long> value_exps_;  // indexed by a mod f
    bool odd_;
};

// Abelian field K = Q(zeta_n)^H in its conductor-minimal presentation:
// n is the true conductor (n != 2 mod 4) and H <= (Z/n)^* the fixing group.
// G = Gal(K/Q) = (Z/n)^*/H in canonical invariant-factor coordinates.
class AbelianField {
  public:
    AbelianField(long n, const std::vector<long>& subgroup_gens,
                 long conductor_cap = kDefaultConductorCap);

    long conductor() const { return n_; }
    const std::vector<long>& subgroup() const { return subgroup_; }  // sorted residues
    const AbelianGroup& group() const { return group_; }
    long degree() const { return group_.order(); }

    bool is_cm() const { return cm_; }
    long complex_conjugation() const;  // throws unless CM

    // residue coprime to n -> element of G; least residue representing elem
    long to_group(long residue) const;
    long representative(long elem) const;

    std::vector<long> ramified_primes() const;  // primes dividing the conductor
    PlaceData place(long p) const;

    // K_J: maximal subfield unramified at every prime in J (J must consist of
    // ramified primes); J empty returns *this.
    AbelianField fixed_field_unramified_at(const std::vector<long>& J) const;

    const std::vector<DirichletCharacter>& characters() const;

    long roots_of_unity_order() const;
    bool is_T_admissible(const std::vector<long>& T) const;

    // g_v = 1 - F_v + #I_v and h_v = (1 - N_{I_v}/#I_v) + (N_{I_v}/#I_v) g_v,
    // with the designated Frobenius lift.
    std::pair<GroupRingElement, GroupRingElement> gv_hv(long v) const;

    // Projection Gal(K/Q) -> Gal(F/Q) for a subfield F of K.
    long project_element(const AbelianField& subfield, long elem) const;
    bool contains(const AbelianField& subfield) const;

    nlohmann::json to_json() const;
    static AbelianField from_json(const nlohmann::json& j, long conductor_cap = kDefaultConductorCap);

  private:
    struct UnitFactor {
        long modulus;            // the prime power p^a
        long generator;          // residue mod n generating this cyclic factor
        long order;
        std::vector<long> dlog;  // indexed by residue mod modulus, -1 if not a unit
    };

    void build_unit_group();
    void build_quotient();
    std::vector<long> unit_dlog(long u) const;  // exponent vector in unit factors

    long n_ = 1;
    long cap_ = kDefaultConductorCap;
    std::vector<long> subgroup_;       // sorted residues of H
    std::vector<UnitFactor> units_;    // cyclic decomposition of (Z/n)^*
    AbelianGroup group_;
    std::vector<long> to_group_;       // residue -> element index (-1 if not unit)
    std::vector<long> representative_; // element index -> least residue
    bool cm_ = false;
    long rho_ = 0;

    struct CharCache;
    std::shared_ptr<CharCache> char_cache_;
};

// Convenience: the imaginary quadratic field of fundamental discriminant D.
AbelianField quadratic_imaginary_field(long D);

// Debug exports.
nlohmann::json place_to_json(const PlaceData& pd);
nlohmann::json characters_to_json(const AbelianField& K);

}  // namespace stk
