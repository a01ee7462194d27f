#pragma once

#include "stk/abelian_group.hpp"
#include "stk/character.hpp"
#include "stk/cyclotomic.hpp"
#include "stk/rational.hpp"

#include <json.hpp>

#include <vector>

namespace stk {

// Element of Q[G] for finite abelian G: exact rational coefficients indexed
// by the canonical element enumeration of G.
class GroupRingElement {
  public:
    GroupRingElement(AbelianGroup group, RatVec coeffs);

    static GroupRingElement zero(const AbelianGroup& g);
    static GroupRingElement one(const AbelianGroup& g);
    static GroupRingElement basis(const AbelianGroup& g, long elem);
    static GroupRingElement constant(const AbelianGroup& g, const Rat& r);

    const AbelianGroup& group() const { return group_; }
    const RatVec& coeffs() const { return coeffs_; }
    const Rat& coeff(long elem) const { return coeffs_(elem); }

    bool is_zero() const;
    bool is_integral() const;  // all denominators 1

    GroupRingElement operator-() const;
    friend GroupRingElement operator+(const GroupRingElement&, const GroupRingElement&);
    friend GroupRingElement operator-(const GroupRingElement&, const GroupRingElement&);
    // convolution product; throws on group mismatch
    friend GroupRingElement operator*(const GroupRingElement&, const GroupRingElement&);
    GroupRingElement operator*(const Rat& r) const;

    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    nlohmann::json to_json() const;
    static GroupRingElement from_json(const nlohmann::json& j);

  private:
    AbelianGroup group_;
    RatVec coeffs_;
};

// Involution induced by sigma -> sigma^{-1}.
GroupRingElement sharp(const GroupRingElement& a);

// Ring homomorphism Q[G] -> Q(zeta_e) extending chi.
Cyclotomic character_value(const GroupRingElement& a, const Character& chi);

// The unique a in Q[G] with character_value(a, chi_t) = values[t] for every
// character, canonical character order. Throws if the prescribed values are
// inconsistent with a rational element (conjugate characters must carry
// algebraically conjugate values).
GroupRingElement from_character_values(const AbelianGroup& g,
                                       const std::vector<Cyclotomic>& values);

// N_H = sum of the subgroup generated by gens.
GroupRingElement norm_element(const AbelianGroup& g, const std::vector<long>& gens);

// ((1 - rho)/2) * a; rho must have order 2.
GroupRingElement minus_project(const GroupRingElement& a, long rho);

// True iff no character value vanishes.
bool is_nonzerodivisor(const GroupRingElement& a);

}  // namespace stk
