#pragma once

#include "stk/abelian_group.hpp"
#include "stk/cyclotomic.hpp"

namespace stk {

// Character of a finite abelian group G, chi(g_i) = zeta_e^{a_i} where e is
// the exponent of G and g_i the canonical generators. The character group
// is enumerated exactly like G itself: the character at index t has
// a_i = (e / d_i) * t_i with (t_1, ..., t_r) the exponent vector of t.
class Character {
  public:
    Character(AbelianGroup group, std::vector<long> zeta_exponents);
    static Character trivial(const AbelianGroup& g);
    static Character at_index(const AbelianGroup& g, long t);

    const AbelianGroup& group() const { return group_; }
    const std::vector<long>& zeta_exponents() const { return exps_; }

    // k with chi(elem) = zeta_e^k, 0 <= k < e
    long value_exponent(long elem) const;
    Cyclotomic value(long elem) const;  // in Q(zeta_e)

    bool is_trivial() const;
    long order() const;
    long index() const;  // position in the canonical enumeration

    Character inverse() const;
    Character operator*(const Character& o) const;
    bool operator==(const Character& o) const {
        return group_ == o.group_ && exps_ == o.exps_;
    }

  private:
    AbelianGroup group_;
    std::vector<long> exps_;
};

std::vector<Character> all_characters(const AbelianGroup& g);

}  // namespace stk
