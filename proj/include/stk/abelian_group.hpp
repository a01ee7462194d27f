#pragma once

#include <vector>

namespace stk {

// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r,
// each d_i >= 2 (empty list = trivial group). Elements are exponent
// vectors (e_1, ..., e_r) with 0 <= e_i < d_i, enumerated lexicographically
// with e_1 most significant; every coefficient vector in the library is
// indexed by this enumeration.
class AbelianGroup {
  public:
    AbelianGroup() { rebuild(); }
    explicit AbelianGroup(std::vector<long> invariant_factors);

    const std::vector<long>& invariant_factors() const { return factors_; }
    long order() const { return order_; }
    long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
    long rank() const { return static_cast<long>(factors_.size()); }

    std::vector<long> exponents(long index) const;
    long index_of(const std::vector<long>& exps) const;

    long identity() const { return 0; }
    long mul(long a, long b) const;
    long inverse(long a) const;
    long power(long a, long k) const;
    long element_order(long a) const;

    // index of the i-th canonical generator (exponent vector = unit vector)
    long generator(long i) const;

    // Sorted element indices of the subgroup generated by gens.
    std::vector<long> subgroup_closure(const std::vector<long>& gens) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  private:
    void rebuild();
    std::vector<long> factors_;
    std::vector<long> strides_;
    long order_ = 1;
};

}  // namespace stk
