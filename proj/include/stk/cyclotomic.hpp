#pragma once

#include "stk/rational.hpp"

namespace stk {

long euler_phi(long n);

// Monic cyclotomic polynomial Phi_n, coefficients from constant term up.
std::vector<Int> cyclotomic_polynomial(long n);

// Element of Q(zeta_e) as a residue modulo Phi_e, stored on the power
// basis 1, z, ..., z^{phi(e)-1}. Values are immutable after construction.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coords_(RatVec::Zero(1)) {}
    Cyclotomic(long order, RatVec coords);

    static Cyclotomic zero(long order);
    static Cyclotomic from_rat(long order, const Rat& r);
    static Cyclotomic root_power(long order, long k);  // zeta_order^k

    long order() const { return order_; }
    const RatVec& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // throws if not rational

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator*(const Rat& r) const;
    Cyclotomic inverse() const;  // throws on zero

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  private:
    long order_;
    RatVec coords_;
};

// Shared per-order tables: Phi_e and the reductions of z^k mod Phi_e.
// Built once per order, then read-only.
struct CyclotomicTable {
    long order = 1;
    long degree = 1;                  // phi(order)
    std::vector<Int> poly;            // Phi_order
    std::vector<IntVec> power_rows;   // z^k mod Phi_e for 0 <= k < max(order, 2*degree)
};
const CyclotomicTable& cyclotomic_table(long order);

}  // namespace stk
