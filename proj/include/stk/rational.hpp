#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace stk {

// All arithmetic in this library is exact. Integers and rationals are
// GMP arbitrary-precision values; Eigen supplies the dense containers.
using Int = mpz_class;
using Rat = mpq_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Canonical rational num/den (lowest terms, positive denominator).
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// a/b for known-exact divisions; throws if b does not divide a.
Int exact_div(const Int& a, const Int& b);

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Largest odd divisor of |n|; odd_part(0) = 0.
Int odd_part(Int n);

inline bool is_power_of_two(const Int& n) {
    return n > 0 && odd_part(n) == 1;
}

// "num/den" with the denominator always spelled out ("6/1", "-1/2").
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::vector<long> prime_factors(long n);      // distinct primes, ascending
std::vector<long> divisors(long n);           // ascending
bool is_prime(long n);
long mul_mod(long a, long b, long m);
long pow_mod(long a, long e, long m);

}  // namespace stk
