#include "stk/rational.hpp"

#include <stdexcept>

namespace stk {

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: not divisible");
    return q;
}

Int odd_part(Int n) {
    if (n == 0) return 0;
    n = abs(n);
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(),
                    mpz_scan1(n.get_mpz_t(), 0));
    return n;
}

std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

long pow_mod(long a, long e, long m) {
    a %= m;
    if (a < 0) a += m;
    long r = 1 % m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace stk
