#include "stk/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stk {

AbelianGroup::AbelianGroup(std::vector<long> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw std::invalid_argument("AbelianGroup: invariant factor < 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument(
                "AbelianGroup: invariant factors must form a divisibility chain");
    }
    rebuild();
}

void AbelianGroup::rebuild() {
    const size_t r = factors_.size();
    strides_.assign(r, 1);
    long s = 1;
    for (size_t i = r; i-- > 0;) {
        strides_[i] = s;
        s *= factors_[i];
    }
    order_ = s;
}

std::vector<long> AbelianGroup::exponents(long index) const {
    if (index < 0 || index >= order_)
        throw std::out_of_range("AbelianGroup: element index out of range");
    std::vector<long> e(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        e[i] = index / strides_[i];
        index %= strides_[i];
    }
    return e;
}

long AbelianGroup::index_of(const std::vector<long>& exps) const {
    if (exps.size() != factors_.size())
        throw std::invalid_argument("AbelianGroup: exponent vector length mismatch");
    long idx = 0;
    for (size_t i = 0; i < factors_.size(); ++i) {
        long e = exps[i] % factors_[i];
        if (e < 0) e += factors_[i];
        idx += e * strides_[i];
    }
    return idx;
}

long AbelianGroup::mul(long a, long b) const {
    std::vector<long> ea = exponents(a), eb = exponents(b);
    for (size_t i = 0; i < ea.size(); ++i) ea[i] = (ea[i] + eb[i]) % factors_[i];
    return index_of(ea);
}

long AbelianGroup::inverse(long a) const {
    std::vector<long> e = exponents(a);
    for (size_t i = 0; i < e.size(); ++i) e[i] = (factors_[i] - e[i]) % factors_[i];
    return index_of(e);
}

long AbelianGroup::power(long a, long k) const {
    std::vector<long> e = exponents(a);
    for (size_t i = 0; i < e.size(); ++i) {
        long m = factors_[i];
        long v = ((e[i] % m) * (k % m)) % m;
        if (v < 0) v += m;
        e[i] = v;
    }
    return index_of(e);
}

long AbelianGroup::element_order(long a) const {
    std::vector<long> e = exponents(a);
    long ord = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        long d = factors_[i] / std::gcd(factors_[i], e[i]);
        ord = std::lcm(ord, d);
    }
    return ord;
}

long AbelianGroup::generator(long i) const {
    if (i < 0 || i >= rank()) throw std::out_of_range("AbelianGroup: generator index");
    std::vector<long> e(factors_.size(), 0);
    e[i] = 1;
    return index_of(e);
}

std::vector<long> AbelianGroup::subgroup_closure(const std::vector<long>& gens) const {
    std::set<long> seen{identity()};
    std::vector<long> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier) {
            for (long g : gens) {
                long y = mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace stk
