#include "stk/character.hpp"

#include <numeric>
#include <stdexcept>

namespace stk {

Character::Character(AbelianGroup group, std::vector<long> zeta_exponents)
    : group_(std::move(group)), exps_(std::move(zeta_exponents)) {
    if (static_cast<long>(exps_.size()) != group_.rank())
        throw std::invalid_argument("Character: exponent count mismatch");
    const long e = group_.exponent();
    const auto& d = group_.invariant_factors();
    for (size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] %= e;
        if (exps_[i] < 0) exps_[i] += e;
        if ((d[i] * exps_[i]) % e != 0)
            throw std::invalid_argument("Character: d_i * a_i != 0 mod e");
    }
}

Character Character::trivial(const AbelianGroup& g) {
    return Character(g, std::vector<long>(g.rank(), 0));
}

Character Character::at_index(const AbelianGroup& g, long t) {
    std::vector<long> tv = g.exponents(t);
    const long e = g.exponent();
    const auto& d = g.invariant_factors();
    std::vector<long> a(tv.size());
    for (size_t i = 0; i < tv.size(); ++i) a[i] = (e / d[i]) * tv[i];
    return Character(g, std::move(a));
}

long Character::value_exponent(long elem) const {
    const long e = group_.exponent();
    std::vector<long> ev = group_.exponents(elem);
    long k = 0;
    for (size_t i = 0; i < ev.size(); ++i)
        k = (k + (exps_[i] % e) * (ev[i] % e)) % e;
    return k;
}

Cyclotomic Character::value(long elem) const {
    return Cyclotomic::root_power(group_.exponent(), value_exponent(elem));
}

bool Character::is_trivial() const {
    for (long a : exps_)
        if (a != 0) return false;
    return true;
}

long Character::order() const {
    const long e = group_.exponent();
    long o = 1;
    for (long a : exps_)
        if (a != 0) o = std::lcm(o, e / std::gcd(e, a));
    return o;
}

long Character::index() const {
    const long e = group_.exponent();
    const auto& d = group_.invariant_factors();
    std::vector<long> t(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) t[i] = exps_[i] / (e / d[i]);
    return group_.index_of(t);
}

Character Character::inverse() const {
    const long e = group_.exponent();
    std::vector<long> a(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) a[i] = (e - exps_[i]) % e;
    return Character(group_, std::move(a));
}

Character Character::operator*(const Character& o) const {
    if (group_ != o.group_)
        throw std::invalid_argument("Character: group mismatch");
    const long e = group_.exponent();
    std::vector<long> a(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) a[i] = (exps_[i] + o.exps_[i]) % e;
    return Character(group_, std::move(a));
}

std::vector<Character> all_characters(const AbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(g.order());
    for (long t = 0; t < g.order(); ++t) out.push_back(Character::at_index(g, t));
    return out;
}

}  // namespace stk
