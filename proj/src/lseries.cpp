#include "stk/lseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace stk {

Cyclotomic bernoulli_b1(const DirichletCharacter& chi) {
    const long e = chi.zeta_order();
    const long f = chi.conductor();
    if (f == 1) return Cyclotomic::from_rat(e, make_rat(1, 2));
    const CyclotomicTable& t = cyclotomic_table(e);
    RatVec acc = RatVec::Zero(t.degree);
    for (long a = 1; a <= f; ++a) {
        const long k = chi.value_exponent(a);
        if (k < 0) continue;
        const IntVec& row = t.power_rows[k];
        for (long i = 0; i < t.degree; ++i)
            if (row(i) != 0) acc(i) += Rat(a * row(i));
    }
    const Rat inv_f = make_rat(1, f);
    for (long i = 0; i < t.degree; ++i) acc(i) *= inv_f;
    return Cyclotomic(e, std::move(acc));
}

Cyclotomic l_value_at_zero(const DirichletCharacter& chi,
                           const std::vector<long>& S, const std::vector<long>& T) {
    const long e = chi.zeta_order();
    Cyclotomic value = chi.character().is_trivial()
                           ? Cyclotomic::from_rat(e, make_rat(-1, 2))
                           : -bernoulli_b1(chi);
    const Cyclotomic one = Cyclotomic::from_rat(e, Rat(1));
    for (long v : S) value = value * (one - chi.value(v));
    for (long v : T) value = value * (one - chi.value(v) * Rat(v));
    return value;
}

namespace {

std::vector<long> sorted_unique(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

GroupRingElement assemble(const AbelianField& F, const std::vector<long>& S,
                          const std::vector<long>& T) {
    const auto& chars = F.characters();
    const AbelianGroup& g = F.group();
    std::vector<Cyclotomic> values;
    values.reserve(g.order());
    for (long t = 0; t < g.order(); ++t) {
        const long inv_index = Character::at_index(g, t).inverse().index();
        values.push_back(l_value_at_zero(chars[inv_index], S, T));
    }
    return from_character_values(g, values);
}

}  // namespace

GroupRingElement theta_ST(const AbelianField& F, const std::vector<long>& S,
                          const std::vector<long>& T) {
    const std::vector<long> Ss = sorted_unique(S);
    const std::vector<long> Ts = sorted_unique(T);
    for (long p : F.ramified_primes())
        if (!std::binary_search(Ss.begin(), Ss.end(), p))
            throw std::invalid_argument("theta_ST: S must contain every ramified prime");
    for (long v : Ts)
        if (std::binary_search(Ss.begin(), Ss.end(), v))
            throw std::invalid_argument("theta_ST: S and T must be disjoint");

    GroupRingElement theta = assemble(F, Ss, Ts);
    if (F.is_T_admissible(Ts) && !theta.is_integral())
        throw std::logic_error(
            "theta_ST: non-integral Stickelberger element under admissible T "
            "(implementation bug)");
    return theta;
}

GroupRingElement omega_T(const AbelianField& K, const std::vector<long>& T) {
    return assemble(K, {}, sorted_unique(T));
}

bool euler_enlargement_holds(const AbelianField& F, const std::vector<long>& S,
                             const std::vector<long>& T, long v) {
    const std::vector<long> Ss = sorted_unique(S);
    if (std::binary_search(Ss.begin(), Ss.end(), v) ||
        std::find(T.begin(), T.end(), v) != T.end())
        throw std::invalid_argument("euler_enlargement_holds: v already in S or T");
    if (F.conductor() % v == 0)
        throw std::invalid_argument("euler_enlargement_holds: v must be unramified");

    std::vector<long> S2 = Ss;
    S2.push_back(v);
    const GroupRingElement lhs = theta_ST(F, S2, T);
    const GroupRingElement frob_inv = GroupRingElement::basis(
        F.group(), F.group().inverse(F.place(v).frobenius));
    const GroupRingElement rhs =
        (GroupRingElement::one(F.group()) - frob_inv) * theta_ST(F, Ss, T);
    return lhs == rhs;
}

}  // namespace stk
