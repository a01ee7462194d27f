#include <doctest.h>

#include "stk/lseries.hpp"

#include <random>

using namespace stk;

namespace {

const DirichletCharacter& character_of_conductor(const AbelianField& K, long f,
                                                 bool odd) {
    for (const auto& c : K.characters())
        if (c.conductor() == f && c.is_odd() == odd) return c;
    throw std::logic_error("no such character");
}

GroupRingElement from_longs(const AbelianGroup& g, std::initializer_list<long> cs) {
    RatVec v(g.order());
    long i = 0;
    for (long c : cs) v(i++) = Rat(c);
    return GroupRingElement(g, std::move(v));
}

}  // namespace

TEST_CASE("generalized Bernoulli numbers B_{1,chi}") {
    // chi_{-3}: (1*1 + 2*(-1))/3 = -1/3
    AbelianField k3(3, {});
    CHECK(bernoulli_b1(character_of_conductor(k3, 3, true)) ==
          Cyclotomic::from_rat(2, make_rat(-1, 3)));

    // chi_{-4}: (1 - 3)/4 = -1/2
    AbelianField k4(4, {});
    CHECK(bernoulli_b1(character_of_conductor(k4, 4, true)) ==
          Cyclotomic::from_rat(2, make_rat(-1, 2)));

    // even nontrivial characters have B_1 = 0 (quadratic character mod 5)
    AbelianField k5(5, {});
    CHECK(bernoulli_b1(character_of_conductor(k5, 5, false)).is_zero());

    // trivial character: B_1 = 1/2 by convention
    CHECK(bernoulli_b1(character_of_conductor(k4, 1, false)) ==
          Cyclotomic::from_rat(2, make_rat(1, 2)));
}

TEST_CASE("L values at zero with S and T factors") {
    AbelianField k4(4, {});
    const auto& chi4 = character_of_conductor(k4, 4, true);
    const auto& triv = character_of_conductor(k4, 1, false);

    // (chi_{-4}, S={2}, T={}) -> 1/2: the Euler factor at 2 is 1 since 2 | f
    CHECK(l_value_at_zero(chi4, {2}, {}) ==
          Cyclotomic::from_rat(2, make_rat(1, 2)));
    // (trivial, S={3}, T={}) -> 0
    CHECK(l_value_at_zero(triv, {3}, {}).is_zero());
    // (chi_{-4}, S={2}, T={13}) -> (1 - 13) * 1/2 = -6
    CHECK(l_value_at_zero(chi4, {2}, {13}) ==
          Cyclotomic::from_rat(2, Rat(-6)));
}

TEST_CASE("Stickelberger elements") {
    SUBCASE("Q(sqrt(-3)), S={3}, T={7}: rho - 1") {
        AbelianField K(3, {});
        GroupRingElement theta = theta_ST(K, {3}, {7});
        GroupRingElement expect =
            GroupRingElement::basis(K.group(), K.complex_conjugation()) -
            GroupRingElement::one(K.group());
        CHECK(theta == expect);
    }
    SUBCASE("Q, S={3}, T={}: zero") {
        AbelianField q(1, {});
        CHECK(theta_ST(q, {3}, {}).is_zero());
    }
    SUBCASE("Q(i), S={2}, T={13}: 3 rho - 3") {
        AbelianField K(4, {});
        GroupRingElement theta = theta_ST(K, {2}, {13});
        GroupRingElement expect =
            (GroupRingElement::basis(K.group(), K.complex_conjugation()) -
             GroupRingElement::one(K.group())) *
            Rat(3);
        CHECK(theta == expect);
    }
    SUBCASE("errors: missing ramified prime, overlapping T") {
        AbelianField K(4, {});
        CHECK_THROWS_AS(theta_ST(K, {3}, {13}), std::invalid_argument);
        CHECK_THROWS_AS(theta_ST(K, {2, 5}, {5}), std::invalid_argument);
    }
}

TEST_CASE("omega^T") {
    AbelianField K(4, {});
    const long rho = K.complex_conjugation();
    SUBCASE("Q(i), T={13}: 6 rho") {
        CHECK(omega_T(K, {13}) ==
              GroupRingElement::basis(K.group(), rho) * Rat(6));
    }
    SUBCASE("Q(i), T={}: -rho/2") {
        CHECK(omega_T(K, {}) ==
              GroupRingElement::basis(K.group(), rho) * make_rat(-1, 2));
    }
    SUBCASE("odd components of minus projection match L_T, even vanish") {
        AbelianField z5(5, {});
        GroupRingElement om = omega_T(z5, {11});
        GroupRingElement mo = minus_project(om, z5.complex_conjugation());
        const auto& chars = z5.characters();
        for (long t = 0; t < z5.degree(); ++t) {
            const Character chi = Character::at_index(z5.group(), t);
            const Cyclotomic v = character_value(mo, chi);
            if (chars[t].is_odd()) {
                const long inv = chi.inverse().index();
                CHECK(v == l_value_at_zero(chars[inv], {}, {11}));
            } else {
                CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("integrality and oddness across small CM fields") {
    for (long n : {3L, 4L, 5L, 7L, 8L, 11L, 12L, 15L, 16L, 20L}) {
        AbelianField K(n, {});
        std::vector<long> T;
        for (long q : {3L, 7L, 11L, 13L}) {
            if (K.is_T_admissible({q})) { T = {q}; break; }
        }
        REQUIRE(!T.empty());
        GroupRingElement theta = theta_ST(K, K.ramified_primes(), T);
        CHECK(theta.is_integral());
        GroupRingElement plus =
            (GroupRingElement::one(K.group()) +
             GroupRingElement::basis(K.group(), K.complex_conjugation())) *
            theta;
        CHECK(plus.is_zero());
    }
}

TEST_CASE("Euler enlargement relation") {
    SUBCASE("Q(i), S={2}, v=13, T={}") {
        AbelianField K(4, {});
        CHECK(euler_enlargement_holds(K, {2}, {}, 13));
    }
    SUBCASE("Q(sqrt(-3)), S={3}, v=7, T={13}") {
        AbelianField K(3, {});
        CHECK(euler_enlargement_holds(K, {3}, {13}, 7));
    }
    SUBCASE("randomized battery draws") {
        std::mt19937 rng(2024);
        const std::vector<long> fields{3, 4, 5, 7, 8, 11, 12, 15};
        const std::vector<long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
        int done = 0;
        while (done < 25) {
            AbelianField K(fields[rng() % fields.size()], {});
            std::vector<long> avail;
            for (long p : primes)
                if (K.conductor() % p != 0) avail.push_back(p);
            const long q = avail[rng() % avail.size()];
            if (!K.is_T_admissible({q})) continue;
            long v = avail[rng() % avail.size()];
            if (v == q) continue;
            std::vector<long> S = K.ramified_primes();
            CHECK(euler_enlargement_holds(K, S, {q}, v));
            ++done;
        }
    }
    SUBCASE("precondition violations") {
        AbelianField K(4, {});
        CHECK_THROWS(euler_enlargement_holds(K, {2}, {}, 2));
        CHECK_THROWS(euler_enlargement_holds(K, {2}, {13}, 13));
    }
}

TEST_CASE("conjugation consistency of theta") {
    AbelianField K(5, {});
    GroupRingElement theta = theta_ST(K, {5}, {11});
    for (long t = 0; t < K.degree(); ++t) {
        const Character chi = Character::at_index(K.group(), t);
        CHECK(character_value(sharp(theta), chi) ==
              character_value(theta, chi.inverse()));
    }
}
