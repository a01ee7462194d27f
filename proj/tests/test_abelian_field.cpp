#include <doctest.h>

#include "stk/abelian_field.hpp"
#include "stk/group_ring.hpp"

#include <algorithm>

using namespace stk;

TEST_CASE("field construction and normalization") {
    AbelianField qi(4, {});
    CHECK(qi.conductor() == 4);
    CHECK(qi.degree() == 2);
    CHECK(qi.is_cm());
    CHECK(qi.complex_conjugation() == qi.to_group(3));

    AbelianField z5(5, {});
    CHECK(z5.degree() == 4);
    CHECK(z5.group().invariant_factors() == std::vector<long>{4});

    // conductor 20 with U_5 <= H reduces to Q(zeta_5)
    AbelianField red(20, {11});
    CHECK(red.conductor() == 5);
    CHECK(red.degree() == 4);

    // n = 2 mod 4 normalizes away the factor 2
    AbelianField six(6, {});
    CHECK(six.conductor() == 3);

    // Q itself
    AbelianField q(1, {});
    CHECK(q.degree() == 1);
    CHECK(!q.is_cm());
    CHECK(q.ramified_primes().empty());

    // full unit group fixed field is Q
    AbelianField q2(12, {5, 7});
    CHECK(q2.conductor() == 1);

    CHECK_THROWS(AbelianField(4, {2}));              // generator not coprime
    CHECK_THROWS(AbelianField(200001, {}, 100000));  // cap exceeded

    // real field: no complex conjugation
    AbelianField real5(5, {4});  // Q(sqrt 5)
    CHECK(!real5.is_cm());
    CHECK_THROWS(real5.complex_conjugation());
}

TEST_CASE("normalization is idempotent") {
    for (long n : {3L, 4L, 5L, 8L, 15L, 16L, 20L, 40L}) {
        AbelianField K(n, {});
        AbelianField K2(K.conductor(), K.subgroup());
        CHECK(K2.conductor() == K.conductor());
        CHECK(K2.subgroup() == K.subgroup());
        CHECK(K2.group() == K.group());
    }
}

TEST_CASE("place data") {
    AbelianField qi(4, {});
    SUBCASE("Q(i), p = 13: split, Frobenius trivial") {
        PlaceData pd = qi.place(13);
        CHECK(!pd.ramified);
        CHECK(pd.frobenius == qi.group().identity());
        CHECK(pd.residue_degree == 1);
        CHECK(pd.num_primes_above == 2);
    }
    SUBCASE("Q(i), p = 2: totally ramified, designated lift is the identity") {
        PlaceData pd = qi.place(2);
        CHECK(pd.ramified);
        CHECK(pd.inertia.size() == 2);
        CHECK(pd.frobenius == qi.group().identity());
        CHECK(pd.residue_degree == 1);
        CHECK(pd.num_primes_above == 1);
    }
    SUBCASE("Q(i), p = 3: inert") {
        PlaceData pd = qi.place(3);
        CHECK(!pd.ramified);
        CHECK(pd.residue_degree == 2);
        CHECK(pd.num_primes_above == 1);
    }
    SUBCASE("Q(zeta_5), p = 11: split completely") {
        AbelianField z5(5, {});
        PlaceData pd = z5.place(11);
        CHECK(pd.frobenius == z5.group().identity());
        CHECK(pd.residue_degree == 1);
        CHECK(pd.num_primes_above == 4);
    }
    SUBCASE("g * f * #I = #G across fields and primes") {
        for (long n : {12L, 15L, 20L, 21L, 24L, 36L, 40L}) {
            AbelianField K(n, {});
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
                PlaceData pd = K.place(p);
                CHECK(pd.num_primes_above * pd.residue_degree *
                          static_cast<long>(pd.inertia.size()) ==
                      K.degree());
            }
        }
    }
    CHECK_THROWS(qi.place(6));  // not prime
}

TEST_CASE("fixed field unramified at J") {
    AbelianField qi(4, {});
    CHECK(qi.fixed_field_unramified_at({}).conductor() == 4);
    CHECK(qi.fixed_field_unramified_at({2}).conductor() == 1);  // Q

    AbelianField z15(15, {});
    AbelianField k3 = z15.fixed_field_unramified_at({3});
    CHECK(k3.conductor() == 5);
    CHECK(k3.degree() == 4);  // Q(zeta_5)
    AbelianField k5 = z15.fixed_field_unramified_at({5});
    CHECK(k5.conductor() == 3);

    // the subfield is genuinely unramified at J, and its ramified set computed
    // independently (inertia subgroups on the subfield) matches its conductor
    const std::vector<long> k3_ram = k3.ramified_primes();
    for (long p : k3_ram) CHECK(p != 3);
    for (long p : {2L, 3L, 5L, 7L}) {
        const bool in_set =
            std::find(k3_ram.begin(), k3_ram.end(), p) != k3_ram.end();
        CHECK(k3.place(p).ramified == in_set);
    }
    CHECK_THROWS(z15.fixed_field_unramified_at({7}));  // 7 not ramified
}

TEST_CASE("characters and conductors") {
    AbelianField qi(4, {});
    const auto& chars = qi.characters();
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].conductor() == 1);
    CHECK(chars[1].conductor() == 4);
    CHECK(chars[1].is_odd());
    // chi_{-4}: 1 -> 1, 3 -> -1
    CHECK(chars[1].value(1) == Cyclotomic::from_rat(2, Rat(1)));
    CHECK(chars[1].value(3) == Cyclotomic::from_rat(2, Rat(-1)));
    CHECK(chars[1].value(2).is_zero());

    AbelianField z5(5, {});
    std::vector<long> conds;
    long odd_count = 0;
    for (const auto& c : z5.characters()) {
        conds.push_back(c.conductor());
        if (c.is_odd()) ++odd_count;
    }
    std::sort(conds.begin(), conds.end());
    CHECK(conds == std::vector<long>({1, 5, 5, 5}));
    CHECK(odd_count == 2);  // #G/2 odd characters in a CM field

    // Q(zeta_15): one trivial, one mod-3, three mod-5, three mod-15
    AbelianField z15(15, {});
    std::vector<long> c15;
    for (const auto& c : z15.characters()) c15.push_back(c.conductor());
    std::sort(c15.begin(), c15.end());
    CHECK(c15 == std::vector<long>({1, 3, 5, 5, 5, 15, 15, 15}));
}

TEST_CASE("roots of unity") {
    CHECK(AbelianField(4, {}).roots_of_unity_order() == 4);
    CHECK(AbelianField(3, {}).roots_of_unity_order() == 6);
    CHECK(AbelianField(5, {}).roots_of_unity_order() == 10);
    CHECK(AbelianField(1, {}).roots_of_unity_order() == 2);
    CHECK(AbelianField(7, {1, 2, 4}).roots_of_unity_order() == 2);  // Q(sqrt(-7))
    CHECK(AbelianField(15, {}).roots_of_unity_order() == 30);
}

TEST_CASE("T admissibility") {
    AbelianField qi(4, {});
    CHECK(qi.is_T_admissible({13}));
    CHECK(!qi.is_T_admissible({2}));   // ramified and excluded by the 2-rule
    CHECK(!qi.is_T_admissible({}));    // no prime to kill mu_2

    AbelianField z3(3, {});
    CHECK(!z3.is_T_admissible({3}));   // ramified
    CHECK(z3.is_T_admissible({7}));
    CHECK(!z3.is_T_admissible({2}));   // 2 | m = 6 and no other prime
    CHECK(!z3.is_T_admissible({2, 3}));
    CHECK(z3.is_T_admissible({2, 7}));
}

TEST_CASE("g_v and h_v") {
    AbelianField qi(4, {});
    SUBCASE("unramified v: g_v = h_v = 2 - F_v") {
        auto [gv, hv] = qi.gv_hv(13);
        GroupRingElement two_minus_f =
            GroupRingElement::constant(qi.group(), Rat(2)) -
            GroupRingElement::basis(qi.group(), qi.place(13).frobenius);
        CHECK(gv == two_minus_f);
        CHECK(hv == gv);

        auto [gv3, hv3] = qi.gv_hv(3);
        GroupRingElement two_minus_f3 =
            GroupRingElement::constant(qi.group(), Rat(2)) -
            GroupRingElement::basis(qi.group(), qi.place(3).frobenius);
        CHECK(gv3 == two_minus_f3);
        CHECK(hv3 == gv3);
    }
    SUBCASE("Q(i), v = 2: g_v = 2 (designated lift is the identity)") {
        auto [gv, hv] = qi.gv_hv(2);
        CHECK(gv == GroupRingElement::constant(qi.group(), Rat(2)));
        CHECK(is_nonzerodivisor(hv));
    }
    SUBCASE("h_5 for Q(zeta_5) is a nonzero divisor") {
        AbelianField z5(5, {});
        auto [gv, hv] = z5.gv_hv(5);
        CHECK(is_nonzerodivisor(hv));
    }
    SUBCASE("h_v battery: nonzero divisor for all v <= 50, conductors <= 40") {
        for (long n : {3L, 4L, 5L, 8L, 12L, 15L, 16L, 21L, 40L}) {
            AbelianField K(n, {});
            for (long v = 2; v <= 50; ++v) {
                if (!is_prime(v)) continue;
                auto [gv, hv] = K.gv_hv(v);
                CHECK(is_nonzerodivisor(hv));
            }
        }
    }
}

TEST_CASE("projection to subfields") {
    AbelianField z15(15, {});
    AbelianField z5 = z15.fixed_field_unramified_at({3});
    CHECK(z15.contains(z5));
    CHECK(!z5.contains(z15));
    CHECK(z15.contains(AbelianField(1, {})));
    // projection is a surjective homomorphism
    std::vector<bool> hit(z5.degree(), false);
    for (long s = 0; s < z15.degree(); ++s) {
        const long a = z15.project_element(z5, s);
        hit[a] = true;
        for (long t = 0; t < z15.degree(); ++t)
            CHECK(z15.project_element(z5, z15.group().mul(s, t)) ==
                  z5.group().mul(a, z15.project_element(z5, t)));
    }
    for (bool b : hit) CHECK(b);
}

TEST_CASE("cm detection and odd characters") {
    // CM iff -1 not in H; rho central of order 2; odd characters satisfy
    // chi(rho) = -1
    for (long n : {3L, 4L, 5L, 7L, 8L, 11L, 12L, 15L, 16L}) {
        AbelianField K(n, {});
        CHECK(K.is_cm());
        const long rho = K.complex_conjugation();
        CHECK(K.group().element_order(rho) == 2);
        long odd = 0;
        for (const auto& c : K.characters())
            if (c.is_odd()) ++odd;
        CHECK(odd == K.degree() / 2);
    }
}

TEST_CASE("field json round trip") {
    AbelianField K(15, {});
    nlohmann::json j = K.to_json();
    CHECK(j["conductor"] == 15);
    AbelianField K2 = AbelianField::from_json(j);
    CHECK(K2.conductor() == 15);
    CHECK(K2.group() == K.group());
}
