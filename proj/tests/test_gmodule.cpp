#include <doctest.h>

#include "stk/gmodule.hpp"
#include "stk/classgroup.hpp"

#include <random>

using namespace stk;

namespace {

// Z/m with rho acting as -1 over G = Z/2
GModuleFinite cyclic_minus_module(long m) {
    AbelianGroup g({2});
    IntMat rel(1, 1);
    rel(0, 0) = m;
    IntMat act(1, 1);
    act(0, 0) = m - 1;
    return normalized_module(g, rel, {act});
}

}  // namespace

TEST_CASE("normalized module") {
    AbelianGroup g({2});
    SUBCASE("relations reduce to invariant factors") {
        // Z^2 / <(2,0),(0,6),(1,3)>: the relation lattice is <(1,3),(2,0)>,
        // index 6
        IntMat rel(2, 3);
        rel << Int(2), Int(0), Int(1), Int(0), Int(6), Int(3);
        IntMat act = IntMat::Identity(2, 2);
        GModuleFinite M = normalized_module(g, rel, {act});
        CHECK(module_order(M) == 6);
        for (size_t i = 1; i < M.invariant_factors.size(); ++i)
            CHECK(M.invariant_factors[i] % M.invariant_factors[i - 1] == 0);
    }
    SUBCASE("infinite quotient is rejected") {
        IntMat rel = IntMat::Zero(2, 1);
        rel(0, 0) = 3;
        CHECK_THROWS_AS(
            normalized_module(g, rel, {IntMat::Identity(2, 2)}),
            std::invalid_argument);
    }
    SUBCASE("action violating group relations is rejected") {
        IntMat rel(1, 1);
        rel(0, 0) = 5;
        IntMat act(1, 1);
        act(0, 0) = 2;  // 2^2 = 4 != 1 mod 5
        CHECK_THROWS_AS(normalized_module(g, rel, {act}), std::invalid_argument);
    }
}

TEST_CASE("dualize") {
    SUBCASE("cyclic with trivial action is self-dual") {
        AbelianGroup g({2});
        IntMat rel(1, 1);
        rel(0, 0) = 9;
        IntMat act = IntMat::Identity(1, 1);
        GModuleFinite M = normalized_module(g, rel, {act});
        GModuleFinite D = dualize(M);
        CHECK(D.invariant_factors == M.invariant_factors);
        CHECK(D.action[0] == M.action[0]);
    }
    SUBCASE("order and invariant factors preserved; double dual = id") {
        std::mt19937 rng(31);
        AbelianGroup g({4});
        for (int t = 0; t < 10; ++t) {
            // module (Z/5)^2 with the generator acting by an invertible matrix
            // of multiplicative order dividing 4
            IntMat rel = IntMat::Zero(2, 2);
            rel(0, 0) = 5;
            rel(1, 1) = 5;
            IntMat a(2, 2);
            // powers of a fixed order-4 matrix mod 5
            a << Int(2), Int(0), Int(0), Int(3);
            GModuleFinite M = normalized_module(g, rel, {a});
            GModuleFinite D = dualize(M);
            CHECK(module_order(D) == module_order(M));
            CHECK(D.invariant_factors == M.invariant_factors);
            GModuleFinite DD = dualize(D);
            CHECK(DD.invariant_factors == M.invariant_factors);
            CHECK(DD.action[0] == M.action[0]);
        }
    }
    SUBCASE("dual action is the contragredient") {
        // G = Z/2, module Z/7, rho acts by 2? invalid (2^2 = 4 != 1): use -1
        GModuleFinite M = cyclic_minus_module(7);
        GModuleFinite D = dualize(M);
        // adjoint of (-1)^{-1} = -1
        CHECK(D.action[0](0, 0) == 6);
    }
}

TEST_CASE("present over minus ring and fitting ideals") {
    AbelianGroup g({2});
    MinusRing ring(g, 1);

    SUBCASE("M = Z/3 with rho = -1 over Z[1/2]: relation (3), Fitting (3)") {
        GModuleFinite M = cyclic_minus_module(3);
        PresentedModule P = present_over_minus_ring(M, ring);
        CHECK(P.num_generators == 1);
        IdealLattice F = fitting_ideal(P);
        IdealLattice three =
            ideal_from_generators(ring, {ring.lift(RatVec::Constant(1, Rat(3)))});
        CHECK(lattices_equal_away_from_2(F, three).equal_away_from_2);
    }
    SUBCASE("zero module gives the unit ideal") {
        GModuleFinite M = cyclic_minus_module(1);  // trivial
        CHECK(M.rank() == 0);
        IdealLattice F = fitting_ideal(present_over_minus_ring(M, ring));
        CHECK(lattices_equal_away_from_2(F, unit_ideal(ring)).equal_away_from_2);
    }
    SUBCASE("rho not acting as -1 is rejected") {
        IntMat rel(1, 1);
        rel(0, 0) = 5;
        IntMat act = IntMat::Identity(1, 1);
        GModuleFinite M = normalized_module(g, rel, {act});
        CHECK_THROWS_AS(present_over_minus_ring(M, ring), std::invalid_argument);
    }
    SUBCASE("even order is rejected") {
        GModuleFinite M = cyclic_minus_module(6);
        CHECK_THROWS_AS(present_over_minus_ring(M, ring), std::invalid_argument);
    }
}

TEST_CASE("fitting: presentation independence and sum multiplicativity") {
    AbelianGroup g({2});
    MinusRing ring(g, 1);
    SUBCASE("redundant generators do not change the Fitting ideal") {
        GModuleFinite M = cyclic_minus_module(9);
        PresentedModule P = present_over_minus_ring(M, ring);
        IdealLattice F = fitting_ideal(P);
        // re-present with a duplicated generator: relations gain the
        // difference row and a copy
        PresentedModule P2{ring, P.num_generators + 1, {}};
        for (const auto& row : P.relations) {
            auto r = row;
            r.push_back(GroupRingElement::zero(g));
            P2.relations.push_back(r);
        }
        // new generator = old generator: relation e_new - e_old = 0
        std::vector<GroupRingElement> diff{
            GroupRingElement::one(g) * Rat(-1), GroupRingElement::one(g)};
        // make both entries minus-ring elements
        diff[0] = ring.lift(RatVec::Constant(1, Rat(-1)));
        diff[1] = ring.lift(RatVec::Constant(1, Rat(1)));
        P2.relations.push_back(diff);
        IdealLattice F2 = fitting_ideal(P2);
        CHECK(lattices_equal_away_from_2(F, F2).equal_away_from_2);
    }
    SUBCASE("Fitt(M1 + M2) = Fitt(M1) Fitt(M2)") {
        GModuleFinite M1 = cyclic_minus_module(3);
        GModuleFinite M2 = cyclic_minus_module(9);
        GModuleFinite S = direct_sum(M1, M2);
        IdealLattice F = fitting_ideal(present_over_minus_ring(S, ring));
        IdealLattice F1 = fitting_ideal(present_over_minus_ring(M1, ring));
        IdealLattice F2 = fitting_ideal(present_over_minus_ring(M2, ring));
        CHECK(lattices_equal_away_from_2(F, lattice_product(F1, F2))
                  .equal_away_from_2);
    }
}

TEST_CASE("module pipeline: odd part, minus quotient, orbit quotient") {
    AbelianGroup g({2});
    SUBCASE("odd part strips 2-power factors") {
        IntMat rel = IntMat::Zero(2, 2);
        rel(0, 0) = 4;
        rel(1, 1) = 12;
        IntMat act = IntMat::Identity(2, 2);
        GModuleFinite M = normalized_module(g, rel, {act});
        GModuleFinite O = odd_part(M);
        CHECK(module_order(O) == 3);
    }
    SUBCASE("minus quotient of a swap module is cyclic") {
        // (Z/3)^2 with rho swapping the coordinates: M/(1+rho) = Z/3
        IntMat rel = IntMat::Zero(2, 2);
        rel(0, 0) = 3;
        rel(1, 1) = 3;
        IntMat swap(2, 2);
        swap << Int(0), Int(1), Int(1), Int(0);
        GModuleFinite M = normalized_module(g, rel, {swap});
        GModuleFinite Mm = minus_quotient(M, 1);
        CHECK(module_order(Mm) == 3);
        // rho acts as -1 afterwards
        CHECK(action_of_element(Mm, 1)(0, 0) == 2);
    }
    SUBCASE("orbit quotient kills the generated submodule") {
        IntMat rel = IntMat::Zero(2, 2);
        rel(0, 0) = 3;
        rel(1, 1) = 3;
        IntMat swap(2, 2);
        swap << Int(0), Int(1), Int(1), Int(0);
        GModuleFinite M = normalized_module(g, rel, {swap});
        IntVec v(2);
        v << Int(1), Int(0);  // orbit {(1,0),(0,1)} generates everything
        CHECK(module_order(quotient_by_orbit(M, v)) == 1);
        IntVec w(2);
        w << Int(1), Int(1);  // diagonal: quotient of order 3
        CHECK(module_order(quotient_by_orbit(M, w)) == 3);
    }
}
