#pragma once

#include "stk/abelian_field.hpp"
#include "stk/gmodule.hpp"

#include <vector>

namespace stk {

struct QuadraticForm {
    long a = 0, b = 0, c = 0;
};

// Primitive reduced forms (a, b, c) of discriminant D < 0: |b| <= a <= c,
// with b >= 0 when |b| = a or a = c.
std::vector<QuadraticForm> reduced_forms(long D);

// h(D) = number of primitive reduced forms.
Int class_number(long D);

// Independent oracle: enumerate integral ideals up to the Minkowski bound
// and count equivalence classes, testing I ~ J via principality of I * conj(J)
// (shortest-vector search in the ideal lattice).
Int class_number_minkowski(long D);

// (O_K/q)^* as a G-module for unramified q: g copies of the cyclic group
// F_{q^f}^* in discrete-log coordinates, G permuting the copies through
// cosets of <F_v> and F_v acting as multiplication by q.
GModuleFinite residue_gmodule(const AbelianField& K, long q);

// The image of a fixed primitive root of unity of K in the residue module,
// in the raw direct-sum coordinates (one coordinate per prime above q).
// mu_seed selects the order-m0 generator zeta^seed (seed coprime to m0);
// the generated G-submodule is independent of the choice.
IntVec residue_mu_image(const AbelianField& K, long q, long mu_seed = 1);

// Minus part of the T-ray class module: the odd minus quotient of
// (+)_{q in T} (O_K/q)^* divided by the image of mu_K, together with the odd
// class-number multiplier for quadratic fields. Non-quadratic fields require
// the caller to assert that the odd minus class group is trivial.
struct TRayMinusModule {
    GModuleFinite module;
    Int odd_class_multiplier = 1;  // odd part of h(D) for quadratic K, else 1
    bool quadratic_scope = false;
};
TRayMinusModule t_ray_minus_module(const AbelianField& K, std::vector<long> T,
                                   bool assume_trivial_odd_minus_class_group = false,
                                   long mu_seed = 1);

}  // namespace stk
