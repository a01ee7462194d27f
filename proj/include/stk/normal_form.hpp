#pragma once

#include "stk/rational.hpp"

namespace stk {

// Row-style Hermite normal form of the row span of A: row echelon with
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has rank(A) rows.
IntMat hermite_normal_form(const IntMat& A);

struct HnfTransform {
    IntMat hnf;        // rank x cols
    IntMat transform;  // rows x rows unimodular, transform * A = [hnf; 0]
    Eigen::Index rank = 0;
};
HnfTransform hermite_normal_form_transform(const IntMat& A);

// Basis (as rows) of { x : x * A = 0 }.
IntMat left_kernel(const IntMat& A);

// U * A * V = D diagonal with d_1 | d_2 | ... | d_r (positive), U, V unimodular.
struct SnfResult {
    IntMat D, U, V;
};
SnfResult smith_normal_form(const IntMat& A);

// Nonzero diagonal entries of the Smith form, ascending divisibility chain.
std::vector<Int> elementary_divisors(const IntMat& A);

// Membership of v in the row span of an HNF matrix H (as produced above).
bool in_row_span(const IntMat& H, IntVec v);

// Product of pivots of a full-rank square HNF matrix = lattice index in Z^n.
Int hnf_determinant(const IntMat& H);

}  // namespace stk
