#include "stk/gmodule.hpp"

#include "stk/normal_form.hpp"

#include <stdexcept>

namespace stk {

namespace {

void reduce_rows_mod(IntMat& A, const std::vector<Int>& mods) {
    for (long i = 0; i < A.rows(); ++i)
        for (long j = 0; j < A.cols(); ++j) {
            A(i, j) %= mods[i];
            if (A(i, j) < 0) A(i, j) += mods[i];
        }
}

IntMat mul_mod_rows(const IntMat& A, const IntMat& B, const std::vector<Int>& mods) {
    IntMat C(A.rows(), B.cols());
    for (long i = 0; i < A.rows(); ++i)
        for (long j = 0; j < B.cols(); ++j) {
            Int s = 0;
            for (long k = 0; k < A.cols(); ++k) s += A(i, k) * B(k, j);
            s %= mods[i];
            if (s < 0) s += mods[i];
            C(i, j) = s;
        }
    return C;
}

bool equal_mod_rows(const IntMat& A, const IntMat& B, const std::vector<Int>& mods) {
    for (long i = 0; i < A.rows(); ++i)
        for (long j = 0; j < A.cols(); ++j)
            if ((A(i, j) - B(i, j)) % mods[i] != 0) return false;
    return true;
}

IntMat unimodular_inverse(const IntMat& U) {
    HnfTransform t = hermite_normal_form_transform(U);
    if (t.rank != U.rows() || t.hnf != IntMat::Identity(U.rows(), U.cols()))
        throw std::logic_error("unimodular_inverse: matrix is not unimodular");
    return t.transform;
}

}  // namespace

GModuleFinite normalized_module(const AbelianGroup& G, const IntMat& relations,
                                const std::vector<IntMat>& action) {
    const long k = relations.rows();
    if (static_cast<long>(action.size()) != G.rank())
        throw std::invalid_argument("normalized_module: one matrix per generator");

    SnfResult snf = smith_normal_form(relations);
    std::vector<Int> factors;
    std::vector<long> keep;
    for (long i = 0; i < k; ++i) {
        if (i >= snf.D.cols() || snf.D(i, i) == 0)
            throw std::invalid_argument("normalized_module: infinite quotient");
        if (snf.D(i, i) > 1) {
            factors.push_back(snf.D(i, i));
            keep.push_back(i);
        }
    }

    const IntMat Uinv = unimodular_inverse(snf.U);
    GModuleFinite M;
    M.acting_group = G;
    M.invariant_factors = factors;
    const long kk = static_cast<long>(keep.size());
    for (const IntMat& A : action) {
        if (A.rows() != k || A.cols() != k)
            throw std::invalid_argument("normalized_module: action size mismatch");
        IntMat full = snf.U * A * Uinv;
        IntMat red(kk, kk);
        for (long i = 0; i < kk; ++i)
            for (long j = 0; j < kk; ++j) red(i, j) = full(keep[i], keep[j]);
        reduce_rows_mod(red, factors);
        M.action.push_back(std::move(red));
    }

    // The action must satisfy the relations of G and commute.
    const auto& d = G.invariant_factors();
    const IntMat id = IntMat::Identity(kk, kk);
    for (long i = 0; i < G.rank(); ++i) {
        IntMat p = id;
        for (long t = 0; t < d[i]; ++t) p = mul_mod_rows(p, M.action[i], factors);
        if (!equal_mod_rows(p, id, factors))
            throw std::invalid_argument("normalized_module: action violates relations of G");
        for (long j = i + 1; j < G.rank(); ++j)
            if (!equal_mod_rows(mul_mod_rows(M.action[i], M.action[j], factors),
                                mul_mod_rows(M.action[j], M.action[i], factors),
                                factors))
                throw std::invalid_argument("normalized_module: action does not commute");
    }
    return M;
}

IntMat action_of_element(const GModuleFinite& M, long elem) {
    const long k = M.rank();
    IntMat out = IntMat::Identity(k, k);
    const std::vector<long> exps = M.acting_group.exponents(elem);
    for (size_t i = 0; i < exps.size(); ++i)
        for (long t = 0; t < exps[i]; ++t)
            out = mul_mod_rows(out, M.action[i], M.invariant_factors);
    return out;
}

Int module_order(const GModuleFinite& M) {
    Int n = 1;
    for (const Int& m : M.invariant_factors) n *= m;
    return n;
}

GModuleFinite direct_sum(const GModuleFinite& A, const GModuleFinite& B) {
    if (A.acting_group != B.acting_group)
        throw std::invalid_argument("direct_sum: acting group mismatch");
    const long ka = A.rank(), kb = B.rank();
    IntMat rel = IntMat::Zero(ka + kb, ka + kb);
    for (long i = 0; i < ka; ++i) rel(i, i) = A.invariant_factors[i];
    for (long i = 0; i < kb; ++i) rel(ka + i, ka + i) = B.invariant_factors[i];
    std::vector<IntMat> act;
    for (long g = 0; g < A.acting_group.rank(); ++g) {
        IntMat m = IntMat::Zero(ka + kb, ka + kb);
        m.topLeftCorner(ka, ka) = A.action[g];
        m.bottomRightCorner(kb, kb) = B.action[g];
        act.push_back(std::move(m));
    }
    return normalized_module(A.acting_group, rel, act);
}

GModuleFinite odd_part(const GModuleFinite& M) {
    const long k = M.rank();
    IntMat rel = IntMat::Zero(k, k);
    for (long i = 0; i < k; ++i) rel(i, i) = odd_part(M.invariant_factors[i]);
    return normalized_module(M.acting_group, rel, M.action);
}

GModuleFinite minus_quotient(const GModuleFinite& M, long rho) {
    for (const Int& m : M.invariant_factors)
        if (m % 2 == 0)
            throw std::invalid_argument("minus_quotient: module must have odd order");
    const long k = M.rank();
    const IntMat R = action_of_element(M, rho);
    IntMat rel = IntMat::Zero(k, 2 * k);
    for (long i = 0; i < k; ++i) rel(i, i) = M.invariant_factors[i];
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            rel(i, k + j) = R(i, j) + (i == j ? 1 : 0);
    return normalized_module(M.acting_group, rel, M.action);
}

GModuleFinite quotient_by_orbit(const GModuleFinite& M, const IntVec& v) {
    const long k = M.rank();
    if (v.size() != k) throw std::invalid_argument("quotient_by_orbit: bad vector");
    const long n = M.acting_group.order();
    IntMat rel = IntMat::Zero(k, k + n);
    for (long i = 0; i < k; ++i) rel(i, i) = M.invariant_factors[i];
    for (long s = 0; s < n; ++s) {
        const IntMat As = action_of_element(M, s);
        for (long i = 0; i < k; ++i) {
            Int acc = 0;
            for (long j = 0; j < k; ++j) acc += As(i, j) * v(j);
            rel(i, k + s) = acc % M.invariant_factors[i];
        }
    }
    return normalized_module(M.acting_group, rel, M.action);
}

GModuleFinite dualize(const GModuleFinite& M) {
    const long k = M.rank();
    GModuleFinite out;
    out.acting_group = M.acting_group;
    out.invariant_factors = M.invariant_factors;
    for (long g = 0; g < M.acting_group.rank(); ++g) {
        const long ginv =
            M.acting_group.inverse(M.acting_group.generator(g));
        const IntMat A = action_of_element(M, ginv);
        // adjoint w.r.t. the pairing <y, x> = sum y_i x_i / m_i:
        // D_{ab} = m_a A_{ba} / m_b, integral because A preserves relations
        IntMat D(k, k);
        for (long a = 0; a < k; ++a)
            for (long b = 0; b < k; ++b)
                D(a, b) = exact_div(M.invariant_factors[a] * A(b, a),
                                    M.invariant_factors[b]);
        reduce_rows_mod(D, out.invariant_factors);
        out.action.push_back(std::move(D));
    }
    return out;
}

PresentedModule present_over_minus_ring(const GModuleFinite& M, const MinusRing& ring) {
    if (M.acting_group != ring.group())
        throw std::invalid_argument("present_over_minus_ring: group mismatch");
    for (const Int& m : M.invariant_factors)
        if (m % 2 == 0)
            throw std::invalid_argument("present_over_minus_ring: module must have odd order");
    const long k = M.rank();
    const long d = ring.dim();
    {
        const IntMat R = action_of_element(M, ring.rho());
        IntMat minus_id = IntMat::Identity(k, k);
        for (long i = 0; i < k; ++i) minus_id(i, i) = M.invariant_factors[i] - 1;
        if (!equal_mod_rows(R, minus_id, M.invariant_factors))
            throw std::invalid_argument("present_over_minus_ring: rho must act as -1");
    }
    PresentedModule P{ring, k, {}};
    if (k == 0) return P;

    // evaluation Z^{dk} -> M: basis (i, j) -> (t_j - rho t_j) e_i = 2 A(t_j) e_i
    IntMat E(k, d * k);
    for (long j = 0; j < d; ++j) {
        const IntMat A = action_of_element(M, ring.transversal()[j]);
        for (long i = 0; i < k; ++i)
            for (long a = 0; a < k; ++a) E(a, i * d + j) = 2 * A(a, i);
    }
    // kernel of Z^{dk} -> Z^k / diag(m): left kernel of [E | diag(m)]^T
    IntMat Mt(d * k + k, k);
    for (long a = 0; a < k; ++a) {
        for (long c = 0; c < d * k; ++c) Mt(c, a) = E(a, c);
        for (long c = 0; c < k; ++c) Mt(d * k + c, a) = (c == a ? M.invariant_factors[a] : 0);
    }
    IntMat ker = left_kernel(Mt);  // rows: (x, y) with x E^T + ... = 0
    // rows of ker: vectors (x in Z^{dk}, y in Z^k) with sum x_c E(.,c) + diag(m) y = 0
    IntMat X = hermite_normal_form(ker.leftCols(d * k));
    for (long r = 0; r < X.rows(); ++r) {
        std::vector<GroupRingElement> row;
        row.reserve(k);
        for (long i = 0; i < k; ++i) {
            RatVec c(d);
            for (long j = 0; j < d; ++j) c(j) = Rat(X(r, i * d + j));
            row.push_back(ring.lift(c));
        }
        P.relations.push_back(std::move(row));
    }
    return P;
}

namespace {

// Laplace-style expansion with column swapping: each swap of two distinct
// column slots contributes a factor -1 to the term.
GroupRingElement group_ring_det(const std::vector<std::vector<GroupRingElement>>& rows,
                                const std::vector<long>& rsel, std::vector<long>& csel,
                                const AbelianGroup& g, size_t depth) {
    if (depth == rsel.size()) return GroupRingElement::one(g);
    GroupRingElement acc = GroupRingElement::zero(g);
    for (size_t pos = depth; pos < csel.size(); ++pos) {
        std::swap(csel[depth], csel[pos]);
        const GroupRingElement& entry = rows[rsel[depth]][csel[depth]];
        if (!entry.is_zero()) {
            const GroupRingElement term =
                entry * group_ring_det(rows, rsel, csel, g, depth + 1);
            acc = pos == depth ? acc + term : acc - term;
        }
        std::swap(csel[depth], csel[pos]);
    }
    return acc;
}

}  // namespace

IdealLattice fitting_ideal(const PresentedModule& P) {
    const MinusRing& ring = P.ring;
    if (P.num_generators == 0) return unit_ideal(ring);
    const long k = P.num_generators;
    const long R = static_cast<long>(P.relations.size());
    if (R < k)
        throw std::domain_error("fitting_ideal: infinite cokernel (too few relations)");

    std::vector<GroupRingElement> minors;
    std::vector<long> sel(k);
    // iterate over k-subsets of relation rows
    for (long i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        std::vector<long> csel(k);
        for (long i = 0; i < k; ++i) csel[i] = i;
        minors.push_back(group_ring_det(P.relations, sel, csel, ring.group(), 0));
        long pos = k - 1;
        while (pos >= 0 && sel[pos] == R - k + pos) --pos;
        if (pos < 0) break;
        ++sel[pos];
        for (long i = pos + 1; i < k; ++i) sel[i] = sel[i - 1] + 1;
    }
    bool all_zero = true;
    for (const GroupRingElement& m : minors)
        if (!m.is_zero()) { all_zero = false; break; }
    if (all_zero)
        throw std::domain_error("fitting_ideal: infinite cokernel (vanishing minors)");
    try {
        return ideal_from_generators(ring, minors);
    } catch (const std::domain_error&) {
        throw std::domain_error("fitting_ideal: infinite cokernel");
    }
}

}  // namespace stk
