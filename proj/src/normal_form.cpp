#include "stk/normal_form.hpp"

#include <stdexcept>

namespace stk {

namespace {

// Row transform [r_i; r_j] <- [[x, y], [-b/g, a/g]] * [r_i; r_j] where
// x*a + y*b = g = gcd(a, b), applied to A and mirrored on U.
void gcd_row_step(IntMat& A, IntMat& U, Eigen::Index i, Eigen::Index j,
                  Eigen::Index col) {
    const Int a = A(i, col), b = A(j, col);
    if (b == 0) return;
    if (a == 0) {
        A.row(i).swap(A.row(j));
        U.row(i).swap(U.row(j));
        return;
    }
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    const Int as = a / g, bs = b / g;
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
        const Int ri = A(i, k), rj = A(j, k);
        A(i, k) = x * ri + y * rj;
        A(j, k) = as * rj - bs * ri;
    }
    for (Eigen::Index k = 0; k < U.cols(); ++k) {
        const Int ri = U(i, k), rj = U(j, k);
        U(i, k) = x * ri + y * rj;
        U(j, k) = as * rj - bs * ri;
    }
}

}  // namespace

HnfTransform hermite_normal_form_transform(const IntMat& A) {
    const Eigen::Index m = A.rows(), n = A.cols();
    IntMat H = A;
    IntMat U = IntMat::Identity(m, m);
    Eigen::Index pivot_row = 0;
    for (Eigen::Index col = 0; col < n && pivot_row < m; ++col) {
        Eigen::Index nz = -1;
        for (Eigen::Index i = pivot_row; i < m; ++i)
            if (H(i, col) != 0) { nz = i; break; }
        if (nz < 0) continue;
        if (nz != pivot_row) {
            H.row(nz).swap(H.row(pivot_row));
            U.row(nz).swap(U.row(pivot_row));
        }
        for (Eigen::Index j = pivot_row + 1; j < m; ++j)
            gcd_row_step(H, U, pivot_row, j, col);
        if (H(pivot_row, col) < 0) {
            for (Eigen::Index k = 0; k < n; ++k) H(pivot_row, k) = -H(pivot_row, k);
            for (Eigen::Index k = 0; k < m; ++k) U(pivot_row, k) = -U(pivot_row, k);
        }
        const Int& p = H(pivot_row, col);
        for (Eigen::Index j = 0; j < pivot_row; ++j) {
            Int q = floor_div(H(j, col), p);
            if (q != 0) {
                for (Eigen::Index k = 0; k < n; ++k) H(j, k) -= q * H(pivot_row, k);
                for (Eigen::Index k = 0; k < m; ++k) U(j, k) -= q * U(pivot_row, k);
            }
        }
        ++pivot_row;
    }
    HnfTransform out;
    out.rank = pivot_row;
    out.hnf = H.topRows(pivot_row);
    out.transform = std::move(U);
    return out;
}

IntMat hermite_normal_form(const IntMat& A) {
    return hermite_normal_form_transform(A).hnf;
}

IntMat left_kernel(const IntMat& A) {
    HnfTransform t = hermite_normal_form_transform(A);
    return t.transform.bottomRows(A.rows() - t.rank);
}

SnfResult smith_normal_form(const IntMat& A) {
    const Eigen::Index m = A.rows(), n = A.cols();
    SnfResult r;
    r.D = A;
    r.U = IntMat::Identity(m, m);
    r.V = IntMat::Identity(n, n);
    IntMat& D = r.D;
    IntMat& U = r.U;
    IntMat& V = r.V;

    auto col_gcd_step = [&](Eigen::Index j0, Eigen::Index j1, Eigen::Index row) {
        const Int a = D(row, j0), b = D(row, j1);
        if (b == 0) return;
        if (a == 0) {
            D.col(j0).swap(D.col(j1));
            V.col(j0).swap(V.col(j1));
            return;
        }
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        const Int as = a / g, bs = b / g;
        for (Eigen::Index k = 0; k < m; ++k) {
            const Int ci = D(k, j0), cj = D(k, j1);
            D(k, j0) = x * ci + y * cj;
            D(k, j1) = as * cj - bs * ci;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const Int ci = V(k, j0), cj = V(k, j1);
            V(k, j0) = x * ci + y * cj;
            V(k, j1) = as * cj - bs * ci;
        }
    };

    const Eigen::Index steps = std::min(m, n);
    for (Eigen::Index t = 0; t < steps; ++t) {
        // Pivot search.
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = t; i < m && pi < 0; ++i)
            for (Eigen::Index j = t; j < n; ++j)
                if (D(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        if (pi != t) { D.row(pi).swap(D.row(t)); U.row(pi).swap(U.row(t)); }
        if (pj != t) { D.col(pj).swap(D.col(t)); V.col(pj).swap(V.col(t)); }

        // Clear column t and row t. Subtraction is used for divisible
        // entries (it never touches the pivot row/column); a gcd step
        // strictly shrinks |D(t,t)|, so the loop terminates.
        bool clean = false;
        while (!clean) {
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                if (D(i, t) % D(t, t) == 0) {
                    const Int q = D(i, t) / D(t, t);
                    for (Eigen::Index k = 0; k < n; ++k) D(i, k) -= q * D(t, k);
                    for (Eigen::Index k = 0; k < m; ++k) U(i, k) -= q * U(t, k);
                } else {
                    gcd_row_step(D, U, t, i, t);
                }
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                if (D(t, j) % D(t, t) == 0) {
                    const Int q = D(t, j) / D(t, t);
                    for (Eigen::Index k = 0; k < m; ++k) D(k, j) -= q * D(k, t);
                    for (Eigen::Index k = 0; k < n; ++k) V(k, j) -= q * V(k, t);
                } else {
                    col_gcd_step(t, j, t);
                }
            }
            clean = true;
            for (Eigen::Index i = t + 1; i < m && clean; ++i)
                if (D(i, t) != 0) clean = false;
            for (Eigen::Index j = t + 1; j < n && clean; ++j)
                if (D(t, j) != 0) clean = false;
        }
        if (D(t, t) < 0) {
            for (Eigen::Index k = 0; k < n; ++k) D(t, k) = -D(t, k);
            for (Eigen::Index k = 0; k < m; ++k) U(t, k) = -U(t, k);
        }

        // Divisibility: fold any non-multiple into the pivot and redo.
        for (Eigen::Index i = t + 1; i < m; ++i) {
            bool fold = false;
            for (Eigen::Index j = t + 1; j < n; ++j)
                if (D(i, j) % D(t, t) != 0) { fold = true; break; }
            if (fold) {
                for (Eigen::Index k = 0; k < n; ++k) D(t, k) += D(i, k);
                for (Eigen::Index k = 0; k < m; ++k) U(t, k) += U(i, k);
                --t;  // redo this step
                break;
            }
        }
    }
    return r;
}

std::vector<Int> elementary_divisors(const IntMat& A) {
    SnfResult r = smith_normal_form(A);
    std::vector<Int> out;
    const Eigen::Index k = std::min(r.D.rows(), r.D.cols());
    for (Eigen::Index i = 0; i < k; ++i)
        if (r.D(i, i) != 0) out.push_back(r.D(i, i));
    return out;
}

bool in_row_span(const IntMat& H, IntVec v) {
    if (v.size() != H.cols())
        throw std::invalid_argument("in_row_span: dimension mismatch");
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
        Eigen::Index piv = -1;
        for (Eigen::Index j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) { piv = j; break; }
        if (piv < 0) continue;
        if (v(piv) % H(i, piv) != 0) return false;
        const Int q = v(piv) / H(i, piv);
        if (q != 0)
            for (Eigen::Index j = piv; j < H.cols(); ++j) v(j) -= q * H(i, j);
    }
    for (Eigen::Index j = 0; j < v.size(); ++j)
        if (v(j) != 0) return false;
    return true;
}

Int hnf_determinant(const IntMat& H) {
    if (H.rows() != H.cols())
        throw std::invalid_argument("hnf_determinant: matrix not square");
    Int d = 1;
    for (Eigen::Index i = 0; i < H.rows(); ++i) d *= H(i, i);
    return d;
}

}  // namespace stk
