#include "stk/classgroup.hpp"

#include "stk/normal_form.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stk {

std::vector<QuadraticForm> reduced_forms(long D) {
    if (D >= 0 || ((D % 4 != 0) && (((D % 4) + 4) % 4 != 1)))
        throw std::invalid_argument("reduced_forms: need D < 0, D = 0 or 1 mod 4");
    std::vector<QuadraticForm> out;
    for (long b = (D % 2 == 0) ? 0 : 1; b * b * 3 <= -D; b += 2) {
        const long M = (b * b - D) / 4;
        for (long a = std::max(b, 1L); a * a <= M; ++a) {
            if (M % a != 0) continue;
            const long c = M / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
            if (b != 0 && b != a && a != c) out.push_back({a, -b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuadraticForm& x, const QuadraticForm& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

Int class_number(long D) {
    return Int(static_cast<long>(reduced_forms(D).size()));
}

namespace {

// Arithmetic in O_K = Z[w], w = (t + sqrt(D))/2, t = D mod 2:
// w^2 = t w - nrm with nrm = (t^2 - D)/4.
struct QuadOrder {
    long D, t;
    Int nrm;
};

struct QuadElem {
    Int x, y;  // x + y w
};

QuadElem mul(const QuadOrder& o, const QuadElem& a, const QuadElem& b) {
    return {a.x * b.x - a.y * b.y * o.nrm,
            a.x * b.y + a.y * b.x + a.y * b.y * o.t};
}

QuadElem conj(const QuadOrder& o, const QuadElem& a) {
    return {a.x + a.y * o.t, -a.y};
}

Int norm(const QuadOrder& o, const QuadElem& a) {
    return a.x * a.x + a.x * a.y * o.t + a.y * a.y * o.nrm;
}

// Ideal as row-HNF basis in (1, w) coordinates.
struct QuadIdeal {
    IntMat basis;  // 2x2
};

QuadIdeal ideal_from_rows(const std::vector<QuadElem>& rows) {
    IntMat A(static_cast<long>(rows.size()), 2);
    for (size_t i = 0; i < rows.size(); ++i) {
        A(static_cast<long>(i), 0) = rows[i].x;
        A(static_cast<long>(i), 1) = rows[i].y;
    }
    IntMat H = hermite_normal_form(A);
    if (H.rows() != 2) throw std::logic_error("ideal_from_rows: rank deficient");
    return {H};
}

QuadIdeal mul(const QuadOrder& o, const QuadIdeal& a, const QuadIdeal& b) {
    std::vector<QuadElem> rows;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            rows.push_back(mul(o, {a.basis(i, 0), a.basis(i, 1)},
                               {b.basis(j, 0), b.basis(j, 1)}));
    return ideal_from_rows(rows);
}

QuadIdeal conj(const QuadOrder& o, const QuadIdeal& a) {
    std::vector<QuadElem> rows;
    for (long i = 0; i < 2; ++i)
        rows.push_back(conj(o, {a.basis(i, 0), a.basis(i, 1)}));
    return ideal_from_rows(rows);
}

Int ideal_norm(const QuadIdeal& a) { return a.basis(0, 0) * a.basis(1, 1); }

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// I is principal iff it contains an element of norm equal to N(I)
// (imaginary quadratic: the norm form on the ideal lattice is positive
// definite with minimum N(I) exactly on generators).
bool is_principal(const QuadOrder& o, const QuadIdeal& I) {
    const QuadElem v1{I.basis(0, 0), I.basis(0, 1)};
    const QuadElem v2{I.basis(1, 0), I.basis(1, 1)};
    const Int N = ideal_norm(I);
    const Int A = norm(o, v1);
    const Int C = norm(o, v2);
    const Int B = norm(o, {v1.x + v2.x, v1.y + v2.y}) - A - C;  // Tr(v1 conj(v2))
    const Int disc = 4 * A * C - B * B;  // positive
    const Int wmax = isqrt(4 * A * N / disc) + 1;
    for (Int w = -wmax; w <= wmax; ++w) {
        // A u^2 + B u w + (C w^2 - N) = 0
        const Int du = B * B * w * w - 4 * A * (C * w * w - N);
        if (du < 0) continue;
        const Int s = isqrt(du);
        if (s * s != du) continue;
        for (int sgn : {1, -1}) {
            const Int num = -B * w + sgn * s;
            if (num % (2 * A) == 0) {
                const Int u = num / (2 * A);
                const QuadElem cand{u * v1.x + w * v2.x, u * v1.y + w * v2.y};
                if (norm(o, cand) == N && !(cand.x == 0 && cand.y == 0)) return true;
            }
        }
    }
    return false;
}

}  // namespace

Int class_number_minkowski(long D) {
    if (D >= 0) throw std::invalid_argument("class_number_minkowski: D must be negative");
    const long t = (D % 2 == 0) ? 0 : 1;
    const QuadOrder o{D, t, (Int(t) * t - D) / 4};

    // Every class contains an integral ideal of norm <= (2/pi) sqrt(|D|),
    // and sqrt(|D|/2) is a convenient exact over-bound.
    long bound = 1;
    while (bound * bound * 2 <= -D) ++bound;

    std::vector<QuadIdeal> reps;
    for (long a = 1; a <= bound; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            // [a, w - (b + t)/2] with b = t mod 2
            if (((b - t) % 2 + 2) % 2 != 0) continue;
            const QuadIdeal I =
                ideal_from_rows({{Int(a), Int(0)}, {Int(-(b + t) / 2), Int(1)}});
            bool found = false;
            for (const QuadIdeal& Rp : reps)
                if (is_principal(o, mul(o, I, conj(o, Rp)))) { found = true; break; }
            if (!found) reps.push_back(I);
        }
    }
    return Int(static_cast<long>(reps.size()));
}

namespace {

struct ResidueRaw {
    std::vector<Int> factors;      // g copies of q^f - 1
    std::vector<IntMat> action;    // per canonical generator of G
    IntVec mu;                     // image of the fixed root of unity
};

ResidueRaw residue_raw(const AbelianField& K, long q, long mu_seed) {
    const PlaceData pd = K.place(q);
    if (pd.ramified) throw std::invalid_argument("residue_gmodule: q is ramified");
    const AbelianGroup& G = K.group();
    const long f = pd.residue_degree;
    const Int M = pow_int(Int(q), static_cast<unsigned long>(f)) - 1;

    // coset decomposition of G modulo <F_v>, first-seen representatives
    std::vector<long> coset_of(G.order(), -1);
    std::vector<long> reps;
    for (long s = 0; s < G.order(); ++s) {
        if (coset_of[s] >= 0) continue;
        const long idx = static_cast<long>(reps.size());
        long x = s;
        for (long i = 0; i < f; ++i) {
            coset_of[x] = idx;
            x = G.mul(x, pd.frobenius);
        }
        reps.push_back(s);
    }
    const long g = static_cast<long>(reps.size());

    ResidueRaw out;
    out.factors.assign(g, M);
    for (long gi = 0; gi < G.rank(); ++gi) {
        const long gamma = G.generator(gi);
        IntMat A = IntMat::Zero(g, g);
        for (long i = 0; i < g; ++i) {
            const long z = G.mul(reps[i], gamma);
            const long j = coset_of[z];
            long tpow = 0;
            long x = reps[j];
            while (x != z) {
                x = G.mul(x, pd.frobenius);
                ++tpow;
            }
            Int qt;
            mpz_powm_ui(qt.get_mpz_t(), Int(q).get_mpz_t(),
                        static_cast<unsigned long>(tpow), M.get_mpz_t());
            A(j, i) = qt;
        }
        out.action.push_back(std::move(A));
    }

    const long m = K.roots_of_unity_order();
    const long m0 = q == 2 ? static_cast<long>(odd_part(Int(m)).get_si())
                           : m;
    if (q != 2 && m % q == 0)
        throw std::logic_error("residue_gmodule: q divides the root-of-unity order");
    if (M % m0 != 0)
        throw std::logic_error("residue_gmodule: residue field misses mu_K");
    if (std::gcd(mu_seed, m0) != 1)
        throw std::invalid_argument("residue_gmodule: mu_seed not coprime to m0");
    const Int z0 = (M / m0) * mu_seed;
    out.mu = IntVec::Zero(g);
    for (long i = 0; i < g; ++i) {
        const long u = K.representative(G.inverse(reps[i])) % std::max(m0, 1L);
        out.mu(i) = (Int(u) * z0) % M;
    }
    return out;
}

}  // namespace

GModuleFinite residue_gmodule(const AbelianField& K, long q) {
    ResidueRaw raw = residue_raw(K, q, 1);
    const long k = static_cast<long>(raw.factors.size());
    IntMat rel = IntMat::Zero(k, k);
    for (long i = 0; i < k; ++i) rel(i, i) = raw.factors[i];
    return normalized_module(K.group(), rel, raw.action);
}

IntVec residue_mu_image(const AbelianField& K, long q, long mu_seed) {
    return residue_raw(K, q, mu_seed).mu;
}

TRayMinusModule t_ray_minus_module(const AbelianField& K, std::vector<long> T,
                                   bool assume_trivial_odd_minus_class_group,
                                   long mu_seed) {
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    if (!K.is_cm()) throw std::invalid_argument("t_ray_minus_module: K must be CM");
    if (!K.is_T_admissible(T))
        throw std::invalid_argument("t_ray_minus_module: T is not admissible");

    TRayMinusModule out;
    if (K.degree() == 2) {
        out.quadratic_scope = true;
        out.odd_class_multiplier = odd_part(class_number(-K.conductor()));
    } else if (!assume_trivial_odd_minus_class_group) {
        throw std::domain_error(
            "t_ray_minus_module: unsupported scope: non-quadratic field without "
            "the trivial-odd-minus-class-group assertion");
    }

    const AbelianGroup& G = K.group();
    const long rho = K.complex_conjugation();

    // Raw direct sum over q in T.
    std::vector<Int> factors;
    std::vector<IntMat> action(G.rank());
    IntVec mu(0);
    for (long q : T) {
        ResidueRaw raw = residue_raw(K, q, mu_seed);
        const long a = static_cast<long>(factors.size());
        const long b = static_cast<long>(raw.factors.size());
        factors.insert(factors.end(), raw.factors.begin(), raw.factors.end());
        IntVec mu2(a + b);
        for (long i = 0; i < a; ++i) mu2(i) = mu(i);
        for (long i = 0; i < b; ++i) mu2(a + i) = raw.mu(i);
        mu = std::move(mu2);
        for (long gi = 0; gi < G.rank(); ++gi) {
            IntMat m = IntMat::Zero(a + b, a + b);
            if (a > 0) m.topLeftCorner(a, a) = action[gi];
            m.bottomRightCorner(b, b) = raw.action[gi];
            action[gi] = std::move(m);
        }
    }
    const long k = static_cast<long>(factors.size());
    if (k == 0) {
        // empty T: the module is zero
        out.module = normalized_module(G, IntMat::Identity(0, 0), action);
        return out;
    }

    // odd part
    for (Int& m : factors) m = odd_part(m);

    // raw action of rho on the direct sum (mod the odd factors)
    auto raw_action_of = [&](long elem) {
        IntMat A = IntMat::Identity(k, k);
        const std::vector<long> exps = G.exponents(elem);
        for (size_t i = 0; i < exps.size(); ++i)
            for (long t = 0; t < exps[i]; ++t) {
                IntMat B(k, k);
                for (long r = 0; r < k; ++r)
                    for (long c = 0; c < k; ++c) {
                        Int s = 0;
                        for (long K2 = 0; K2 < k; ++K2) s += action[i](r, K2) * A(K2, c);
                        B(r, c) = factors[r] == 0 ? s : s % factors[r];
                    }
                A = std::move(B);
            }
        return A;
    };

    const IntMat Arho = raw_action_of(rho);
    // relations: diag(odd factors), (1 + rho) columns, mu orbit columns
    const long n = G.order();
    IntMat rel = IntMat::Zero(k, k + k + n);
    for (long i = 0; i < k; ++i) rel(i, i) = factors[i];
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) rel(i, k + j) = Arho(i, j) + (i == j ? 1 : 0);
    for (long s = 0; s < n; ++s) {
        const IntMat As = raw_action_of(s);
        for (long i = 0; i < k; ++i) {
            Int acc = 0;
            for (long j = 0; j < k; ++j) acc += As(i, j) * mu(j);
            rel(i, 2 * k + s) = factors[i] == 0 ? acc : acc % factors[i];
        }
    }
    out.module = normalized_module(G, rel, action);
    return out;
}

}  // namespace stk
