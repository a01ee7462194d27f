#include "stk/ideal_lattice.hpp"

#include "stk/lseries.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace stk {

MinusRing::MinusRing(AbelianGroup group, long rho)
    : group_(std::move(group)), rho_(rho) {
    if (rho_ == group_.identity() || group_.mul(rho_, rho_) != group_.identity())
        throw std::invalid_argument("MinusRing: rho must have order 2");
    for (long i = 0; i < group_.order(); ++i)
        if (i < group_.mul(rho_, i)) transversal_.push_back(i);
}

RatVec MinusRing::coords(const GroupRingElement& x) const {
    if (x.group() != group_)
        throw std::invalid_argument("MinusRing: group mismatch");
    RatVec c(dim());
    const Rat half = make_rat(1, 2);
    for (long i = 0; i < dim(); ++i) {
        const long t = transversal_[i];
        c(i) = (x.coeff(t) - x.coeff(group_.mul(rho_, t))) * half;
    }
    return c;
}

GroupRingElement MinusRing::lift(const RatVec& c) const {
    if (c.size() != dim()) throw std::invalid_argument("MinusRing: bad coords");
    RatVec full = RatVec::Zero(group_.order());
    for (long i = 0; i < dim(); ++i) {
        full(transversal_[i]) = c(i);
        full(group_.mul(rho_, transversal_[i])) = -c(i);
    }
    return GroupRingElement(group_, std::move(full));
}

GroupRingElement MinusRing::minus_unit() const {
    RatVec c = RatVec::Zero(group_.order());
    c(group_.identity()) = make_rat(1, 2);
    c(rho_) = make_rat(-1, 2);
    return GroupRingElement(group_, std::move(c));
}

namespace {

// Canonical (hnf, denominator) from rational generator rows; throws on rank
// deficiency. Checked to be stable under every group generator.
IdealLattice lattice_from_rows(IdealLattice::Ambient ambient, AbelianGroup g,
                               long rho, const std::vector<RatVec>& rows) {
    if (rows.empty())
        throw std::invalid_argument("IdealLattice: no generators");
    const long d = static_cast<long>(rows.front().size());
    Int den = 1;
    for (const RatVec& r : rows)
        for (Eigen::Index k = 0; k < r.size(); ++k) den = lcm(den, r(k).get_den());
    IntMat A(static_cast<long>(rows.size()), d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (long k = 0; k < d; ++k) {
            const Rat& q = rows[i](k);
            A(static_cast<long>(i), k) = q.get_num() * exact_div(den, q.get_den());
        }
    IntMat H = hermite_normal_form(A);
    if (H.rows() != d)
        throw std::domain_error("IdealLattice: generators span a rank-deficient lattice");
    Int content = 0;
    for (long i = 0; i < d && content != 1; ++i)
        for (long k = 0; k < d; ++k) content = gcd(content, H(i, k));
    const Int red = gcd(content, den);
    if (red > 1) {
        for (long i = 0; i < d; ++i)
            for (long k = 0; k < d; ++k) H(i, k) = exact_div(H(i, k), red);
        den = exact_div(den, red);
    }
    IdealLattice out;
    out.ambient = ambient;
    out.group = std::move(g);
    out.rho = rho;
    out.hnf = std::move(H);
    out.denominator = den;
    return out;
}

std::vector<RatVec> coordinate_orbit(const MinusRing& ring,
                                     const GroupRingElement& x) {
    std::vector<RatVec> rows;
    rows.reserve(ring.group().order());
    for (long s = 0; s < ring.group().order(); ++s)
        rows.push_back(ring.coords(GroupRingElement::basis(ring.group(), s) * x));
    return rows;
}

GroupRingElement lattice_basis_element(const IdealLattice& L, long row,
                                       const MinusRing* ring) {
    RatVec c(L.dim());
    for (long k = 0; k < L.dim(); ++k)
        c(k) = make_rat(L.hnf(row, k), L.denominator);
    if (L.ambient == IdealLattice::Ambient::Minus) return ring->lift(c);
    return GroupRingElement(L.group, std::move(c));
}

void check_group_stability(const IdealLattice& L) {
    // Multiplication by each group generator must preserve the lattice.
    const AbelianGroup& g = L.group;
    std::optional<MinusRing> ring;
    if (L.ambient == IdealLattice::Ambient::Minus) ring.emplace(g, L.rho);
    for (long i = 0; i < g.rank(); ++i) {
        const GroupRingElement gen = GroupRingElement::basis(g, g.generator(i));
        for (long r = 0; r < L.hnf.rows(); ++r) {
            GroupRingElement x =
                lattice_basis_element(L, r, ring ? &*ring : nullptr) * gen;
            if (!L.contains(x))
                throw std::logic_error("IdealLattice: not stable under the group action");
        }
    }
}

}  // namespace

bool IdealLattice::contains(const GroupRingElement& x) const {
    RatVec c;
    if (ambient == Ambient::Minus) {
        MinusRing ring(group, rho);
        c = ring.coords(x);
    } else {
        c = x.coeffs();
    }
    // need denominator * c integral and in the row span of hnf
    IntVec v(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        Rat scaled = c(k) * Rat(denominator);
        if (scaled.get_den() != 1) return false;
        v(k) = scaled.get_num();
    }
    return in_row_span(hnf, std::move(v));
}

nlohmann::json IdealLattice::to_json() const {
    nlohmann::json j;
    j["ambient"] = ambient == Ambient::Minus ? "minus" : "full";
    j["group"] = group.invariant_factors();
    std::vector<std::vector<std::string>> rows;
    for (long i = 0; i < hnf.rows(); ++i) {
        std::vector<std::string> row;
        for (long k = 0; k < hnf.cols(); ++k) row.push_back(hnf(i, k).get_str());
        rows.push_back(std::move(row));
    }
    j["hnf"] = rows;
    const Int d2 = denominator / odd_part(denominator);
    j["denominator_exponent"] = mpz_sizeinbase(d2.get_mpz_t(), 2) - 1;
    j["denominator_odd"] = odd_part(denominator).get_str();
    return j;
}

IdealLattice full_ideal_from_generators(const AbelianGroup& g,
                                        const std::vector<GroupRingElement>& gens) {
    std::vector<RatVec> rows;
    for (const GroupRingElement& x : gens) {
        if (x.group() != g)
            throw std::invalid_argument("full_ideal_from_generators: group mismatch");
        for (long s = 0; s < g.order(); ++s)
            rows.push_back((GroupRingElement::basis(g, s) * x).coeffs());
    }
    IdealLattice L =
        lattice_from_rows(IdealLattice::Ambient::FullGroupRing, g, 0, rows);
    check_group_stability(L);
    return L;
}

IdealLattice ideal_from_generators(const MinusRing& ring,
                                   const std::vector<GroupRingElement>& gens) {
    std::vector<RatVec> rows;
    for (const GroupRingElement& x : gens) {
        std::vector<RatVec> orbit = coordinate_orbit(ring, x);
        rows.insert(rows.end(), orbit.begin(), orbit.end());
    }
    IdealLattice L = lattice_from_rows(IdealLattice::Ambient::Minus, ring.group(),
                                       ring.rho(), rows);
    check_group_stability(L);
    return L;
}

IdealLattice unit_ideal(const MinusRing& ring) {
    return ideal_from_generators(ring, {ring.minus_unit()});
}

IdealLattice minus_part(const IdealLattice& full, const MinusRing& ring) {
    if (full.ambient != IdealLattice::Ambient::FullGroupRing)
        throw std::invalid_argument("minus_part: expected a full-group-ring lattice");
    std::vector<GroupRingElement> gens;
    for (long r = 0; r < full.hnf.rows(); ++r)
        gens.push_back(lattice_basis_element(full, r, nullptr));
    return ideal_from_generators(ring, gens);
}

IdealLattice u_v_lattice(const AbelianField& K, long v) {
    const PlaceData pd = K.place(v);
    if (!pd.ramified)
        throw std::invalid_argument("u_v_lattice: v is unramified (U_v = Z[G])");
    const AbelianGroup& g = K.group();
    RatVec nc = RatVec::Zero(g.order());
    for (long h : pd.inertia) nc(h) = 1;
    const GroupRingElement nI(g, std::move(nc));
    const GroupRingElement second =
        GroupRingElement::one(g) -
        (nI * make_rat(1, static_cast<long>(pd.inertia.size()))) *
            GroupRingElement::basis(g, g.inverse(pd.frobenius));
    return full_ideal_from_generators(g, {nI, second});
}

GroupRingElement nu_J(const AbelianField& K, const std::vector<long>& J,
                      const GroupRingElement& x) {
    const AbelianField KJ = K.fixed_field_unramified_at(J);
    if (x.group() != KJ.group())
        throw std::invalid_argument("nu_J: element not over Gal(K_J/Q)");
    if (J.empty()) return x;
    const AbelianGroup& g = K.group();
    // coefficientwise lift through G ->> Gal(K_J/Q): first-preimage section
    std::vector<long> section(KJ.group().order(), -1);
    for (long s = 0; s < g.order(); ++s) {
        const long t = K.project_element(KJ, s);
        if (section[t] < 0) section[t] = s;
    }
    RatVec lift = RatVec::Zero(g.order());
    for (long t = 0; t < KJ.group().order(); ++t) lift(section[t]) = x.coeff(t);
    GroupRingElement out(g, std::move(lift));
    for (long p : J) {
        std::vector<long> gens(K.place(p).inertia);
        out = out * norm_element(g, gens);
    }
    return out;
}

std::vector<GroupRingElement> theta_ideal_generators(const AbelianField& K,
                                                     const std::vector<long>& T) {
    if (!K.is_T_admissible(T))
        throw std::invalid_argument("theta_ideal_generators: T is not admissible");
    const std::vector<long> Sr = K.ramified_primes();
    const size_t count = size_t{1} << Sr.size();
    std::vector<GroupRingElement> out;
    out.reserve(count);
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<long> J, S;
        for (size_t i = 0; i < Sr.size(); ++i)
            (mask >> i & 1 ? J : S).push_back(Sr[i]);
        const AbelianField KJ = K.fixed_field_unramified_at(J);
        GroupRingElement gen = nu_J(K, J, theta_ST(KJ, S, T));
        if (!gen.is_integral())
            throw std::logic_error("theta_ideal_generators: non-integral generator");
        out.push_back(std::move(gen));
    }
    return out;
}

bool nuJ_identity_holds(const AbelianField& K, const std::vector<long>& T,
                        const std::vector<long>& J) {
    const std::vector<long> Sr = K.ramified_primes();
    for (long p : J)
        if (std::find(Sr.begin(), Sr.end(), p) == Sr.end())
            throw std::invalid_argument("nuJ_identity_holds: J not within ramified primes");
    std::vector<long> S;
    for (long p : Sr)
        if (std::find(J.begin(), J.end(), p) == J.end()) S.push_back(p);

    const AbelianField KJ = K.fixed_field_unramified_at(J);
    const GroupRingElement lhs = nu_J(K, J, theta_ST(KJ, S, T));

    const AbelianGroup& g = K.group();
    GroupRingElement rhs = omega_T(K, T);
    for (long p : J) rhs = rhs * norm_element(g, K.place(p).inertia);
    for (long p : S) {
        const PlaceData pd = K.place(p);
        RatVec nc = RatVec::Zero(g.order());
        for (long h : pd.inertia) nc(h) = 1;
        const GroupRingElement nI(g, std::move(nc));
        rhs = rhs * (GroupRingElement::one(g) -
                     (nI * make_rat(1, static_cast<long>(pd.inertia.size()))) *
                         GroupRingElement::basis(g, g.inverse(pd.frobenius)));
    }
    return lhs == rhs;
}

IdealLattice theta_ideal_minus(const AbelianField& K, const std::vector<long>& T) {
    if (!K.is_cm())
        throw std::invalid_argument("theta_ideal_minus: K must be CM");
    const MinusRing ring(K.group(), K.complex_conjugation());

    const IdealLattice from_generators =
        ideal_from_generators(ring, theta_ideal_generators(K, T));

    // Independent route: (prod_v minus(U_v)) * minus(Z[G] omega^T).
    IdealLattice product = ideal_from_generators(ring, {omega_T(K, T)});
    for (long v : K.ramified_primes())
        product = lattice_product(minus_part(u_v_lattice(K, v), ring), product);

    const LatticeComparison cmp = lattices_equal_away_from_2(from_generators, product);
    if (!cmp.equal_away_from_2)
        throw std::logic_error(
            "theta_ideal_minus: generator and U_v-product constructions disagree "
            "(implementation bug)");
    return from_generators;
}

IdealLattice lattice_product(const IdealLattice& a, const IdealLattice& b) {
    if (a.ambient != IdealLattice::Ambient::Minus ||
        b.ambient != IdealLattice::Ambient::Minus || a.group != b.group ||
        a.rho != b.rho)
        throw std::invalid_argument("lattice_product: ambient mismatch");
    const MinusRing ring(a.group, a.rho);
    std::vector<RatVec> rows;
    for (long i = 0; i < a.hnf.rows(); ++i) {
        const GroupRingElement x = lattice_basis_element(a, i, &ring);
        for (long j = 0; j < b.hnf.rows(); ++j)
            rows.push_back(ring.coords(x * lattice_basis_element(b, j, &ring)));
    }
    IdealLattice L =
        lattice_from_rows(IdealLattice::Ambient::Minus, a.group, a.rho, rows);
    check_group_stability(L);
    return L;
}

IdealLattice lattice_sharp(const IdealLattice& a) {
    if (a.ambient != IdealLattice::Ambient::Minus)
        throw std::invalid_argument("lattice_sharp: minus-ring lattices only");
    const MinusRing ring(a.group, a.rho);
    std::vector<GroupRingElement> gens;
    for (long i = 0; i < a.hnf.rows(); ++i)
        gens.push_back(sharp(lattice_basis_element(a, i, &ring)));
    return ideal_from_generators(ring, gens);
}

LatticeComparison lattices_equal_away_from_2(const IdealLattice& a,
                                             const IdealLattice& b) {
    if (a.ambient != b.ambient || a.group != b.group)
        throw std::invalid_argument("lattices_equal_away_from_2: ambient mismatch");
    const long d = a.dim();
    // Cross-scale to integer lattices: A' = b.den * A, B' = a.den * B.
    IntMat stacked(2 * d, d);
    IntMat A(d, d), B(d, d);
    for (long i = 0; i < d; ++i)
        for (long k = 0; k < d; ++k) {
            A(i, k) = b.denominator * a.hnf(i, k);
            B(i, k) = a.denominator * b.hnf(i, k);
            stacked(i, k) = A(i, k);
            stacked(d + i, k) = B(i, k);
        }
    const Int det_join = hnf_determinant(hermite_normal_form(stacked));
    LatticeComparison out;
    out.index_left = exact_div(abs(hnf_determinant(A)), det_join);
    out.index_right = exact_div(abs(hnf_determinant(B)), det_join);
    out.equal_away_from_2 =
        is_power_of_two(out.index_left) && is_power_of_two(out.index_right);
    out.index_ratio = make_rat(out.index_left, out.index_right);
    return out;
}

}  // namespace stk
