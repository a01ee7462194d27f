#include "stk/abelian_field.hpp"

#include "stk/normal_form.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stk {

struct AbelianField::CharCache {
    std::once_flag once;
    std::vector<DirichletCharacter> chars;
};

DirichletCharacter::DirichletCharacter(Character chi, long conductor,
                                       std::vector<long> value_exps, bool odd)
    : chi_(std::move(chi)),
      conductor_(conductor),
      value_exps_(std::move(value_exps)),
      odd_(odd) {}

long DirichletCharacter::value_exponent(long a) const {
    a %= conductor_;
    if (a < 0) a += conductor_;
    return value_exps_[a];
}

Cyclotomic DirichletCharacter::value(long a) const {
    const long k = value_exponent(a);
    if (k < 0) return Cyclotomic::zero(zeta_order());
    return Cyclotomic::root_power(zeta_order(), k);
}

namespace {

long smallest_primitive_root(long pa, long p) {
    const long phi = pa / p * (p - 1);
    std::vector<long> qs = prime_factors(phi);
    for (long g = 2; g < pa; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long q : qs)
            if (pow_mod(g, phi / q, pa) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

// x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1
long crt_pair(long r1, long m1, long r2, long m2) {
    long x = ((r1 % m1) + m1) % m1;
    while (x % m2 != ((r2 % m2) + m2) % m2) x += m1;
    return x % (m1 * m2);
}

}  // namespace

AbelianField::AbelianField(long n, const std::vector<long>& subgroup_gens, long cap)
    : cap_(cap), char_cache_(std::make_shared<CharCache>()) {
    if (n < 1) throw std::invalid_argument("AbelianField: conductor must be positive");
    if (n > cap) throw std::invalid_argument("AbelianField: conductor cap exceeded");
    for (long h : subgroup_gens)
        if (n > 1 && std::gcd(((h % n) + n) % n, n) != 1)
            throw std::invalid_argument("AbelianField: subgroup generator not coprime");

    // n = 2 mod 4 carries no information: (Z/n)^* = (Z/(n/2))^*.
    std::vector<long> gens = subgroup_gens;
    if (n % 4 == 2) n /= 2;

    if (n == 1 || n == 2) {
        n_ = 1;
        subgroup_ = {};
        group_ = AbelianGroup();
        to_group_ = {0};
        representative_ = {1};
        cm_ = false;
        return;
    }
    n_ = n;

    // Close H under multiplication mod n.
    std::set<long> H{1};
    {
        std::vector<long> frontier{1};
        while (!frontier.empty()) {
            std::vector<long> next;
            for (long x : frontier)
                for (long h : gens) {
                    long y = mul_mod(x, ((h % n) + n) % n, n);
                    if (H.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
    }

    // Conductor minimization: smallest proper divisor f (f != 2 mod 4) with
    // U_f = { u coprime to n : u = 1 mod f } contained in H.
    for (long f : divisors(n)) {
        if (f == n || f % 4 == 2) continue;
        bool contained = true;
        for (long u = 1; u < n && contained; u += f) {
            if (std::gcd(u, n) != 1) continue;
            if (!H.count(u)) contained = false;
        }
        if (contained) {
            std::set<long> image;
            for (long h : H) image.insert(f <= 1 ? 1 : (h % f == 0 ? f : h % f));
            *this = AbelianField(f, std::vector<long>(image.begin(), image.end()), cap);
            return;
        }
    }

    subgroup_.assign(H.begin(), H.end());
    build_unit_group();
    build_quotient();

    cm_ = !H.count(n_ - 1);
    if (cm_) rho_ = to_group(n_ - 1);
}

void AbelianField::build_unit_group() {
    units_.clear();
    long m = n_;
    for (long p : prime_factors(n_)) {
        long pa = 1;
        while (m % p == 0) { m /= p; pa *= p; }
        const long cof = n_ / pa;
        auto lift = [&](long r) {
            return cof == 1 ? r % n_ : crt_pair(r, pa, 1, cof);
        };
        if (p == 2) {
            if (pa == 2) continue;  // trivial unit group mod 2
            if (pa == 4) {
                UnitFactor f{pa, lift(3), 2, std::vector<long>(pa, -1)};
                f.dlog[1] = 0;
                f.dlog[3] = 1;
                units_.push_back(std::move(f));
            } else {
                // (Z/2^a)^* = <-1> x <5> for a >= 3
                UnitFactor fm{pa, lift(pa - 1), 2, std::vector<long>(pa, -1)};
                UnitFactor f5{pa, lift(5), pa / 4, std::vector<long>(pa, -1)};
                long x = 1;
                for (long j = 0; j < pa / 4; ++j) {
                    f5.dlog[x] = j;
                    fm.dlog[x] = 0;
                    fm.dlog[pa - x] = 1;
                    x = mul_mod(x, 5, pa);
                }
                for (long u = 1; u < pa; u += 2)
                    if (f5.dlog[u] < 0) f5.dlog[u] = f5.dlog[pa - u];
                units_.push_back(std::move(fm));
                units_.push_back(std::move(f5));
            }
        } else {
            const long g = smallest_primitive_root(pa, p);
            UnitFactor f{pa, lift(g), pa / p * (p - 1), std::vector<long>(pa, -1)};
            long x = 1;
            for (long j = 0; j < f.order; ++j) {
                f.dlog[x] = j;
                x = mul_mod(x, g, pa);
            }
            units_.push_back(std::move(f));
        }
    }
}

std::vector<long> AbelianField::unit_dlog(long u) const {
    u = ((u % n_) + n_) % n_;
    std::vector<long> e;
    e.reserve(units_.size());
    for (const UnitFactor& f : units_) {
        long d = f.dlog[u % f.modulus];
        if (d < 0) throw std::invalid_argument("unit_dlog: residue not a unit");
        e.push_back(d);
    }
    return e;
}

void AbelianField::build_quotient() {
    const long k = static_cast<long>(units_.size());
    IntMat rel(k, k + static_cast<long>(subgroup_.size()));
    rel.setZero();
    for (long i = 0; i < k; ++i) rel(i, i) = units_[i].order;
    for (size_t j = 0; j < subgroup_.size(); ++j) {
        std::vector<long> d = unit_dlog(subgroup_[j]);
        for (long i = 0; i < k; ++i) rel(i, k + static_cast<long>(j)) = d[i];
    }
    SnfResult snf = smith_normal_form(rel);

    std::vector<long> factors;
    std::vector<long> keep;
    for (long i = 0; i < k; ++i) {
        const Int& d = snf.D(i, i);
        if (d == 0) throw std::logic_error("AbelianField: quotient not finite");
        if (d > 1) {
            factors.push_back(static_cast<long>(d.get_si()));
            keep.push_back(i);
        }
    }
    group_ = AbelianGroup(factors);

    to_group_.assign(n_, -1);
    representative_.assign(group_.order(), -1);
    for (long u = 1; u < n_; ++u) {
        if (std::gcd(u, n_) != 1) continue;
        std::vector<long> x = unit_dlog(u);
        std::vector<long> exps(factors.size());
        for (size_t r = 0; r < keep.size(); ++r) {
            Int y = 0;
            for (long c = 0; c < k; ++c) y += snf.U(keep[r], c) * Int(x[c]);
            Int v = y % Int(factors[r]);
            if (v < 0) v += factors[r];
            exps[r] = static_cast<long>(v.get_si());
        }
        const long idx = group_.index_of(exps);
        to_group_[u] = idx;
        if (representative_[idx] < 0) representative_[idx] = u;
    }
}

long AbelianField::complex_conjugation() const {
    if (!cm_) throw std::domain_error("AbelianField: field is not CM");
    return rho_;
}

long AbelianField::to_group(long residue) const {
    if (n_ == 1) return 0;
    residue = ((residue % n_) + n_) % n_;
    if (residue == 0 || std::gcd(residue, n_) != 1)
        throw std::invalid_argument("AbelianField: residue not coprime to conductor");
    return to_group_[residue];
}

long AbelianField::representative(long elem) const {
    return representative_.at(elem);
}

std::vector<long> AbelianField::ramified_primes() const {
    return prime_factors(n_);
}

PlaceData AbelianField::place(long p) const {
    if (!is_prime(p)) throw std::invalid_argument("place: p must be prime");
    PlaceData out;
    out.p = p;
    if (n_ % p != 0) {
        out.inertia = {group_.identity()};
        out.frobenius = to_group(p);
    } else {
        long pa = 1, m = n_;
        while (m % p == 0) { m /= p; pa *= p; }
        std::set<long> I;
        for (long u = 1; u < n_; u += m) {
            if (std::gcd(u, n_) != 1) continue;
            I.insert(to_group(u));
        }
        I.insert(group_.identity());
        out.inertia.assign(I.begin(), I.end());
        out.frobenius = m == 1 ? group_.identity() : to_group(crt_pair(p, m, 1, pa));
    }
    out.ramified = out.inertia.size() > 1;
    std::set<long> Iset(out.inertia.begin(), out.inertia.end());
    long f = 1;
    long x = out.frobenius;
    while (!Iset.count(x)) {
        x = group_.mul(x, out.frobenius);
        ++f;
    }
    out.residue_degree = f;
    out.num_primes_above =
        group_.order() / (f * static_cast<long>(out.inertia.size()));
    return out;
}

AbelianField AbelianField::fixed_field_unramified_at(const std::vector<long>& J) const {
    if (J.empty()) return *this;
    std::vector<long> gens(subgroup_.begin(), subgroup_.end());
    for (long p : J) {
        if (n_ % p != 0)
            throw std::invalid_argument("fixed_field_unramified_at: prime not ramified");
        long m = n_;
        while (m % p == 0) m /= p;
        for (long u = 1; u < n_; u += m) {
            if (std::gcd(u, n_) != 1) continue;
            gens.push_back(u);
        }
    }
    return AbelianField(n_, gens, cap_);
}

const std::vector<DirichletCharacter>& AbelianField::characters() const {
    std::call_once(char_cache_->once, [this] {
        std::vector<DirichletCharacter>& out = char_cache_->chars;
        const long e = group_.exponent();
        for (long t = 0; t < group_.order(); ++t) {
            Character chi = Character::at_index(group_, t);
            long cond = n_;
            for (long f : divisors(n_)) {
                if (f % 4 == 2) continue;
                bool trivial_on_Uf = true;
                if (n_ > 1) {
                    for (long u = 1; u < n_ && trivial_on_Uf; u += f) {
                        if (std::gcd(u, n_) != 1) continue;
                        if (chi.value_exponent(to_group(u)) != 0) trivial_on_Uf = false;
                    }
                }
                if (trivial_on_Uf) { cond = f; break; }
            }
            std::vector<long> vals(cond, -1);
            if (cond == 1) {
                vals[0] = 0;
            } else {
                for (long a = 1; a < cond; ++a) {
                    if (std::gcd(a, cond) != 1) continue;
                    long u = a;
                    while (std::gcd(u % n_ == 0 ? n_ : u % n_, n_) != 1) u += cond;
                    vals[a] = chi.value_exponent(to_group(u % n_));
                }
            }
            const bool odd = cm_ && chi.value_exponent(rho_) == e / 2;
            out.emplace_back(std::move(chi), cond, std::move(vals), odd);
        }
    });
    return char_cache_->chars;
}

long AbelianField::roots_of_unity_order() const {
    long best = 1;
    for (long d : divisors(n_)) {
        if (d % 4 == 2) continue;
        bool fixed = true;
        for (long h : subgroup_)
            if (h % d != 1 % d) { fixed = false; break; }
        if (fixed) best = std::max(best, d);
    }
    return best % 2 == 0 ? best : 2 * best;
}

bool AbelianField::is_T_admissible(const std::vector<long>& T) const {
    for (long p : T) {
        if (!is_prime(p)) return false;
        if (n_ % p == 0) return false;
    }
    for (long l : prime_factors(roots_of_unity_order())) {
        bool ok = false;
        for (long p : T)
            if (p != l) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

std::pair<GroupRingElement, GroupRingElement> AbelianField::gv_hv(long v) const {
    const PlaceData pd = place(v);
    const AbelianGroup& g = group_;
    const long ni = static_cast<long>(pd.inertia.size());
    const GroupRingElement gv = GroupRingElement::one(g) -
                                GroupRingElement::basis(g, pd.frobenius) +
                                GroupRingElement::constant(g, Rat(ni));
    RatVec c = RatVec::Zero(g.order());
    for (long h : pd.inertia) c(h) = 1;
    const GroupRingElement nI(g, std::move(c));
    const Rat inv_ni = make_rat(1, ni);
    const GroupRingElement hv =
        (GroupRingElement::one(g) - nI * inv_ni) + (nI * inv_ni) * gv;
    return {gv, hv};
}

bool AbelianField::contains(const AbelianField& subfield) const {
    const long sc = subfield.conductor();
    if (sc == 1) return true;
    if (n_ % sc != 0) return false;
    for (long h : subgroup_) {
        const long r = h % sc == 0 ? sc : h % sc;  // r = sc only if sc | h, impossible for units
        if (!std::binary_search(subfield.subgroup().begin(),
                                subfield.subgroup().end(), r))
            return false;
    }
    return true;
}

long AbelianField::project_element(const AbelianField& subfield, long elem) const {
    if (subfield.conductor() == 1) return 0;
    return subfield.to_group(representative(elem) % subfield.conductor());
}

nlohmann::json AbelianField::to_json() const {
    nlohmann::json j;
    j["conductor"] = n_;
    j["subgroup_generators"] = subgroup_;
    return j;
}

AbelianField AbelianField::from_json(const nlohmann::json& j, long cap) {
    return AbelianField(j.at("conductor").get<long>(),
                        j.value("subgroup_generators", std::vector<long>{}), cap);
}

nlohmann::json place_to_json(const PlaceData& pd) {
    nlohmann::json j;
    j["p"] = pd.p;
    j["ramified"] = pd.ramified;
    j["inertia"] = pd.inertia;
    j["frobenius"] = pd.frobenius;
    j["residue_degree"] = pd.residue_degree;
    j["num_primes_above"] = pd.num_primes_above;
    return j;
}

nlohmann::json characters_to_json(const AbelianField& K) {
    nlohmann::json out = nlohmann::json::array();
    for (const DirichletCharacter& c : K.characters()) {
        nlohmann::json j;
        j["zeta_exponents"] = c.character().zeta_exponents();
        j["conductor"] = c.conductor();
        j["zeta_order"] = c.zeta_order();
        j["odd"] = c.is_odd();
        std::vector<long> vals;
        for (long a = 0; a < c.conductor(); ++a) vals.push_back(c.value_exponent(a));
        if (c.conductor() == 1) vals = {0};
        j["value_exponents"] = vals;
        out.push_back(std::move(j));
    }
    return out;
}

AbelianField quadratic_imaginary_field(long D) {
    if (D >= 0)
        throw std::invalid_argument("quadratic_imaginary_field: D must be negative");
    const long n = -D;
    Int Dz(D);
    std::vector<long> kernel;
    for (long a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (mpz_kronecker_si(Dz.get_mpz_t(), a) == 1) kernel.push_back(a);
    }
    AbelianField K(n, kernel);
    if (!K.is_cm() || K.degree() != 2 || K.conductor() != n)
        throw std::invalid_argument(
            "quadratic_imaginary_field: D is not a fundamental discriminant");
    return K;
}

}  // namespace stk
