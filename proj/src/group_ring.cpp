#include "stk/group_ring.hpp"

#include <stdexcept>

namespace stk {

GroupRingElement::GroupRingElement(AbelianGroup group, RatVec coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.order())
        throw std::invalid_argument("GroupRingElement: coefficient length mismatch");
}

GroupRingElement GroupRingElement::zero(const AbelianGroup& g) {
    return GroupRingElement(g, RatVec::Zero(g.order()));
}

GroupRingElement GroupRingElement::one(const AbelianGroup& g) {
    RatVec c = RatVec::Zero(g.order());
    c(g.identity()) = 1;
    return GroupRingElement(g, std::move(c));
}

GroupRingElement GroupRingElement::basis(const AbelianGroup& g, long elem) {
    RatVec c = RatVec::Zero(g.order());
    c(elem) = 1;
    return GroupRingElement(g, std::move(c));
}

GroupRingElement GroupRingElement::constant(const AbelianGroup& g, const Rat& r) {
    RatVec c = RatVec::Zero(g.order());
    c(g.identity()) = r;
    return GroupRingElement(g, std::move(c));
}

bool GroupRingElement::is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
        if (coeffs_(i) != 0) return false;
    return true;
}

bool GroupRingElement::is_integral() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
        if (coeffs_(i).get_den() != 1) return false;
    return true;
}

GroupRingElement GroupRingElement::operator-() const {
    RatVec c(coeffs_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = -coeffs_(i);
    return GroupRingElement(group_, std::move(c));
}

static void check_same_group(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("GroupRingElement: group mismatch");
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    RatVec c(a.coeffs_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = a.coeffs_(i) + b.coeffs_(i);
    return GroupRingElement(a.group_, std::move(c));
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    RatVec c(a.coeffs_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = a.coeffs_(i) - b.coeffs_(i);
    return GroupRingElement(a.group_, std::move(c));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    const AbelianGroup& g = a.group_;
    RatVec c = RatVec::Zero(g.order());
    for (long i = 0; i < g.order(); ++i) {
        if (a.coeffs_(i) == 0) continue;
        for (long j = 0; j < g.order(); ++j) {
            if (b.coeffs_(j) == 0) continue;
            c(g.mul(i, j)) += a.coeffs_(i) * b.coeffs_(j);
        }
    }
    return GroupRingElement(g, std::move(c));
}

GroupRingElement GroupRingElement::operator*(const Rat& r) const {
    RatVec c(coeffs_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coeffs_(i) * r;
    return GroupRingElement(group_, std::move(c));
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    if (group_ != o.group_) return false;
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
        if (coeffs_(i) != o.coeffs_(i)) return false;
    return true;
}

nlohmann::json GroupRingElement::to_json() const {
    nlohmann::json j;
    j["group"] = group_.invariant_factors();
    std::vector<std::string> cs;
    cs.reserve(coeffs_.size());
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
        cs.push_back(rat_to_string(coeffs_(i)));
    j["coefficients"] = cs;
    return j;
}

GroupRingElement GroupRingElement::from_json(const nlohmann::json& j) {
    AbelianGroup g(j.at("group").get<std::vector<long>>());
    const auto cs = j.at("coefficients").get<std::vector<std::string>>();
    if (static_cast<long>(cs.size()) != g.order())
        throw std::invalid_argument("GroupRingElement: wrong coefficient count");
    RatVec c(g.order());
    for (long i = 0; i < g.order(); ++i) c(i) = rat_from_string(cs[i]);
    return GroupRingElement(std::move(g), std::move(c));
}

GroupRingElement sharp(const GroupRingElement& a) {
    const AbelianGroup& g = a.group();
    RatVec c(g.order());
    for (long i = 0; i < g.order(); ++i) c(g.inverse(i)) = a.coeff(i);
    return GroupRingElement(g, std::move(c));
}

Cyclotomic character_value(const GroupRingElement& a, const Character& chi) {
    if (a.group() != chi.group())
        throw std::invalid_argument("character_value: group mismatch");
    const long e = a.group().exponent();
    const CyclotomicTable& t = cyclotomic_table(e);
    RatVec acc = RatVec::Zero(t.degree);
    for (long i = 0; i < a.group().order(); ++i) {
        const Rat& c = a.coeff(i);
        if (c == 0) continue;
        const IntVec& row = t.power_rows[chi.value_exponent(i)];
        for (long k = 0; k < t.degree; ++k)
            if (row(k) != 0) acc(k) += c * Rat(row(k));
    }
    return Cyclotomic(e, std::move(acc));
}

GroupRingElement from_character_values(const AbelianGroup& g,
                                       const std::vector<Cyclotomic>& values) {
    if (static_cast<long>(values.size()) != g.order())
        throw std::invalid_argument("from_character_values: need one value per character");
    const long e = g.exponent();
    const CyclotomicTable& t = cyclotomic_table(e);
    const long deg = t.degree;
    for (const Cyclotomic& v : values)
        if (v.order() != e)
            throw std::invalid_argument("from_character_values: value in wrong field");

    // Scaled-integer accumulation: D * a_tau-coordinates as mpz, checked for
    // rationality exactly, then divided by D * #G.
    Int den = 1;
    for (const Cyclotomic& v : values)
        for (Eigen::Index k = 0; k < deg; ++k)
            den = lcm(den, v.coords()(k).get_den());
    std::vector<IntVec> scaled;
    scaled.reserve(values.size());
    for (const Cyclotomic& v : values) {
        IntVec w(deg);
        for (long k = 0; k < deg; ++k) {
            const Rat& c = v.coords()(k);
            w(k) = c.get_num() * exact_div(den, c.get_den());
        }
        scaled.push_back(std::move(w));
    }
    // rotations[x][k] = coords of zeta^k * scaled[x], built incrementally
    std::vector<std::vector<IntVec>> rotations(values.size());
    for (size_t x = 0; x < values.size(); ++x) {
        rotations[x].reserve(e);
        IntVec cur = scaled[x];
        for (long k = 0; k < e; ++k) {
            rotations[x].push_back(cur);
            IntVec next = IntVec::Zero(deg);
            for (long i = 0; i + 1 < deg; ++i) next(i + 1) = cur(i);
            const Int& top = cur(deg - 1);
            if (top != 0)
                for (long i = 0; i < deg; ++i) next(i) -= top * t.poly[i];
            cur = std::move(next);
        }
    }

    const Int total = den * g.order();
    RatVec out(g.order());
    std::vector<Character> chars = all_characters(g);
    for (long tau = 0; tau < g.order(); ++tau) {
        const long tau_inv = g.inverse(tau);
        IntVec acc = IntVec::Zero(deg);
        for (long x = 0; x < g.order(); ++x) {
            const IntVec& rot = rotations[x][chars[x].value_exponent(tau_inv)];
            for (long k = 0; k < deg; ++k) acc(k) += rot(k);
        }
        for (long k = 1; k < deg; ++k)
            if (acc(k) != 0)
                throw std::domain_error(
                    "from_character_values: inconsistent conjugate values "
                    "(coefficient not rational)");
        out(tau) = make_rat(acc(0), total);
    }
    return GroupRingElement(g, std::move(out));
}

GroupRingElement norm_element(const AbelianGroup& g, const std::vector<long>& gens) {
    RatVec c = RatVec::Zero(g.order());
    for (long h : g.subgroup_closure(gens)) c(h) = 1;
    return GroupRingElement(g, std::move(c));
}

GroupRingElement minus_project(const GroupRingElement& a, long rho) {
    const AbelianGroup& g = a.group();
    if (rho == g.identity() || g.mul(rho, rho) != g.identity())
        throw std::invalid_argument("minus_project: rho must have order 2");
    RatVec c(g.order());
    const Rat half = make_rat(1, 2);
    for (long i = 0; i < g.order(); ++i)
        c(i) = (a.coeff(i) - a.coeff(g.mul(rho, i))) * half;
    return GroupRingElement(g, std::move(c));
}

bool is_nonzerodivisor(const GroupRingElement& a) {
    for (const Character& chi : all_characters(a.group()))
        if (character_value(a, chi).is_zero()) return false;
    return true;
}

}  // namespace stk
