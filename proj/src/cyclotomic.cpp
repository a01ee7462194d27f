#include "stk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace stk {

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r -= r / p;
    return r;
}

namespace {

// Quotient of exact polynomial division a / b (b monic), coefficients low-first.
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const long da = static_cast<long>(a.size()) - 1;
    if (da < db) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<Int> q(da - db + 1, Int(0));
    for (long k = da - db; k >= 0; --k) {
        Int c = a[k + db];
        q[k] = c;
        if (c != 0)
            for (long j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
    for (const Int& c : a)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
    // x^n - 1 divided by the product of Phi_d for proper divisors d.
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

const CyclotomicTable& cyclotomic_table(long order) {
    static std::mutex mtx;
    static std::map<long, CyclotomicTable> tables;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = tables.find(order);
    if (it != tables.end()) return it->second;

    CyclotomicTable t;
    t.order = order;
    t.poly = cyclotomic_polynomial(order);
    t.degree = static_cast<long>(t.poly.size()) - 1;
    const long deg = t.degree;
    const long rows = std::max(order, 2 * deg);
    t.power_rows.reserve(rows);
    IntVec cur = IntVec::Zero(deg);
    cur(0) = 1;
    for (long k = 0; k < rows; ++k) {
        t.power_rows.push_back(cur);
        // multiply by z: shift, then reduce the overflow with z^deg = -lower(Phi)
        IntVec next = IntVec::Zero(deg);
        for (long i = 0; i + 1 < deg; ++i) next(i + 1) = cur(i);
        const Int& top = cur(deg - 1);
        if (top != 0)
            for (long i = 0; i < deg; ++i) next(i) -= top * t.poly[i];
        cur = std::move(next);
    }
    return tables.emplace(order, std::move(t)).first->second;
}

Cyclotomic::Cyclotomic(long order, RatVec coords)
    : order_(order), coords_(std::move(coords)) {
    if (order_ < 1) throw std::invalid_argument("Cyclotomic: order < 1");
    if (coords_.size() != cyclotomic_table(order_).degree)
        throw std::invalid_argument("Cyclotomic: coordinate length mismatch");
}

Cyclotomic Cyclotomic::zero(long order) {
    return Cyclotomic(order, RatVec::Zero(cyclotomic_table(order).degree));
}

Cyclotomic Cyclotomic::from_rat(long order, const Rat& r) {
    RatVec c = RatVec::Zero(cyclotomic_table(order).degree);
    c(0) = r;
    return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::root_power(long order, long k) {
    const CyclotomicTable& t = cyclotomic_table(order);
    k %= order;
    if (k < 0) k += order;
    RatVec c(t.degree);
    for (long i = 0; i < t.degree; ++i) c(i) = Rat(t.power_rows[k](i));
    return Cyclotomic(order, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (Eigen::Index i = 1; i < coords_.size(); ++i)
        if (coords_(i) != 0) return false;
    return true;
}

Rat Cyclotomic::rational_part() const {
    if (!is_rational())
        throw std::domain_error("Cyclotomic: value is not rational");
    return coords_(0);
}

Cyclotomic Cyclotomic::operator-() const {
    RatVec c(coords_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = -coords_(i);
    return Cyclotomic(order_, std::move(c));
}

static void check_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("Cyclotomic: mixed orders");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_order(a, b);
    RatVec c(a.coords_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = a.coords_(i) + b.coords_(i);
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_order(a, b);
    RatVec c(a.coords_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = a.coords_(i) - b.coords_(i);
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same_order(a, b);
    const CyclotomicTable& t = cyclotomic_table(a.order_);
    const long deg = t.degree;
    // convolution, then reduce monomials z^k (k >= deg) via power_rows
    std::vector<Rat> conv(2 * deg - 1, Rat(0));
    for (long i = 0; i < deg; ++i) {
        if (a.coords_(i) == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (b.coords_(j) == 0) continue;
            conv[i + j] += a.coords_(i) * b.coords_(j);
        }
    }
    RatVec c(deg);
    for (long i = 0; i < deg; ++i) c(i) = conv[i];
    for (long k = deg; k < 2 * deg - 1; ++k) {
        if (conv[k] == 0) continue;
        const IntVec& row = t.power_rows[k];
        for (long i = 0; i < deg; ++i)
            if (row(i) != 0) c(i) += conv[k] * Rat(row(i));
    }
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Rat& r) const {
    RatVec c(coords_.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coords_(i) * r;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    if (is_rational())
        return from_rat(order_, Rat(1) / coords_(0));

    // Extended Euclid in Q[x] against Phi_e (irreducible): maintain
    // r_i = t_i * Phi + s_i * f, stop at a constant remainder.
    const CyclotomicTable& t = cyclotomic_table(order_);
    using Poly = std::vector<Rat>;
    auto deg_of = [](const Poly& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    Poly r0(t.poly.size());
    for (size_t i = 0; i < t.poly.size(); ++i) r0[i] = Rat(t.poly[i]);
    Poly r1(coords_.size());
    for (Eigen::Index i = 0; i < coords_.size(); ++i) r1[i] = coords_(i);
    Poly s0{Rat(0)}, s1{Rat(1)};

    while (deg_of(r1) > 0) {
        const long d1 = deg_of(r1);
        const Rat lead = r1[d1];
        Poly rem = r0;
        Poly q(deg_of(r0) - d1 + 1, Rat(0));
        for (long k = deg_of(rem); k >= d1; --k) {
            if (rem[k] == 0) continue;
            Rat c = rem[k] / lead;
            q[k - d1] = c;
            for (long j = 0; j <= d1; ++j) rem[k - d1 + j] -= c * r1[j];
        }
        if (deg_of(rem) < 0)
            throw std::logic_error("Cyclotomic: Phi_e not coprime to element");
        Poly snew(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }

    // r1 is a nonzero constant with s1 * f = r1 mod Phi.
    const Rat c = r1[0];
    const long deg = t.degree;
    RatVec out = RatVec::Zero(deg);
    for (long k = static_cast<long>(s1.size()) - 1; k >= 0; --k) {
        if (s1[k] == 0) continue;
        if (k < deg) {
            out(k) += s1[k];
        } else {
            const IntVec& row = t.power_rows[k];
            for (long i = 0; i < deg; ++i)
                if (row(i) != 0) out(i) += s1[k] * Rat(row(i));
        }
    }
    for (long i = 0; i < deg; ++i) out(i) /= c;
    return Cyclotomic(order_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ != o.order_) return false;
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
        if (coords_(i) != o.coords_(i)) return false;
    return true;
}

}  // namespace stk
