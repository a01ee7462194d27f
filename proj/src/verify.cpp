#include "stk/verify.hpp"

#include "stk/lseries.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stk {

namespace {

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    for (long p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

IdealLattice principal_odd_scaled(const IdealLattice& L, const Int& scale) {
    IdealLattice out = L;
    for (long i = 0; i < out.hnf.rows(); ++i)
        for (long j = 0; j < out.hnf.cols(); ++j) out.hnf(i, j) *= scale;
    const Int red = gcd(Int(out.denominator), scale);
    if (red > 1) {
        out.denominator = exact_div(out.denominator, red);
        for (long i = 0; i < out.hnf.rows(); ++i)
            for (long j = 0; j < out.hnf.cols(); ++j)
                out.hnf(i, j) = exact_div(out.hnf(i, j), red);
    }
    return out;
}

}  // namespace

nlohmann::json VerificationReport::to_json(bool include_timings) const {
    nlohmann::json j;
    j["field"] = field;
    j["T"] = T;
    j["theta_ideal"] = theta_ideal.to_json();
    j["theta_side"] = theta_side.to_json();
    j["fitting_side"] = fitting_side.to_json();
    j["fitting_plain_sharp"] = fitting_plain_sharp.to_json();
    j["equal_away_from_2"] = equal_away_from_2;
    j["index_ratio"] = rat_to_string(index_ratio);
    j["checks"] = {{"integrality", integrality},
                   {"nu_J_identity", nu_J_identity},
                   {"cross_construction", cross_construction},
                   {"dual_convention_consistent", dual_convention_consistent}};
    j["scope"] = scope;
    j["odd_class_multiplier"] = odd_class_multiplier.get_str();
    if (include_timings) j["elapsed_ms"] = elapsed_ms;
    return j;
}

VerificationReport verify_c1(const AbelianField& K, const std::vector<long>& T,
                             const C1Options& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.field = K.to_json();
    rep.T = T;
    std::sort(rep.T.begin(), rep.T.end());
    rep.T.erase(std::unique(rep.T.begin(), rep.T.end()), rep.T.end());

    // Theta side: generators are integrality-checked inside, the two lattice
    // constructions are cross-checked inside theta_ideal_minus.
    rep.integrality = true;
    rep.cross_construction = true;
    rep.theta_ideal = theta_ideal_minus(K, rep.T);
    rep.theta_side = lattice_sharp(rep.theta_ideal);

    // nu_J identity over every subset of the ramified primes.
    rep.nu_J_identity = true;
    {
        const std::vector<long> Sr = K.ramified_primes();
        for (size_t mask = 0; mask < (size_t{1} << Sr.size()); ++mask) {
            std::vector<long> J;
            for (size_t i = 0; i < Sr.size(); ++i)
                if (mask >> i & 1) J.push_back(Sr[i]);
            if (!nuJ_identity_holds(K, rep.T, J)) rep.nu_J_identity = false;
        }
    }

    // Module side.
    const TRayMinusModule tray = t_ray_minus_module(
        K, rep.T, opts.assume_trivial_odd_minus_class_group);
    rep.scope = tray.quadratic_scope ? "quadratic" : "assumed-trivial-class-group";
    rep.odd_class_multiplier = tray.odd_class_multiplier;
    const MinusRing ring(K.group(), K.complex_conjugation());
    const IdealLattice fit_dual =
        fitting_ideal(present_over_minus_ring(dualize(tray.module), ring));
    rep.fitting_side = principal_odd_scaled(fit_dual, tray.odd_class_multiplier);

    // Surfaces a duality-convention error separately from an arithmetic one:
    // the sharp of the undualized Fitting ideal must agree with fit_dual here.
    const IdealLattice fit_plain =
        fitting_ideal(present_over_minus_ring(tray.module, ring));
    rep.fitting_plain_sharp =
        principal_odd_scaled(lattice_sharp(fit_plain), tray.odd_class_multiplier);
    rep.dual_convention_consistent =
        lattices_equal_away_from_2(rep.fitting_side, rep.fitting_plain_sharp)
            .equal_away_from_2;

    const LatticeComparison cmp =
        lattices_equal_away_from_2(rep.fitting_side, rep.theta_side);
    rep.equal_away_from_2 = cmp.equal_away_from_2;
    rep.index_ratio = cmp.index_ratio;

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

BatteryConfig BatteryConfig::from_json(const nlohmann::json& j) {
    BatteryConfig cfg;
    cfg.fields.clear();
    for (const auto& f : j.at("fields")) {
        BatteryEntry e;
        e.conductor = f.at("conductor").get<long>();
        e.subgroup_generators =
            f.value("subgroup_generators", std::vector<long>{});
        e.T = f.at("T").get<std::vector<long>>();
        e.assume_trivial_odd_minus_class_group =
            f.value("assume_trivial_odd_minus_class_group", false);
        cfg.fields.push_back(std::move(e));
    }
    if (j.contains("checks")) cfg.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("conductor_cap")) cfg.conductor_cap = j.at("conductor_cap").get<long>();
    if (j.contains("euler_seed")) cfg.euler_seed = j.at("euler_seed").get<unsigned long>();
    return cfg;
}

BatteryConfig default_battery() {
    BatteryConfig cfg;
    auto quad = [](long D, std::vector<long> T) {
        AbelianField K = quadratic_imaginary_field(D);
        BatteryEntry e;
        e.conductor = K.conductor();
        e.subgroup_generators = K.subgroup();
        e.T = std::move(T);
        return e;
    };
    cfg.fields.push_back(quad(-3, {7}));
    cfg.fields.push_back(quad(-4, {13}));
    cfg.fields.push_back(quad(-7, {3}));
    cfg.fields.push_back(quad(-8, {3}));
    cfg.fields.push_back(quad(-11, {3}));
    cfg.fields.push_back(quad(-23, {3}));
    cfg.fields.push_back(quad(-47, {3}));
    BatteryEntry z5{5, {1}, {11}, true};   // Q(zeta_5), h = 1
    BatteryEntry z12{12, {1}, {13}, true}; // Q(zeta_12), h = 1
    cfg.fields.push_back(std::move(z5));
    cfg.fields.push_back(std::move(z12));
    return cfg;
}

BatteryOutcome run_battery(const BatteryConfig& config) {
    BatteryOutcome out;
    const bool check_c1 =
        std::find(config.checks.begin(), config.checks.end(), "c1") != config.checks.end();
    const bool check_nuJ =
        std::find(config.checks.begin(), config.checks.end(), "nuJ") != config.checks.end();
    const bool check_euler =
        std::find(config.checks.begin(), config.checks.end(), "euler") != config.checks.end();
    const bool check_integrality =
        std::find(config.checks.begin(), config.checks.end(), "integrality") !=
        config.checks.end();

    std::mt19937_64 rng(config.euler_seed);
    const std::vector<long> small_primes = primes_up_to(50);

    for (size_t idx = 0; idx < config.fields.size(); ++idx) {
        const BatteryEntry& e = config.fields[idx];
        const std::string label = "field[" + std::to_string(idx) + "] (conductor " +
                                  std::to_string(e.conductor) + ")";
        try {
            const AbelianField K(e.conductor, e.subgroup_generators, config.conductor_cap);
            if (!K.is_T_admissible(e.T)) {
                out.failures.push_back(label + ": T not admissible");
                continue;
            }
            const std::vector<long> Sr = K.ramified_primes();

            if (check_integrality || check_nuJ || check_euler) {
                const GroupRingElement theta = theta_ST(K, Sr, e.T);
                if (check_integrality && !theta.is_integral())
                    out.failures.push_back(label + ": theta not integral");
                if (K.is_cm()) {
                    // oddness: (1 + rho) theta = 0 when S contains a finite prime
                    const long rho = K.complex_conjugation();
                    if (!Sr.empty()) {
                        const GroupRingElement plus =
                            (GroupRingElement::one(K.group()) +
                             GroupRingElement::basis(K.group(), rho)) *
                            theta;
                        if (!plus.is_zero())
                            out.failures.push_back(label + ": theta not odd");
                    }
                }
            }
            if (check_nuJ) {
                for (size_t mask = 0; mask < (size_t{1} << Sr.size()); ++mask) {
                    std::vector<long> J;
                    for (size_t i = 0; i < Sr.size(); ++i)
                        if (mask >> i & 1) J.push_back(Sr[i]);
                    if (!nuJ_identity_holds(K, e.T, J))
                        out.failures.push_back(label + ": nu_J identity failed");
                }
            }
            if (check_euler) {
                std::vector<long> candidates;
                for (long p : small_primes)
                    if (K.conductor() % p != 0 &&
                        std::find(e.T.begin(), e.T.end(), p) == e.T.end())
                        candidates.push_back(p);
                for (int rep = 0; rep < 3 && !candidates.empty(); ++rep) {
                    const long v = candidates[rng() % candidates.size()];
                    std::vector<long> S = Sr;
                    if (!euler_enlargement_holds(K, S, e.T, v))
                        out.failures.push_back(label + ": Euler enlargement failed at v=" +
                                               std::to_string(v));
                }
            }
            if (check_c1 && K.is_cm()) {
                C1Options opts;
                opts.assume_trivial_odd_minus_class_group =
                    e.assume_trivial_odd_minus_class_group;
                opts.conductor_cap = config.conductor_cap;
                VerificationReport rep = verify_c1(K, e.T, opts);
                if (!rep.passed())
                    out.failures.push_back(label + ": Conjecture C1 check failed");
                out.reports.push_back(std::move(rep));
            }
        } catch (const std::exception& ex) {
            out.failures.push_back(label + ": exception: " + ex.what());
        }
    }
    return out;
}

nlohmann::json BatteryOutcome::to_json(bool include_timings) const {
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const VerificationReport& r : reports)
        j["reports"].push_back(r.to_json(include_timings));
    j["failures"] = failures;
    j["all_passed"] = all_passed();
    return j;
}

AbelianField tower_level_field(const AbelianField& K, long p, int level,
                               long conductor_cap) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("tower_level_field: p must be an odd prime");
    if (level == 0) return K;
    // degree-p^level subfield of Q(zeta_{p^{level+1}}): fixed field of the
    // torsion part of (Z/p^{level+1})^*, which has order p - 1
    long pm = 1;
    for (int i = 0; i <= level; ++i) {
        if (pm > conductor_cap / p)
            throw std::invalid_argument("tower_level_field: conductor cap exceeded");
        pm *= p;
    }
    // compositum inside Q(zeta_N), N = lcm(n_K, p^{level+1}); u fixes the
    // compositum iff it fixes K and lies in the prime-to-p torsion part of
    // (Z/p^{level+1})^* (the subgroup of order p-1 fixing B_level).
    const long nK = K.conductor();
    const long N = std::lcm(nK, pm);
    if (N > conductor_cap)
        throw std::invalid_argument("tower_level_field: conductor cap exceeded");
    std::vector<long> gens;
    for (long u = 1; u < N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        const bool inK =
            nK == 1 || std::binary_search(K.subgroup().begin(), K.subgroup().end(),
                                          u % nK);
        if (!inK) continue;
        if (pow_mod(u % pm, p - 1, pm) != 1) continue;
        gens.push_back(u);
    }
    return AbelianField(N, gens, conductor_cap);
}

GroupRingElement restrict_to_subfield(const AbelianField& L, const AbelianField& F,
                                      const GroupRingElement& x) {
    if (x.group() != L.group())
        throw std::invalid_argument("restrict_to_subfield: element not over Gal(L/Q)");
    if (!L.contains(F))
        throw std::invalid_argument("restrict_to_subfield: F is not a subfield of L");
    RatVec c = RatVec::Zero(F.group().order());
    for (long s = 0; s < L.group().order(); ++s)
        c(L.project_element(F, s)) += x.coeff(s);
    return GroupRingElement(F.group(), std::move(c));
}

TowerReport tower_check(const AbelianField& K, long p, int levels,
                        std::vector<long> T, long conductor_cap) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("tower_check: p must be an odd prime");
    TowerReport rep;
    std::vector<AbelianField> floors;
    for (int m = 0; m <= levels; ++m) {
        floors.push_back(tower_level_field(K, p, m, conductor_cap));
        rep.conductors.push_back(floors.back().conductor());
    }
    const AbelianField& top = floors.back();
    const std::vector<long> S = top.ramified_primes();
    if (T.empty()) {
        for (long q : primes_up_to(50)) {
            if (top.conductor() % q == 0) continue;
            if (top.is_T_admissible({q})) { T = {q}; break; }
        }
        if (T.empty()) throw std::invalid_argument("tower_check: no admissible T found");
    }
    rep.T = T;
    for (int m = 0; m + 1 <= levels; ++m) {
        const GroupRingElement upper = theta_ST(floors[m + 1], S, T);
        const GroupRingElement lower = theta_ST(floors[m], S, T);
        rep.restriction_ok.push_back(
            restrict_to_subfield(floors[m + 1], floors[m], upper) == lower);
    }
    return rep;
}

nlohmann::json TowerReport::to_json() const {
    nlohmann::json j;
    j["conductors"] = conductors;
    j["T"] = T;
    j["restriction_ok"] = std::vector<bool>(restriction_ok.begin(), restriction_ok.end());
    j["passed"] = passed();
    return j;
}

}  // namespace stk
