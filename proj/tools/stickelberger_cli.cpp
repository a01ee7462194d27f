#include "stk/classgroup.hpp"
#include "stk/gmodule.hpp"
#include "stk/ideal_lattice.hpp"
#include "stk/lseries.hpp"
#include "stk/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace stk;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

AbelianField load_field(const std::string& path, long cap) {
    return AbelianField::from_json(load_json(path), cap);
}

std::vector<long> parse_primes(const std::string& csv) {
    std::vector<long> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void print_element(const GroupRingElement& x, bool as_json) {
    if (as_json) {
        std::cout << x.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "group";
    for (long d : x.group().invariant_factors()) std::cout << " " << d;
    std::cout << "\ncoefficients";
    for (long i = 0; i < x.group().order(); ++i)
        std::cout << " " << rat_to_string(x.coeff(i));
    std::cout << "\n";
}

json module_to_json(const GModuleFinite& M) {
    json j;
    std::vector<std::string> inv;
    for (const Int& m : M.invariant_factors) inv.push_back(m.get_str());
    j["invariant_factors"] = inv;
    j["action"] = json::array();
    for (const IntMat& A : M.action) {
        json rows = json::array();
        for (long i = 0; i < A.rows(); ++i) {
            json row = json::array();
            for (long k = 0; k < A.cols(); ++k) row.push_back(A(i, k).get_str());
            rows.push_back(row);
        }
        j["action"].push_back(rows);
    }
    return j;
}

GModuleFinite module_from_json(const AbelianGroup& g, const json& j) {
    GModuleFinite M;
    M.acting_group = g;
    for (const auto& s : j.at("invariant_factors"))
        M.invariant_factors.emplace_back(s.get<std::string>());
    const long k = M.rank();
    for (const auto& rows : j.at("action")) {
        IntMat A(k, k);
        for (long i = 0; i < k; ++i)
            for (long c = 0; c < k; ++c)
                A(i, c) = Int(rows.at(i).at(c).get<std::string>());
        M.action.push_back(std::move(A));
    }
    if (static_cast<long>(M.action.size()) != g.rank())
        throw std::invalid_argument("module json: one action matrix per generator");
    return M;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Stickelberger ideals and Fitting ideals of T-ray class "
                 "groups for abelian CM fields"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    long cap = kDefaultConductorCap;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--conductor-cap", cap, "largest allowed conductor")
        ->capture_default_str();

    std::string field_path, S_csv, T_csv, config_path, module_path;
    long D = 0, p = 0;
    int levels = 0;
    bool want_generators = false, want_hnf = false, dual = false,
         assume_trivial = false, with_timings = false;

    auto* theta = app.add_subcommand("theta", "(S,T)-Stickelberger element");
    theta->add_option("--field", field_path, "field spec json")->required();
    theta->add_option("--S", S_csv, "comma-separated primes (must contain ramified)");
    theta->add_option("--T", T_csv, "comma-separated primes");

    auto* omega = app.add_subcommand("omega", "omega^T (primitive L-values)");
    omega->add_option("--field", field_path)->required();
    omega->add_option("--T", T_csv);

    auto* ideal = app.add_subcommand("ideal", "Stickelberger ideal Theta^T(K)' in the minus ring");
    ideal->add_option("--field", field_path)->required();
    ideal->add_option("--T", T_csv)->required();
    ideal->add_flag("--generators", want_generators, "print the nu_J generators");
    ideal->add_flag("--hnf", want_hnf, "print the HNF lattice (default)");

    auto* classgroup = app.add_subcommand("classgroup", "imaginary quadratic class data");
    classgroup->add_option("--D", D, "negative fundamental discriminant")->required();

    auto* raymodule = app.add_subcommand("raymodule", "minus part of the T-ray class module");
    raymodule->add_option("--field", field_path)->required();
    raymodule->add_option("--T", T_csv)->required();
    raymodule->add_flag("--dual", dual, "Pontryagin dual");
    raymodule->add_flag("--assume-trivial-class-group", assume_trivial,
                        "assert trivial odd minus class group (non-quadratic fields)");

    auto* fitting = app.add_subcommand("fitting", "Fitting ideal of a module over the minus ring");
    fitting->add_option("--field", field_path)->required();
    fitting->add_option("--module", module_path, "module json (raymodule output)")->required();
    fitting->add_flag("--dual", dual, "dualize before presenting");

    auto* verify = app.add_subcommand("verify-c1", "verify the Fitting-ideal conjecture instance");
    verify->add_option("--field", field_path)->required();
    verify->add_option("--T", T_csv)->required();
    verify->add_flag("--assume-trivial-class-group", assume_trivial);
    verify->add_flag("--timings", with_timings, "include timings in output");

    auto* battery = app.add_subcommand("battery", "run the verification battery");
    battery->add_option("--config", config_path, "battery config json (default built-in)");
    battery->add_flag("--timings", with_timings);

    auto* tower = app.add_subcommand("tower", "cyclotomic tower restriction compatibility");
    tower->add_option("--field", field_path)->required();
    tower->add_option("--p", p, "odd prime")->required();
    tower->add_option("--levels", levels, "number of levels above the base")->required();
    tower->add_option("--T", T_csv, "smoothing primes (default: smallest admissible)");

    std::string places_csv;
    bool want_characters = false;
    auto* field = app.add_subcommand("field", "normalized field data, places and characters");
    field->add_option("--field", field_path)->required();
    field->add_option("--places", places_csv, "primes to decompose");
    field->add_flag("--characters", want_characters, "dump the character table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            print_element(theta_ST(K, parse_primes(S_csv), parse_primes(T_csv)), as_json);
        } else if (omega->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            print_element(omega_T(K, parse_primes(T_csv)), as_json);
        } else if (ideal->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            const std::vector<long> T = parse_primes(T_csv);
            if (want_generators) {
                const auto gens = theta_ideal_generators(K, T);
                if (as_json) {
                    json out = json::array();
                    for (const auto& g : gens) out.push_back(g.to_json());
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& g : gens) print_element(g, false);
                }
            } else {
                std::cout << theta_ideal_minus(K, T).to_json().dump(2) << "\n";
            }
        } else if (classgroup->parsed()) {
            const auto forms = reduced_forms(D);
            if (as_json) {
                json out;
                out["discriminant"] = D;
                out["class_number"] = static_cast<long>(forms.size());
                out["reduced_forms"] = json::array();
                for (const auto& f : forms)
                    out["reduced_forms"].push_back({f.a, f.b, f.c});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "h(" << D << ") = " << forms.size() << "\n";
                for (const auto& f : forms)
                    std::cout << "(" << f.a << ", " << f.b << ", " << f.c << ")\n";
            }
        } else if (raymodule->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            TRayMinusModule t =
                t_ray_minus_module(K, parse_primes(T_csv), assume_trivial);
            GModuleFinite M = dual ? dualize(t.module) : t.module;
            const MinusRing ring(K.group(), K.complex_conjugation());
            json out = module_to_json(M);
            out["odd_class_multiplier"] = t.odd_class_multiplier.get_str();
            out["fitting"] = fitting_ideal(present_over_minus_ring(M, ring)).to_json();
            std::cout << out.dump(2) << "\n";
        } else if (fitting->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            GModuleFinite M = module_from_json(K.group(), load_json(module_path));
            if (dual) M = dualize(M);
            const MinusRing ring(K.group(), K.complex_conjugation());
            std::cout << fitting_ideal(present_over_minus_ring(M, ring)).to_json().dump(2)
                      << "\n";
        } else if (verify->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            C1Options opts;
            opts.assume_trivial_odd_minus_class_group = assume_trivial;
            opts.conductor_cap = cap;
            const VerificationReport rep = verify_c1(K, parse_primes(T_csv), opts);
            std::cout << rep.to_json(with_timings).dump(2) << "\n";
            return rep.passed() ? 0 : 1;
        } else if (battery->parsed()) {
            BatteryConfig cfg = config_path.empty()
                                    ? default_battery()
                                    : BatteryConfig::from_json(load_json(config_path));
            cfg.conductor_cap = std::min(cfg.conductor_cap, cap);
            const BatteryOutcome out = run_battery(cfg);
            if (as_json) {
                std::cout << out.to_json(with_timings).dump(2) << "\n";
            } else {
                for (const auto& r : out.reports)
                    std::cout << "conductor " << r.field["conductor"] << ": "
                              << (r.passed() ? "pass" : "FAIL") << "\n";
                for (const auto& f : out.failures) std::cout << "failure: " << f << "\n";
                std::cout << (out.all_passed() ? "all passed" : "FAILURES") << "\n";
            }
            return out.all_passed() ? 0 : 1;
        } else if (tower->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            const TowerReport rep = tower_check(K, p, levels, parse_primes(T_csv), cap);
            std::cout << rep.to_json().dump(2) << "\n";
            return rep.passed() ? 0 : 1;
        } else if (field->parsed()) {
            const AbelianField K = load_field(field_path, cap);
            json out;
            out["conductor"] = K.conductor();
            out["subgroup"] = K.subgroup();
            out["group"] = K.group().invariant_factors();
            out["degree"] = K.degree();
            out["cm"] = K.is_cm();
            if (K.is_cm()) out["complex_conjugation"] = K.complex_conjugation();
            out["ramified_primes"] = K.ramified_primes();
            out["roots_of_unity_order"] = K.roots_of_unity_order();
            if (!places_csv.empty()) {
                out["places"] = json::array();
                for (long q : parse_primes(places_csv))
                    out["places"].push_back(place_to_json(K.place(q)));
            }
            if (want_characters) out["characters"] = characters_to_json(K);
            std::cout << out.dump(2) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // internal consistency violations are check failures
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
