#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "margulis/bounds.hpp"
#include "margulis/cases.hpp"
#include "margulis/constants.hpp"
#include "margulis/extremal.hpp"
#include "margulis/halfspace.hpp"
#include "margulis/mobius.hpp"
#include "margulis/report.hpp"
#include "margulis/verify.hpp"

using namespace margulis;

namespace {

int emit(const Report& r, bool json) {
    if (json) {
        std::cout << to_json(r);
    } else {
        print_human(r, std::cout);
    }
    return r.pass() ? 0 : 1;
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

// Order argument: a decimal integer >= 3 or "inf".
int parse_order(const std::string& s) {
    if (s == "inf") return kInf;
    std::size_t pos = 0;
    int n = 0;
    try {
        n = std::stoi(s, &pos);
    } catch (const std::exception&) {
        usage_error("bad order '" + s + "' (want an integer >= 3 or 'inf')");
    }
    if (pos != s.size() || n < 3) {
        usage_error("bad order '" + s + "' (want an integer >= 3 or 'inf')");
    }
    return n;
}

cplx parse_cplx(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) usage_error("bad complex '" + s + "' (want 're,im')");
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string re = s.substr(0, comma), im = s.substr(comma + 1);
        const double x = std::stod(re, &p1);
        const double y = std::stod(im, &p2);
        if (p1 != re.size() || p2 != im.size()) throw std::invalid_argument(s);
        return {x, y};
    } catch (const std::exception&) {
        usage_error("bad complex '" + s + "' (want 're,im')");
    }
}

MoebiusMap map_from_entries(const std::vector<double>& v, const std::string& flag) {
    const Matrix2 m{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
    if (std::abs(m.det()) < 1e-12) usage_error(flag + ": singular matrix");
    return normalize(m);
}

const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::identity: return "identity";
        case ElementKind::parabolic: return "parabolic";
        case ElementKind::elliptic: return "elliptic";
        case ElementKind::loxodromic: return "loxodromic";
    }
    return "?";
}

void add_classification(Report& r, const std::string& tag, const MoebiusMap& f) {
    const ElementClass c = classify(f);
    r.add_result(tag + ".kind", kind_name(c.kind));
    r.add_result(tag + ".tau", c.tau);
    r.add_result(tag + ".theta", c.theta);
    if (c.order) r.add_result(tag + ".order", static_cast<double>(*c.order));
}

int cmd_constants(const std::vector<std::string>& orders, bool json, bool precise) {
    std::vector<int> ns;
    if (orders.empty()) {
        for (int n = 3; n <= 12; ++n) ns.push_back(n);
        ns.push_back(kInf);
    } else {
        for (const std::string& s : orders) ns.push_back(parse_order(s));
    }
    Report r;
    r.command = "constants";
    for (const int n : ns) {
        const ConstantTable t = constant_table(n);
        const std::string tag = n == kInf ? "inf" : std::to_string(n);
        r.add_input("n", tag);
        r.add_result("c(" + tag + ")", t.c_n);
        r.add_result("d(" + tag + ")", t.d_n);
        r.add_result("t(" + tag + ")", t.t_n);
        if (n != kInf) {
            r.add_result("psi(" + tag + ")", t.psi_n);
            r.add_result("b(" + tag + ")", t.b_n);
        }
    }
    if (precise) {
        for (const auto& [name, digits] : high_precision_table()) {
            r.add_result("precise." + name, digits);
        }
    }
    return emit(r, json);
}

int cmd_pair(const std::vector<double>& fe, const std::vector<double>& ge,
             const std::string& witness, double height, double tol, bool json) {
    const MoebiusMap f = map_from_entries(fe, "--f");
    const MoebiusMap g = map_from_entries(ge, "--g");
    if (height <= 0.0) usage_error("--height must be positive");
    const HPoint x{parse_cplx(witness), height};

    Report r;
    r.command = "pair";
    r.add_input("witness", witness + " t=" + decimal12(height));
    add_classification(r, "f", f);
    add_classification(r, "g", g);
    const GroupParams p = params(f, g);
    r.add_result("gamma", p.gamma);
    r.add_result("beta_f", p.beta_f);
    r.add_result("beta_g", p.beta_g);
    const double rho_f = hyp_distance(apply(f, x), x);
    const double rho_g = hyp_distance(apply(g, x), x);
    r.add_result("rho_f", rho_f);
    r.add_result("rho_g", rho_g);

    if (f.is_identity() || g.is_identity()) {
        r.add_result("bound", "elementary/degenerate, no bound applies");
        return emit(r, json);
    }
    const DisplacementBound bound = joint_rho_lower(p);
    r.add_result("bound", bound.rho_lower);
    if (!bound.attained_hint.empty()) r.add_result("bound.hint", bound.attained_hint);
    const double max_rho = std::max(rho_f, rho_g);
    r.add_check("respects-bound", bound.rho_lower, max_rho, tol,
                max_rho >= bound.rho_lower - tol);
    return emit(r, json);
}

int cmd_case(const std::string& file, const std::string& name, bool json) {
    std::vector<CaseRecord> records;
    try {
        records = file.empty() ? builtin_case_records() : load_case_file(file);
    } catch (const std::exception& e) {
        usage_error(e.what());
    }
    Report r;
    r.command = "case";
    if (!file.empty()) r.add_input("case-file", file);
    bool matched = false;
    for (const CaseRecord& rec : records) {
        const auto run = [&](const std::string& rec_name, double expected, double tol,
                             auto&& solve) {
            if (!name.empty() && rec_name != name) return;
            matched = true;
            const CaseReport rep = solve();
            r.add_result(rec_name + ".bound", rep.solved_bound);
            r.add_check(rec_name, expected, rep.solved_bound, tol, rep.passes);
        };
        if (const auto* s = std::get_if<CaseSpec>(&rec)) {
            run(s->name, s->expected_bound, 0.02, [&] { return min_t_feasible(*s); });
        } else {
            const auto& sp = std::get<SpotSpec>(rec);
            run(sp.name, sp.expected_bound, 5e-4, [&] { return evaluate_spot(sp); });
        }
    }
    if (!name.empty() && !matched) usage_error("no case named '" + name + "'");
    return emit(r, json);
}

int cmd_verify(const std::string& suite, double tol, int pairs, bool json) {
    const std::uint64_t seed = seed_from_env();
    Report r;
    if (suite == "constants") r = verify_constants(tol);
    else if (suite == "identities") r = verify_identities(pairs, seed);
    else if (suite == "cases") r = verify_cases();
    else if (suite == "parabolic") r = verify_parabolic();
    else if (suite == "extremal") r = verify_extremal();
    else if (suite == "soundness") r = verify_soundness(1000, 1000, seed);
    else if (suite == "all") r = verify_all(seed);
    else usage_error("unknown suite '" + suite + "'");
    return emit(r, json);
}

int cmd_extremal(const std::vector<std::string>& orders, bool json) {
    std::vector<ExtremalConfig> configs;
    if (orders.empty()) {
        for (int n = 3; n <= 12; ++n) configs.push_back(extremal_elliptic_config(n));
        configs.push_back(extremal_n6_joint_config());
        configs.push_back(modular_pair());
    } else {
        for (const std::string& s : orders) {
            const int n = parse_order(s);
            if (n == kInf) {
                configs.push_back(modular_pair());
            } else if (n <= 12) {
                configs.push_back(extremal_elliptic_config(n));
            } else {
                usage_error("no gallery entry for order " + s);
            }
        }
    }
    Report r;
    r.command = "extremal";
    for (const ExtremalConfig& cfg : configs) {
        const std::string tag = cfg.kind == ExtremalKind::parabolic_modular
                                    ? "modular-pair"
                                    : (cfg.n > 0 ? "elliptic-sharp-" + std::to_string(cfg.n)
                                                 : "n6-joint");
        const double rho_f = hyp_distance(apply(cfg.f, cfg.witness), cfg.witness);
        const double rho_g = hyp_distance(apply(cfg.g, cfg.witness), cfg.witness);
        r.add_result(tag + ".claimed", cfg.claimed);
        r.add_result(tag + ".rho_f", rho_f);
        r.add_result(tag + ".rho_g", rho_g);
        r.add_result(tag + ".record", extremal_record(cfg));
        r.add_check(tag + "/attains", cfg.claimed, std::max(rho_f, rho_g), 1e-6);
        r.add_check(tag + "/local-min", 1.0, verify_equality(cfg) ? 1.0 : 0.0, 0.0,
                    verify_equality(cfg));
    }
    return emit(r, json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Displacement bounds for two-generator Moebius groups"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit the report as JSON");

    std::vector<std::string> orders;
    bool precise = false;
    CLI::App* constants = app.add_subcommand("constants", "constant table c/d/psi/b/t");
    constants->add_option("--n", orders, "orders (integers >= 3, or 'inf')");
    constants->add_flag("--precise", precise, "append 50-digit recomputations");

    std::vector<double> fe, ge;
    std::string witness = "0,0";
    double height = 1.0;
    double pair_tol = 1e-9;
    CLI::App* pair = app.add_subcommand("pair", "analyze a generator pair");
    pair->add_option("--f", fe, "matrix of f, 8 reals row-major")->expected(8)->required();
    pair->add_option("--g", ge, "matrix of g, 8 reals row-major")->expected(8)->required();
    pair->add_option("--witness", witness, "witness boundary coordinate 're,im'");
    pair->add_option("--height", height, "witness height t > 0");
    pair->add_option("--tol", pair_tol, "tolerance for the bound check");

    std::string case_file, case_name;
    CLI::App* case_cmd = app.add_subcommand("case", "run the case table");
    case_cmd->add_option("--case-file", case_file, "plain-text case records");
    case_cmd->add_option("--name", case_name, "run a single named record");

    std::string suite = "all";
    double verify_tol = 5e-4;
    int verify_pairs = 10000;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "identities | constants | cases | parabolic | extremal | "
                       "soundness | all");
    verify->add_option("--tol", verify_tol, "tolerance for printed-decimal checks");
    verify->add_option("--pairs", verify_pairs, "sample count for the identity suite");

    std::vector<std::string> extremal_orders;
    CLI::App* extremal = app.add_subcommand("extremal", "extremal gallery");
    extremal->add_option("--n", extremal_orders, "orders 3..12, or 'inf'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (constants->parsed()) return cmd_constants(orders, json, precise);
        if (pair->parsed()) return cmd_pair(fe, ge, witness, height, pair_tol, json);
        if (case_cmd->parsed()) return cmd_case(case_file, case_name, json);
        if (verify->parsed()) return cmd_verify(suite, verify_tol, verify_pairs, json);
        if (extremal->parsed()) return cmd_extremal(extremal_orders, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
