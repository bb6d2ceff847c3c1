#include "margulis/cases.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "margulis/bounds.hpp"
#include "margulis/constants.hpp"

namespace margulis {

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kSqrt3 = std::sqrt(3.0);
// Roots of x(x+3) = -1 resp. the golden-ratio pair recurring in the order-5
// tables: g5a = -(3-sqrt5)/2, g5b = -(3+sqrt5)/2.
const double kG5a = -(3.0 - kSqrt5) / 2.0;
const double kG5b = -(3.0 + kSqrt5) / 2.0;
// 4 sin^2(pi/5) and 4 sin^2(2 pi/5).
const double kS5 = 4.0 * std::pow(std::sin(std::numbers::pi / 5.0), 2);
const double kS5L = 4.0 * std::pow(std::sin(2.0 * std::numbers::pi / 5.0), 2);

// Affine map gt = c1 * beta + c0 carrying the beta-plane of the analyzed
// generator to the commutator-parameter plane of the auxiliary group.
struct ParamTransform {
    cplx c1{1.0};
    cplx c0{0.0};
};

// gamma(f, g^2) = gamma (beta + 4).
ParamTransform power_route(cplx gamma) { return {gamma, 4.0 * gamma}; }
// gamma(ftilde, g) = beta - gamma.
ParamTransform tilde_route(cplx gamma) { return {1.0, -gamma}; }

SumExclusion pull_sum(const ParamTransform& tr, cplx a, double s) {
    return {(a - tr.c0) / tr.c1, -tr.c0 / tr.c1, s / std::abs(tr.c1)};
}

DiscExclusion pull_disc(const ParamTransform& tr, cplx center, double radius) {
    return {(center - tr.c0) / tr.c1, radius / std::abs(tr.c1)};
}

SumExclusion pull_tail(const ParamTransform& tr, const GammaTable& table) {
    return pull_sum(tr, table.tail_a, table.tail_s);
}

double compare_value(const std::string& label) {
    static const std::map<std::string, double> values = {
        {"c3", c(3)},  {"c4", c(4)}, {"c5", c(5)},       {"c6", c(6)},
        {"cinf", c(kInf)}, {"2c5", 2.0 * c(5)},
    };
    const auto it = values.find(label);
    if (it == values.end()) throw std::runtime_error("unknown compare label: " + label);
    return it->second;
}

bool case_passes(double solved, double expected, double compare_to) {
    return std::abs(solved - expected) <= 0.02 && solved > compare_to;
}

}  // namespace

bool ConstraintRegion::contains(cplx beta, double tol) const {
    for (const auto& d : disc_exclusions) {
        if (std::abs(beta - d.center) < d.radius - tol) return false;
    }
    for (const auto& s : sum_exclusions) {
        if (std::abs(beta - s.focus1) + std::abs(beta - s.focus2) < s.s - tol) {
            return false;
        }
    }
    return true;
}

GammaTable gamma_table(int order) {
    switch (order) {
        case 3:
            return {3, {-3.0, kG5b, -2.0, -1.0, kG5a, 0.0}, -3.0, kSqrt5 + 1.0};
        case 4:
            return {4, {-2.0, -1.0, 0.0}, -2.0, kSqrt3 + 1.0};
        case 5:
            return {5, {-kS5, -1.0, kG5a, 0.0}, -kS5, 2.0};
        case 6:
            return {6, {-1.0, 0.0}, -1.0, 2.0};
        default:
            throw std::invalid_argument("no table for this order");
    }
}

std::vector<EllipticTriple> elliptic_triples() {
    return {
        {TripleGroup::A4, {-2.0, -3.0, -3.0}},
        {TripleGroup::S4, {-1.0, -2.0, -2.0}},
        {TripleGroup::A5a, {-1.0, -3.0, -3.0}},
        {TripleGroup::A5b, {kG5a, -kS5, -kS5}},
        {TripleGroup::A5c, {kG5b, -kS5L, -kS5L}},
    };
}

double case_objective_t(const CaseSpec& spec, cplx beta) {
    if (spec.objective == CaseObjective::joint) {
        return std::cosh(joint_rho_lower({spec.gamma, spec.beta_f, beta}).rho_lower);
    }
    const double t1 = (std::abs(beta + 4.0) + std::abs(beta)) / 4.0;
    const double tq = min_t_from_beta(std::abs(beta + 4.0), std::abs(spec.gamma),
                                      std::abs(spec.beta_f + 4.0));
    return std::max({1.0, t1, tq});
}

namespace {

// Scans a constraint boundary curve beta(theta), theta in [0, 2 pi), and
// refines around the best feasible sample by golden-section search.
void scan_boundary(const CaseSpec& spec, const std::function<cplx(double)>& curve,
                   double& best, cplx& arg) {
    const auto value = [&](double theta) -> double {
        const cplx beta = curve(theta);
        if (!spec.region.contains(beta)) return HUGE_VAL;
        return case_objective_t(spec, beta);
    };
    const int n = 4096;
    const double step = 2.0 * std::numbers::pi / n;
    double best_theta = 0.0, best_local = INFINITY;
    for (int i = 0; i < n; ++i) {
        const double v = value(i * step);
        if (v < best_local) {
            best_local = v;
            best_theta = i * step;
        }
    }
    if (!std::isfinite(best_local)) return;
    double lo = best_theta - step, hi = best_theta + step;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - ratio * (hi - lo); f1 = value(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + ratio * (hi - lo); f2 = value(x2);
        }
    }
    const double theta = f1 < f2 ? x1 : x2;
    const double v = std::min(std::min(f1, f2), best_local);
    if (v < best) {
        best = v;
        arg = curve(v == best_local ? best_theta : theta);
    }
}

}  // namespace

CaseReport min_t_feasible(const CaseSpec& spec) {
    CaseReport report;
    report.name = spec.name;

    // Coarse polar grid about -2, then shrinking-step pattern refinement.
    const cplx center{-2.0, 0.0};
    double best = INFINITY;
    cplx arg = center;
    const int na = 720, nr = 400;
    for (int k = 0; k < nr; ++k) {
        const double r = 20.0 * (k + 0.5) / nr;
        for (int i = 0; i < na; ++i) {
            const double a = 2.0 * std::numbers::pi * i / na;
            const cplx beta = center + std::polar(r, a);
            if (!spec.region.contains(beta)) continue;
            const double t = case_objective_t(spec, beta);
            if (t < best) {
                best = t;
                arg = beta;
            }
        }
    }
    if (!std::isfinite(best)) {
        report.feasible = false;
        return report;
    }
    double h = 0.1;
    for (int step = 0; step < 150; ++step) {
        bool improved = false;
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                const cplx beta = arg + cplx(dx * h, dy * h);
                if (!spec.region.contains(beta)) continue;
                const double t = case_objective_t(spec, beta);
                if (t < best) {
                    best = t;
                    arg = beta;
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.85;
    }
    // The minimum often sits on a constraint boundary where the pattern
    // search cannot slide; scan each boundary curve directly.
    for (const DiscExclusion& disc : spec.region.disc_exclusions) {
        scan_boundary(spec, [&](double theta) {
            return disc.center + std::polar(disc.radius, theta);
        }, best, arg);
    }
    for (const SumExclusion& sum : spec.region.sum_exclusions) {
        const cplx mid = 0.5 * (sum.focus1 + sum.focus2);
        const double fc = 0.5 * std::abs(sum.focus2 - sum.focus1);
        const double semi_a = 0.5 * sum.s;
        const double semi_b = std::sqrt(std::max(0.0, semi_a * semi_a - fc * fc));
        const cplx u = fc > 0.0 ? (sum.focus2 - sum.focus1) / (2.0 * fc) : cplx{1.0};
        scan_boundary(spec, [&](double theta) {
            return mid + u * cplx(semi_a * std::cos(theta), semi_b * std::sin(theta));
        }, best, arg);
    }
    report.feasible = true;
    report.solved_bound = safe_acosh(best);
    report.argmin_beta = arg;
    report.passes = case_passes(report.solved_bound, spec.expected_bound, spec.compare_to);
    return report;
}

CaseReport evaluate_spot(const SpotSpec& spec) {
    CaseReport report;
    report.name = spec.name;
    report.feasible = true;
    report.solved_bound = joint_rho_lower(spec.params).rho_lower;
    report.argmin_beta = spec.params.beta_g;
    report.passes = case_passes(report.solved_bound, spec.expected_bound, spec.compare_to);
    return report;
}

std::vector<CaseRecord> builtin_case_records() {
    std::vector<CaseRecord> records;
    const GammaTable t3 = gamma_table(3);
    const GammaTable t4 = gamma_table(4);
    const GammaTable t5 = gamma_table(5);
    const GammaTable t6 = gamma_table(6);

    const auto add_case = [&](std::string name, cplx gamma, cplx beta_f,
                              ConstraintRegion region, CaseObjective objective,
                              double expected, const std::string& compare) {
        CaseSpec s;
        s.name = std::move(name);
        s.gamma = gamma;
        s.beta_f = beta_f;
        s.region = std::move(region);
        s.objective = objective;
        s.expected_bound = expected;
        s.compare_to = compare_value(compare);
        s.compare_label = compare;
        records.emplace_back(std::move(s));
    };
    const auto add_spot = [&](std::string name, cplx gamma, cplx beta_f, cplx beta_g,
                              double expected, const std::string& compare) {
        SpotSpec s;
        s.name = std::move(name);
        s.params = {gamma, beta_f, beta_g};
        s.expected_bound = expected;
        s.compare_to = compare_value(compare);
        s.compare_label = compare;
        records.emplace_back(std::move(s));
    };

    // Tetrahedral chain, gamma = -1: order-3 tail pushed through
    // gamma(f, g^2).
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(power_route(-1.0), t3)};
        r.exception_points = {-1.0, -kS5, -2.0, -3.0, -kS5L, -4.0};
        add_case("a4-gamma-1", -1.0, -3.0, r, CaseObjective::chain, 0.2036, "c3");
        add_spot("a4-gamma-1-beta-1", -1.0, -3.0, -1.0, 0.3418, "c3");
    }
    // Tetrahedral chain, gamma = -2: order-4 tail through the order-2 lift.
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tilde_route(-2.0), t4)};
        r.exception_points = {-4.0, -3.0, -2.0};
        add_case("a4-gamma-2", -2.0, -3.0, r, CaseObjective::chain, 0.3899, "c3");
        add_spot("a4-gamma-2-beta-2", -2.0, -3.0, -2.0, 0.4281, "c3");
    }
    // Octahedral chain: order-4 tail plus the exclusion disc, both through
    // gamma(f, g^2); the printed conclusion tracks the two-generator bound,
    // so the joint objective is minimized here.
    {
        const ParamTransform tr = power_route(-1.0);
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tr, t4)};
        r.disc_exclusions = {pull_disc(tr, -2.0, 2.0)};
        r.exception_points = {-2.0, -3.0, -4.0, cplx(-kS5),
                              cplx(-2.1551, 0.7448), cplx(-2.1551, -0.7448),
                              cplx(-1.5802, 0.6062), cplx(-1.5802, -0.6062)};
        add_case("s4-gamma-1", -1.0, -2.0, r, CaseObjective::joint, 0.3526, "c4");
        add_spot("s4-gamma-1-beta-s5", -1.0, -2.0, -kS5, 0.4051, "c4");
    }
    // Icosahedral chain from the (-1,-3,-3) triple, gamma = -(3-sqrt5)/2:
    // three disc exclusions through gamma(f, g^2).  The third radius is the
    // quoted .2469 bound; the printed display shifts it to the wrong center.
    {
        const ParamTransform tr = power_route(kG5a);
        ConstraintRegion r;
        r.disc_exclusions = {pull_disc(tr, -1.0, (kSqrt5 - 1.0) / 2.0),
                             pull_disc(tr, kG5a, -kG5a),
                             pull_disc(tr, 0.0, 0.2469)};
        r.exception_points = {-kS5, -3.0, -4.0};
        add_case("a5-b3-gamma-small", kG5a, -3.0, r, CaseObjective::chain, 0.4812, "c3");
    }
    // Same triple, gamma = -(3+sqrt5)/2: order-5 tail through the order-2
    // lift.
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tilde_route(kG5b), t5)};
        r.exception_points = {-4.0, -kS5L, -3.0, kG5b};
        add_case("a5-b3-gamma-large", kG5b, -3.0, r, CaseObjective::chain, 0.4073, "c3");
        add_spot("a5-b3-gamma-large-beta-3", kG5b, -3.0, -3.0, 0.3418, "c3");
    }
    // Icosahedral chain from the small triple, gamma = -(3-sqrt5)/2: order-5
    // tail through gamma(f, g^2).
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(power_route(kG5a), t5)};
        r.exception_points = {cplx(kG5a), -kS5, -3.0, -4.0};
        add_case("a5-b5-gamma-small", kG5a, -kS5, r, CaseObjective::chain, 0.6893, "c5");
    }
    // Small triple, gamma = -1: order-5 tail through gamma(f, g^2) plus the
    // exclusion disc about -3.
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(power_route(-1.0), t5)};
        r.disc_exclusions = {{-3.0, 1.0}};
        r.exception_points = {kG5b, -3.0, -kS5L, -4.0, cplx(-0.6909, 0.7722),
                              cplx(-0.6909, -0.7722), cplx(-1.5, 0.6066),
                              cplx(-1.5, -0.6066)};
        add_case("a5-b5-gamma-1", -1.0, -kS5, r, CaseObjective::chain, 0.3615, "c5");
    }
    // Large triple, gamma = -1: passing to (f^2, g) lands in the
    // a5-b5-gamma-small region, and the bound doubles.
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(power_route(kG5a), t5)};
        r.exception_points = {cplx(kG5a), -kS5, -3.0, -4.0};
        add_case("a5-blarge-gamma-1", kG5a, -kS5, r, CaseObjective::chain, 0.6893, "2c5");
    }
    // Large triple, gamma = -(3+sqrt5)/2: order-5 tail through the order-2
    // lift plus the exclusion disc about -3.
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tilde_route(kG5b), t5)};
        r.disc_exclusions = {{-3.0, 1.0}};
        r.exception_points = {kG5b, -3.0, -kS5L, -4.0, cplx(-0.6909, 0.7722),
                              cplx(-0.6909, -0.7722), cplx(0.1180, 0.6066),
                              cplx(0.1180, -0.6066)};
        add_case("a5-blarge-gamma-large", kG5b, -kS5L, r, CaseObjective::chain, 0.426, "c5");
        // The excluded complex points are commutator-parameter values of the
        // lifted group; shifting back gives the pair entering the
        // two-generator bound.
        add_spot("a5-blarge-gamma-large-point", kG5b, -kS5L, cplx(0.1180, 0.6066) + kG5b,
                 0.4452, "c5");
    }
    // Shared-fixed-point chains: parameters (b, b, beta).
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tilde_route(-3.0), t6)};
        r.exception_points = {-4.0, -3.0};
        add_case("shared-n3", -3.0, -3.0, r, CaseObjective::chain, 0.5007, "c3");
        add_spot("shared-n3-beta-3", -3.0, -3.0, -3.0, 0.4771, "c3");
    }
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(tilde_route(-2.0), t4)};
        r.exception_points = {-4.0, -3.0, -2.0};
        add_case("shared-n4", -2.0, -2.0, r, CaseObjective::chain, 0.5026, "c4");
        add_spot("shared-n4-beta-3", -2.0, -2.0, -3.0, 0.4281, "c4");
    }
    {
        ConstraintRegion r;
        r.sum_exclusions = {pull_tail(power_route(-1.0), t6)};
        r.exception_points = {-4.0, -3.0};
        add_case("shared-n6", -1.0, -1.0, r, CaseObjective::chain, 0.3942, "c6");
    }
    return records;
}

std::vector<CaseReport> run_all_cases() {
    std::vector<CaseReport> reports;
    for (const CaseRecord& rec : builtin_case_records()) {
        if (const auto* s = std::get_if<CaseSpec>(&rec)) {
            reports.push_back(min_t_feasible(*s));
        } else {
            reports.push_back(evaluate_spot(std::get<SpotSpec>(rec)));
        }
    }
    return reports;
}

// ---------------------------------------------------------------------------
// Plain-text record files.
//
// Records are blocks started by "[case]" or "[spot]" followed by "key = value"
// lines; '#' starts a comment.  Complex values are "re im" pairs, disc
// constraints "re im radius", sum constraints "re im re im s".

namespace {

std::vector<double> parse_reals(const std::string& text, std::size_t want, int line_no) {
    std::istringstream in(text);
    std::vector<double> out;
    double x;
    while (in >> x) out.push_back(x);
    if (out.size() != want) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected " + std::to_string(want) + " numbers");
    }
    return out;
}

void finish_record(std::vector<CaseRecord>& records, bool is_spot,
                   std::map<std::string, std::vector<std::string>>& kv, int line_no) {
    const auto take1 = [&](const std::string& key) {
        const auto it = kv.find(key);
        if (it == kv.end() || it->second.size() != 1) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": missing key '" + key + "'");
        }
        return it->second.front();
    };
    const auto take_cplx = [&](const std::string& key) {
        const auto v = parse_reals(take1(key), 2, line_no);
        return cplx(v[0], v[1]);
    };
    if (is_spot) {
        SpotSpec s;
        s.name = take1("name");
        s.params = {take_cplx("gamma"), take_cplx("beta_f"), take_cplx("beta_g")};
        s.expected_bound = std::stod(take1("expected"));
        s.compare_label = take1("compare");
        s.compare_to = compare_value(s.compare_label);
        records.emplace_back(std::move(s));
        return;
    }
    CaseSpec s;
    s.name = take1("name");
    s.gamma = take_cplx("gamma");
    s.beta_f = take_cplx("beta_f");
    const std::string objective = take1("objective");
    if (objective == "chain") {
        s.objective = CaseObjective::chain;
    } else if (objective == "joint") {
        s.objective = CaseObjective::joint;
    } else {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": unknown objective '" + objective + "'");
    }
    for (const auto& text : kv["disc"]) {
        const auto v = parse_reals(text, 3, line_no);
        s.region.disc_exclusions.push_back({cplx(v[0], v[1]), v[2]});
    }
    for (const auto& text : kv["sum"]) {
        const auto v = parse_reals(text, 5, line_no);
        s.region.sum_exclusions.push_back({cplx(v[0], v[1]), cplx(v[2], v[3]), v[4]});
    }
    for (const auto& text : kv["exception"]) {
        const auto v = parse_reals(text, 2, line_no);
        s.region.exception_points.emplace_back(v[0], v[1]);
    }
    s.expected_bound = std::stod(take1("expected"));
    s.compare_label = take1("compare");
    s.compare_to = compare_value(s.compare_label);
    records.emplace_back(std::move(s));
}

}  // namespace

std::vector<CaseRecord> parse_case_records(std::istream& in) {
    std::vector<CaseRecord> records;
    std::map<std::string, std::vector<std::string>> kv;
    bool in_record = false, is_spot = false;
    int line_no = 0, record_line = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto pos = line.find('#'); pos != std::string::npos) {
            line.erase(pos);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line == "[case]" || line == "[spot]") {
            if (in_record) finish_record(records, is_spot, kv, record_line);
            kv.clear();
            in_record = true;
            is_spot = (line == "[spot]");
            record_line = line_no;
            continue;
        }
        const auto eq = line.find('=');
        if (!in_record || eq == std::string::npos) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected '[case]', '[spot]' or 'key = value'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        kv[key].push_back(value);
    }
    if (in_record) finish_record(records, is_spot, kv, record_line);
    return records;
}

std::vector<CaseRecord> load_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open case file: " + path);
    return parse_case_records(in);
}

void write_case_records(std::ostream& out, const std::vector<CaseRecord>& records) {
    out.precision(17);
    const auto put_cplx = [&](const char* key, cplx z) {
        out << key << " = " << z.real() << ' ' << z.imag() << '\n';
    };
    for (const CaseRecord& rec : records) {
        if (const auto* s = std::get_if<SpotSpec>(&rec)) {
            out << "[spot]\n";
            out << "name = " << s->name << '\n';
            put_cplx("gamma", s->params.gamma);
            put_cplx("beta_f", s->params.beta_f);
            put_cplx("beta_g", s->params.beta_g);
            out << "expected = " << s->expected_bound << '\n';
            out << "compare = " << s->compare_label << "\n\n";
            continue;
        }
        const auto& s = std::get<CaseSpec>(rec);
        out << "[case]\n";
        out << "name = " << s.name << '\n';
        put_cplx("gamma", s.gamma);
        put_cplx("beta_f", s.beta_f);
        out << "objective = "
            << (s.objective == CaseObjective::chain ? "chain" : "joint") << '\n';
        for (const auto& d : s.region.disc_exclusions) {
            out << "disc = " << d.center.real() << ' ' << d.center.imag() << ' '
                << d.radius << '\n';
        }
        for (const auto& e : s.region.sum_exclusions) {
            out << "sum = " << e.focus1.real() << ' ' << e.focus1.imag() << ' '
                << e.focus2.real() << ' ' << e.focus2.imag() << ' ' << e.s << '\n';
        }
        for (const auto& p : s.region.exception_points) {
            out << "exception = " << p.real() << ' ' << p.imag() << '\n';
        }
        out << "expected = " << s.expected_bound << '\n';
        out << "compare = " << s.compare_label << "\n\n";
    }
}

N6Joint n6_joint_config() {
    // Axis distance forced by the parameters: cosh(2 delta(f,g)) = 5/3.
    const double budget = 0.5 * std::acosh(5.0 / 3.0);
    // 4 cosh(rho(f)) = cosh(2 delta_f) + 3 rises with the f-share of the
    // budget while 4 cosh(rho(g)) = 3 cosh(2 delta_g) + 1 falls, so the
    // balanced split minimizes the max.
    double lo = 0.0, hi = budget;
    for (int i = 0; i < 200; ++i) {
        const double u = (lo + hi) / 2.0;
        const double lhs = std::cosh(2.0 * u) + 3.0;
        const double rhs = 3.0 * std::cosh(2.0 * (budget - u)) + 1.0;
        (lhs < rhs ? lo : hi) = u;
    }
    const double u = (lo + hi) / 2.0;
    N6Joint out;
    out.cosh2delta_f = std::cosh(2.0 * u);
    out.cosh2delta_g = std::cosh(2.0 * (budget - u));
    out.cosh_rho = (out.cosh2delta_f + 3.0) / 4.0;
    return out;
}

double n6_joint_min() { return n6_joint_config().cosh_rho; }

ParabolicMin parabolic_min_t() {
    // t = max((|u|^2+2)/2, (|b|^2+|c|^2)/2) with |b c| = 1 and |c u| >= 1.
    // For fixed |u| the second term is minimized at |c| = max(1, 1/|u|), and
    // balancing the two terms gives |u| = 1/sqrt 2.
    return {5.0 / 4.0, "a = d = 0, g of order 2: |u| = |b| = 1/sqrt(2), |c| = sqrt(2)"};
}

double parabolic_min_t_numeric() {
    // |b| is eliminated through |b||c| = 1; |c| is clamped up to the
    // constraint |c||u| >= 1 so the pattern search can slide along the active
    // boundary.
    const auto value = [](double u, double cc) {
        const double c_eff = std::max(cc, 1.0 / u);
        return std::max((u * u + 2.0) / 2.0,
                        (1.0 / (c_eff * c_eff) + c_eff * c_eff) / 2.0);
    };
    double best = INFINITY;
    double bu = 0.7, bc = 1.4;
    for (int i = 1; i <= 300; ++i) {
        const double u = 2.0 * i / 300.0;
        for (int k = 1; k <= 300; ++k) {
            const double cc = 3.0 * k / 300.0;
            const double t = value(u, cc);
            if (t < best) {
                best = t;
                bu = u;
                bc = cc;
            }
        }
    }
    double h = 0.01;
    for (int step = 0; step < 200; ++step) {
        bool improved = false;
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                const double u = bu + dx * h, cc = bc + dy * h;
                if (u <= 0.0 || cc <= 0.0) continue;
                const double t = value(u, cc);
                if (t < best) {
                    best = t;
                    bu = u;
                    bc = cc;
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.7;
    }
    return best;
}

}  // namespace margulis
