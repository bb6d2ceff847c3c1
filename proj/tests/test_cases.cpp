#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "margulis/cases.hpp"
#include "margulis/constants.hpp"
#include "support.hpp"

using namespace margulis;
using margulis::testing::Rng;

namespace {

std::map<std::string, CaseReport> report_map() {
    std::map<std::string, CaseReport> m;
    for (const CaseReport& r : run_all_cases()) m[r.name] = r;
    return m;
}

const CaseSpec& find_case(const std::vector<CaseRecord>& records, const std::string& name) {
    for (const auto& rec : records) {
        if (const auto* s = std::get_if<CaseSpec>(&rec); s && s->name == name) return *s;
    }
    throw std::runtime_error("case not found: " + name);
}

}  // namespace

TEST_CASE("gamma tables match the quoted values") {
    const GammaTable t3 = gamma_table(3);
    REQUIRE(t3.finite_values.size() == 6);
    CHECK(std::abs(t3.finite_values[1] - cplx{-2.618}) < 5e-4);
    CHECK(std::abs(t3.finite_values[4] - cplx{-0.3819}) < 5e-4);
    CHECK(std::abs(t3.tail_s - (std::sqrt(5.0) + 1.0)) < 1e-15);

    const GammaTable t4 = gamma_table(4);
    CHECK(t4.finite_values == std::vector<cplx>{-2.0, -1.0, 0.0});
    CHECK(std::abs(t4.tail_s - (std::sqrt(3.0) + 1.0)) < 1e-15);

    const GammaTable t5 = gamma_table(5);
    CHECK(std::abs(t5.tail_a - cplx{-1.3819}) < 5e-4);
    CHECK(t5.tail_s == 2.0);

    const GammaTable t6 = gamma_table(6);
    CHECK(t6.finite_values == std::vector<cplx>{-1.0, 0.0});
    CHECK(std::abs(t6.tail_a - cplx{-1.0}) < 1e-15);
    CHECK_THROWS_AS(gamma_table(7), std::invalid_argument);
}

TEST_CASE("elliptic triples") {
    const auto triples = elliptic_triples();
    REQUIRE(triples.size() == 5);
    CHECK(triples[0].params.gamma == cplx{-2.0});
    CHECK(triples[0].params.beta_f == cplx{-3.0});
    CHECK(triples[1].params.gamma == cplx{-1.0});
    CHECK(triples[1].params.beta_f == cplx{-2.0});
    CHECK(std::abs(triples[3].params.gamma - cplx{-0.3819}) < 5e-4);
    CHECK(std::abs(triples[3].params.beta_f - cplx{-1.3819}) < 5e-4);
    CHECK(std::abs(triples[4].params.gamma - cplx{-2.618}) < 5e-4);
    CHECK(std::abs(triples[4].params.beta_f - cplx{-3.618}) < 5e-4);
}

TEST_CASE("case solver reproduces the printed chain bounds") {
    // expected: printed decimal; frozen: independent prototype solver value.
    const struct {
        const char* name;
        double printed;
        double frozen;
    } rows[] = {
        {"a4-gamma-1", 0.2036, 0.2046},
        {"a4-gamma-2", 0.3899, 0.3905},
        {"s4-gamma-1", 0.3526, 0.3510},
        {"a5-b3-gamma-small", 0.4812, 0.4812},
        {"a5-b3-gamma-large", 0.4073, 0.3958},
        {"a5-b5-gamma-small", 0.6893, 0.6909},
        {"a5-b5-gamma-1", 0.3615, 0.3618},
        {"a5-blarge-gamma-1", 0.6893, 0.6909},
        {"a5-blarge-gamma-large", 0.426, 0.4264},
        {"shared-n3", 0.5007, 0.5009},
        {"shared-n4", 0.5026, 0.5029},
        {"shared-n6", 0.3942, 0.3944},
    };
    const auto reports = report_map();
    for (const auto& row : rows) {
        CAPTURE(row.name);
        REQUIRE(reports.count(row.name) == 1);
        const CaseReport& r = reports.at(row.name);
        CHECK(r.feasible);
        CHECK(r.passes);
        CHECK(std::abs(r.solved_bound - row.printed) <= 0.02);
        CHECK(std::abs(r.solved_bound - row.frozen) < 2e-3);
    }
}

TEST_CASE("point checks reproduce the printed two-generator bounds") {
    const struct {
        const char* name;
        double printed;
        double frozen;
    } rows[] = {
        {"a4-gamma-1-beta-1", 0.3418, 0.3418931398},
        {"a4-gamma-2-beta-2", 0.4281, 0.4281622181},
        {"s4-gamma-1-beta-s5", 0.4051, 0.4051143886},
        {"a5-b3-gamma-large-beta-3", 0.3418, 0.3418931398},
        {"a5-blarge-gamma-large-point", 0.4452, 0.4452124701},
        {"shared-n3-beta-3", 0.4771, 0.4771764598},
        {"shared-n4-beta-3", 0.4281, 0.4281622181},
    };
    const auto reports = report_map();
    for (const auto& row : rows) {
        CAPTURE(row.name);
        REQUIRE(reports.count(row.name) == 1);
        const CaseReport& r = reports.at(row.name);
        CHECK(r.passes);
        CHECK(std::abs(r.solved_bound - row.printed) < 5e-4);
        CHECK(std::abs(r.solved_bound - row.frozen) < 1e-8);
    }
}

TEST_CASE("every report bound strictly exceeds its target constant") {
    const auto records = builtin_case_records();
    const auto reports = report_map();
    for (const auto& rec : records) {
        if (const auto* s = std::get_if<CaseSpec>(&rec)) {
            CHECK(reports.at(s->name).solved_bound > s->compare_to);
            CHECK(s->expected_bound > s->compare_to);
        } else {
            const auto& sp = std::get<SpotSpec>(rec);
            CHECK(reports.at(sp.name).solved_bound > sp.compare_to);
        }
    }
}

TEST_CASE("solver soundness: random feasible samples never beat the minimum") {
    const auto records = builtin_case_records();
    Rng rng;
    for (const char* name : {"a4-gamma-1", "s4-gamma-1", "shared-n6"}) {
        const CaseSpec& spec = find_case(records, name);
        const CaseReport report = min_t_feasible(spec);
        const double tmin = std::cosh(report.solved_bound);
        int kept = 0;
        while (kept < 10000) {
            const cplx beta = cplx{-2.0} + 20.0 * rng.complex(1.0);
            if (!spec.region.contains(beta)) continue;
            ++kept;
            CHECK(case_objective_t(spec, beta) >= tmin - 1e-9);
        }
    }
}

TEST_CASE("enlarging a disc exclusion never decreases the bound") {
    const auto records = builtin_case_records();
    for (const char* name : {"s4-gamma-1", "a5-b5-gamma-1", "a5-b3-gamma-small"}) {
        CaseSpec spec = find_case(records, name);
        const double base = min_t_feasible(spec).solved_bound;
        for (auto& disc : spec.region.disc_exclusions) disc.radius *= 1.3;
        const double grown = min_t_feasible(spec).solved_bound;
        CHECK(grown >= base - 1e-9);
    }
}

TEST_CASE("empty region reports infeasible") {
    CaseSpec spec;
    spec.name = "empty";
    spec.region.disc_exclusions = {{-2.0, 1000.0}};
    const CaseReport r = min_t_feasible(spec);
    CHECK_FALSE(r.feasible);
}

TEST_CASE("n6 joint configuration") {
    CHECK(std::abs(n6_joint_min() - 17.0 / 16.0) < 1e-12);
    const N6Joint cfg = n6_joint_config();
    CHECK(std::abs((cfg.cosh2delta_f + 3.0) - (3.0 * cfg.cosh2delta_g + 1.0)) < 1e-10);
    // Dense 1-D oracle over the budget split.
    const double budget = 0.5 * std::acosh(5.0 / 3.0);
    double oracle = INFINITY;
    for (int i = 0; i <= 200000; ++i) {
        const double u = budget * i / 200000;
        const double v = budget - u;
        oracle = std::min(oracle, std::max((std::cosh(2.0 * u) + 3.0) / 4.0,
                                           (3.0 * std::cosh(2.0 * v) + 1.0) / 4.0));
    }
    CHECK(std::abs(oracle - 17.0 / 16.0) < 1e-6);
}

TEST_CASE("parabolic minimum") {
    const ParabolicMin m = parabolic_min_t();
    CHECK(m.t_min == 1.25);
    CHECK(m.equality_condition.find("1/sqrt(2)") != std::string::npos);
    CHECK(std::abs(parabolic_min_t_numeric() - 1.25) < 1e-6);
}

TEST_CASE("case records round-trip through the text format") {
    const auto records = builtin_case_records();
    std::ostringstream out;
    write_case_records(out, records);
    std::istringstream in(out.str());
    const auto parsed = parse_case_records(in);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        REQUIRE(parsed[i].index() == records[i].index());
        if (const auto* s = std::get_if<CaseSpec>(&records[i])) {
            const auto& p = std::get<CaseSpec>(parsed[i]);
            CHECK(p.name == s->name);
            CHECK(std::abs(p.gamma - s->gamma) < 1e-15);
            CHECK(std::abs(p.beta_f - s->beta_f) < 1e-15);
            CHECK(p.objective == s->objective);
            CHECK(p.expected_bound == s->expected_bound);
            CHECK(p.compare_to == s->compare_to);
            REQUIRE(p.region.sum_exclusions.size() == s->region.sum_exclusions.size());
            REQUIRE(p.region.disc_exclusions.size() == s->region.disc_exclusions.size());
            CHECK(p.region.exception_points.size() == s->region.exception_points.size());
            for (std::size_t k = 0; k < p.region.sum_exclusions.size(); ++k) {
                CHECK(std::abs(p.region.sum_exclusions[k].focus1 -
                               s->region.sum_exclusions[k].focus1) < 1e-15);
                CHECK(std::abs(p.region.sum_exclusions[k].s -
                               s->region.sum_exclusions[k].s) < 1e-15);
            }
        } else {
            const auto& a = std::get<SpotSpec>(records[i]);
            const auto& p = std::get<SpotSpec>(parsed[i]);
            CHECK(p.name == a.name);
            CHECK(std::abs(p.params.beta_g - a.params.beta_g) < 1e-15);
        }
    }
}

TEST_CASE("shipped case file matches the built-in table") {
    const char* path = std::getenv("MARGULIS_CASE_FILE");
    const std::string file = path ? path : "../data/cases.txt";
    std::ifstream in(file);
    if (!in) {
        MESSAGE("case file not found, skipping: " << file);
        return;
    }
    const auto shipped = parse_case_records(in);
    const auto builtin = builtin_case_records();
    REQUIRE(shipped.size() == builtin.size());
    for (std::size_t i = 0; i < shipped.size(); ++i) {
        CHECK(shipped[i].index() == builtin[i].index());
        if (const auto* s = std::get_if<CaseSpec>(&builtin[i])) {
            const auto& p = std::get<CaseSpec>(shipped[i]);
            CHECK(p.name == s->name);
            CHECK(std::abs(p.gamma - s->gamma) < 1e-12);
            const CaseReport a = min_t_feasible(p);
            const CaseReport b = min_t_feasible(*s);
            CHECK(std::abs(a.solved_bound - b.solved_bound) < 1e-9);
        }
    }
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream in("[case]\nname = x\nbogus line\n");
    CHECK_THROWS_AS(parse_case_records(in), std::runtime_error);
}
