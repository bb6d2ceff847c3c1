#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "margulis/mobius.hpp"

namespace margulis {

// One verification check inside a report.
struct Check {
    std::string name;
    double expected{0.0};
    double got{0.0};
    double tolerance{0.0};
    bool pass{false};
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<Check> checks;

    bool pass() const;
    void add_check(std::string name, double expected, double got, double tolerance);
    // Pass/fail determined by a predicate already evaluated by the caller
    // (e.g. one-sided comparisons).
    void add_check(std::string name, double expected, double got, double tolerance,
                   bool pass);
    void add_result(std::string key, std::string value);
    void add_result(std::string key, double value);
    void add_result(std::string key, cplx value);
    void add_input(std::string key, std::string value);
};

// Decimal rendering with 12 significant digits, used for every number in the
// JSON schema so that parse + re-serialize round-trips byte-identically.
std::string decimal12(double x);

std::string to_json(const Report& r);
void print_human(const Report& r, std::ostream& out);

}  // namespace margulis
