#include "margulis/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace margulis {

bool Report::pass() const {
    for (const Check& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

void Report::add_check(std::string name, double expected, double got, double tolerance) {
    add_check(std::move(name), expected, got, tolerance,
              std::abs(expected - got) <= tolerance);
}

void Report::add_check(std::string name, double expected, double got, double tolerance,
                       bool pass) {
    checks.push_back({std::move(name), expected, got, tolerance, pass});
}

void Report::add_result(std::string key, std::string value) {
    results.emplace_back(std::move(key), std::move(value));
}

void Report::add_result(std::string key, double value) {
    results.emplace_back(std::move(key), decimal12(value));
}

void Report::add_result(std::string key, cplx value) {
    results.emplace_back(std::move(key),
                         decimal12(value.real()) + " " + decimal12(value.imag()));
}

void Report::add_input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
}

std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string to_json(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["inputs"] = nlohmann::json::object();
    for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
    j["results"] = nlohmann::json::object();
    for (const auto& [k, v] : r.results) j["results"][k] = v;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"expected", decimal12(c.expected)},
                               {"got", decimal12(c.got)},
                               {"tolerance", decimal12(c.tolerance)},
                               {"pass", c.pass}});
    }
    j["pass"] = r.pass();
    return j.dump(2) + "\n";
}

void print_human(const Report& r, std::ostream& out) {
    out << "== " << r.command << " ==\n";
    for (const auto& [k, v] : r.inputs) out << "  " << k << ": " << v << "\n";
    if (!r.results.empty()) out << "results:\n";
    for (const auto& [k, v] : r.results) out << "  " << k << " = " << v << "\n";
    if (!r.checks.empty()) out << "checks:\n";
    for (const Check& c : r.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
            << ": got " << decimal12(c.got) << ", expected " << decimal12(c.expected)
            << " (tol " << decimal12(c.tolerance) << ")\n";
    }
    out << (r.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace margulis
