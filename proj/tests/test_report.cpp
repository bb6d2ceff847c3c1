#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "margulis/report.hpp"

using namespace margulis;

TEST_CASE("decimal12 renders 12 significant digits") {
    CHECK(decimal12(0.5) == "0.5");
    CHECK(decimal12(1.0 / 3.0) == "0.333333333333");
    CHECK(decimal12(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("report pass logic") {
    Report r;
    r.command = "test";
    r.add_check("ok", 1.0, 1.0 + 1e-13, 1e-9);
    CHECK(r.pass());
    r.add_check("bad", 1.0, 2.0, 1e-9);
    CHECK_FALSE(r.pass());
}

TEST_CASE("json output round-trips byte-identically") {
    Report r;
    r.command = "constants";
    r.add_input("n", "3");
    r.add_result("c", 0.1829726092372725);
    r.add_check("c3", 0.1829, 0.1829726092372725, 5e-4);
    const std::string text = to_json(r);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(parsed["pass"] == true);
    CHECK(parsed["results"]["c"] == "0.182972609237");
}

TEST_CASE("human output mentions every check") {
    Report r;
    r.command = "verify";
    r.add_check("alpha", 1.0, 1.0, 1e-9);
    std::ostringstream out;
    print_human(r, out);
    CHECK(out.str().find("alpha") != std::string::npos);
    CHECK(out.str().find("PASS") != std::string::npos);
}
