#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "margulis/constants.hpp"

using namespace margulis;

TEST_CASE("printed decimals of the constant table") {
    CHECK(std::abs(c(3) - 0.1829) < 5e-4);
    CHECK(std::abs(c(4) - 0.3453) < 5e-4);
    CHECK(std::abs(c(5) - 0.3401) < 5e-4);
    CHECK(std::abs(c(6) - std::acosh(17.0 / 16.0)) < 1e-15);
    CHECK(std::abs(c(6) - 0.3517) < 5e-4);
    CHECK(std::abs(c(kInf) - std::acosh(1.25)) < 1e-15);
    CHECK(std::abs(c(kInf) - 0.6931) < 5e-4);
    CHECK(std::abs(yamada_cF() - 0.2629) < 5e-4);
    CHECK(std::abs(d(6) - std::acosh(6.0 - std::sqrt(24.0))) < 1e-15);
    CHECK(std::abs(d(6) - 0.4457) < 5e-4);
    CHECK_THROWS_AS(c(2), std::invalid_argument);
}

TEST_CASE("frozen full-precision values") {
    CHECK(std::abs(c(3) - 0.1829726092372725) < 1e-14);
    CHECK(std::abs(c(4) - 0.3453757482921165) < 1e-14);
    CHECK(std::abs(c(5) - 0.34010718975732934) < 1e-12);
    CHECK(std::abs(yamada_cF() - 0.26293449215284126) < 1e-14);
}

TEST_CASE("psi table") {
    CHECK(std::abs(psi(3) - (1.0 + std::sqrt(5.0)) / 4.0) < 1e-15);
    CHECK(std::abs(psi(3) - 0.8090) < 5e-4);
    // The printed ".6803" transposes the digits of (1+sqrt 3)/4 = .6830.
    CHECK(std::abs(psi(4) - 0.6830) < 5e-4);
    CHECK(psi(5) == 0.5);
    CHECK(psi(6) == 0.5);
    CHECK(std::abs(psi(7) - 0.3117) < 5e-4);
    CHECK_THROWS_AS(psi(2), std::invalid_argument);
}

TEST_CASE("b(n) from the defining relation") {
    // psi(3)/sin^2(pi/3) = (1+sqrt5)/3.
    CHECK(std::abs(b(3) - std::acosh((1.0 + std::sqrt(5.0)) / 3.0)) < 1e-14);
    const double s5 = std::sin(std::numbers::pi / 5.0);
    CHECK(std::abs(b(5) - std::acosh(0.5 / (s5 * s5))) < 1e-14);
    CHECK(std::abs(b(6) - std::acosh(2.0)) < 1e-14);
}

TEST_CASE("phi special values and monotonicity") {
    for (int n = 3; n <= 12; ++n) {
        const double sn = std::sin(std::numbers::pi / n);
        CHECK(std::abs(phi(1.0, n) - sn * sn) < 1e-14);
        double prev = phi(1.0, n);
        for (int i = 1; i <= 300; ++i) {
            const double t = 1.0 + 9.0 * i / 300.0;
            const double v = phi(t, n);
            CHECK(v > prev);
            prev = v;
        }
    }
    CHECK(std::abs(phi(6.0 - std::sqrt(24.0), 6) - 0.5) < 1e-12);
    CHECK(std::abs(phi(std::cosh(c(3)), 3) - psi(3)) < 1e-4);
}

TEST_CASE("solve_t roots and the d(n) identity") {
    CHECK(std::abs(solve_t(6) - (6.0 - std::sqrt(24.0))) < 1e-12);
    CHECK(std::abs(solve_t(3) - std::cosh(c(3))) < 1e-9);
    CHECK(std::abs(solve_t(5) - 1.0583) < 5e-4);
    for (const int n : {3, 4, 5, 6, 7, 12, 100}) {
        CHECK(std::abs(std::acosh(solve_t(n)) - d(n)) < 1e-9);
        CHECK(std::abs(phi(std::cosh(d(n)), n) - psi(n)) < 1e-9);
    }
}

TEST_CASE("c(n) tail behaviour") {
    for (int n = 7; n <= 10000; n = n < 50 ? n + 1 : n * 3 / 2) {
        CHECK(c(n) >= 0.3343);
    }
    CHECK(std::abs(c(1000000) - std::acosh(1.25)) < 1e-4);
    for (int n = 3; n <= 100; ++n) {
        if (n == 6) {
            CHECK(d(6) > c(6));
        } else {
            CHECK(d(n) == c(n));
        }
    }
}

TEST_CASE("alternative closed form for c(3)") {
    const auto [lhs, rhs] = c3_alternative_identity();
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(std::abs(lhs - std::acosh(solve_t(3))) < 1e-9);
}

TEST_CASE("constant_table consistency") {
    for (int n = 3; n <= 20; ++n) {
        const ConstantTable tab = constant_table(n);
        CHECK(tab.c_n <= tab.d_n + 1e-15);
        CHECK(std::abs(tab.t_n - std::cosh(tab.d_n)) < 1e-15);
        CHECK(tab.b_n > 0.0);
    }
    CHECK(std::abs(constant_table(kInf).t_n - 1.25) < 1e-15);
}

TEST_CASE("high-precision table agrees with double evaluation") {
    const auto table = high_precision_table();
    REQUIRE(table.size() == 7);
    for (const auto& [name, digits] : table) {
        const double hp = std::stod(digits);
        double lo = 0.0;
        if (name == "c3") lo = c(3);
        else if (name == "c4") lo = c(4);
        else if (name == "c5") lo = c(5);
        else if (name == "c6") lo = c(6);
        else if (name == "cinf") lo = c(kInf);
        else if (name == "cF") lo = yamada_cF();
        else lo = d(6);
        CHECK(std::abs(hp - lo) < 1e-13);
        CHECK(digits.size() >= 40);
    }
}
