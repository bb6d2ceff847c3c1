#include <doctest.h>

#include <cmath>
#include <numbers>

#include "margulis/bounds.hpp"
#include "margulis/constants.hpp"
#include "support.hpp"

using namespace margulis;
using margulis::testing::Rng;

TEST_CASE("rho_from_beta_delta examples") {
    CHECK(std::abs(rho_from_beta_delta(0.5, 0.0) - std::log(2.0)) < 1e-12);
    const double dlt = 0.37;
    CHECK(std::abs(rho_from_beta_delta(-4.0, dlt) - 2.0 * dlt) < 1e-12);
    CHECK(rho_from_beta_delta(-3.0, 0.0) < 1e-9);
    CHECK_THROWS_WITH_AS(rho_from_beta_delta(0.0, 1.0),
                         "parabolic: use parabolic_displacement", std::invalid_argument);
}

TEST_CASE("parabolic_displacement examples") {
    CHECK(std::abs(parabolic_displacement(1.0) - std::acosh(1.5)) < 1e-12);
    CHECK(std::abs(parabolic_displacement(1.0 / std::sqrt(2.0)) - std::acosh(1.25)) <
          1e-12);
    CHECK(std::abs(parabolic_displacement(1.0, {0.0, 10.0}) - std::acosh(1.005)) < 1e-12);
    CHECK_THROWS_AS(parabolic_displacement(0.0), std::invalid_argument);
}

TEST_CASE("elliptic_delta_upper: degenerate rho, table value, tight round-trip") {
    const auto zero = elliptic_delta_upper(5, 0.0);
    CHECK(std::abs(zero.first - 1.0) < 1e-12);
    CHECK(std::abs(zero.second) < 1e-12);

    const auto n3 = elliptic_delta_upper(3, c(3));
    CHECK(std::abs(n3.first - 1.0223816556754677) < 1e-9);

    // Tightness: an order-n rotation at the bounding delta recovers rho.
    for (int n = 3; n <= 8; ++n) {
        const double rho = 0.41;
        const auto ub = elliptic_delta_upper(n, rho);
        const double delta = 0.5 * std::acosh(ub.first);
        const double sn = std::sin(std::numbers::pi / n);
        const double back = rho_from_beta_delta(-4.0 * sn * sn, delta);
        CHECK(std::abs(back - rho) < 1e-9);
        // Consistency of the sinh form with the cosh form.
        CHECK(std::abs(ub.second - (ub.first * ub.first - 1.0)) < 1e-9);
    }
    CHECK_THROWS_AS(elliptic_delta_upper(2, 0.1), std::invalid_argument);
}

TEST_CASE("order2_delta_upper: equality for order-2 elements") {
    const auto b = order2_delta_upper(-4.0, std::acosh(1.25));
    CHECK(std::abs(b.first - 1.25) < 1e-12);
    const auto z = order2_delta_upper(-3.0, 0.0);
    CHECK(std::abs(z.second) < 1e-12);
    CHECK_THROWS_AS(order2_delta_upper(0.0, 0.1), std::invalid_argument);

    Rng rng;
    for (int i = 0; i < 100; ++i) {
        const MoebiusMap g = rng.elliptic(2);
        const double rho = hyperbolic_norm(g);
        const double delta = delta_point_axis(kBasePoint, g);
        const auto ub = order2_delta_upper(beta(g), rho);
        CHECK(std::abs(std::cosh(2.0 * delta) - ub.first) < 1e-7);
    }
}

TEST_CASE("joint_rho_lower spot values") {
    CHECK(std::abs(joint_rho_lower({-1.0, -3.0, -1.0}).rho_lower - 0.3418) < 5e-4);
    CHECK(std::abs(joint_rho_lower({-2.0, -3.0, -2.0}).rho_lower - 0.4281) < 5e-4);
    CHECK(joint_rho_lower({0.0, -4.0, -4.0}).rho_lower == 0.0);
    // Closed form for this triple: M = 4 + sqrt(20).
    CHECK(std::abs(joint_rho_lower({-1.0, -3.0, -1.0}).rho_lower -
                   std::acosh((4.0 + std::sqrt(20.0)) / 8.0)) < 1e-12);
}

TEST_CASE("joint_rho_lower is monotone in |gamma|") {
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        const cplx bf = rng.complex(), bg = rng.complex();
        const cplx g = rng.complex();
        const double lo = joint_rho_lower({g, bf, bg}).rho_lower;
        const double hi = joint_rho_lower({g * 1.5, bf, bg}).rho_lower;
        CHECK(hi >= lo - 1e-12);
    }
}

TEST_CASE("beta_upper_from_gamma and its inverse") {
    CHECK(std::abs(beta_upper_from_gamma(1.25, 1.0, 1.0) - 4.0) < 1e-12);
    CHECK(std::abs(beta_upper_from_gamma(1.1, 0.0, 1.0) - 4.4) < 1e-12);
    CHECK_THROWS_WITH_AS(beta_upper_from_gamma(0.2, 1.0, 1.0), "bound vacuous",
                         std::invalid_argument);

    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const double gamma_abs = std::abs(rng.real(0.1, 3.0));
        const double p = std::abs(rng.real(0.0, 3.0));
        const double t = rng.real(1.0, 3.0) + p / 4.0;
        const double q = beta_upper_from_gamma(t, gamma_abs, p);
        if (q <= 0.0) continue;
        CHECK(std::abs(min_t_from_beta(q, gamma_abs, p) - t) < 1e-12);
    }
}

TEST_CASE("displacement formula matches direct distance at random points") {
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        const MoebiusMap f = rng.nonparabolic();
        const HPoint x{rng.complex(), std::exp(rng.real())};
        const double delta = delta_point_axis(x, f);
        const double rho = rho_from_beta_delta(beta(f), delta);
        CHECK(std::abs(rho - hyp_distance(x, apply(f, x))) < 1e-8);
    }
}
