#include "margulis/bounds.hpp"

#include <cmath>
#include <numbers>

namespace margulis {

double safe_acosh(double x) {
    if (x >= 1.0) return std::acosh(x);
    if (x >= 1.0 - 1e-12) return 0.0;
    throw std::domain_error("acosh argument below 1");
}

double rho_from_beta_delta(cplx beta, double delta) {
    if (std::abs(beta) <= kIdTol) {
        throw std::invalid_argument("parabolic: use parabolic_displacement");
    }
    return safe_acosh((std::cosh(2.0 * delta) * std::abs(beta) + std::abs(beta + 4.0)) / 4.0);
}

double parabolic_displacement(cplx u, const HPoint& x) {
    if (std::abs(u) == 0.0) throw std::invalid_argument("u = 0: not parabolic");
    return std::acosh(1.0 + std::norm(u) / (2.0 * x.t * x.t));
}

std::pair<double, double> elliptic_delta_upper(int n, double rho) {
    if (n < 3) throw std::invalid_argument("order must be at least 3");
    const double sp = std::sin(std::numbers::pi / n);
    const double cp2 = 1.0 - sp * sp;
    const double ch = std::cosh(rho);
    const double c2max = (ch - cp2) / (sp * sp);
    const double s2sqmax = (ch - 1.0) * (ch + 1.0 - 2.0 * cp2) / (sp * sp * sp * sp);
    return {c2max, s2sqmax};
}

std::pair<double, double> order2_delta_upper(cplx beta, double rho) {
    if (std::abs(beta) <= kIdTol) {
        throw std::invalid_argument("parabolic: no axial bound");
    }
    return {4.0 * std::cosh(rho) / std::abs(beta), 4.0 * std::sinh(rho) / std::abs(beta)};
}

DisplacementBound joint_rho_lower(const GroupParams& gp) {
    const double p = std::abs(gp.beta_f + 4.0);
    const double q = std::abs(gp.beta_g + 4.0);
    const cplx bb = gp.beta_f * gp.beta_g;
    const double mm =
        2.0 * (std::abs(4.0 * gp.gamma + bb) + 4.0 * std::abs(gp.gamma) + std::abs(bb));
    const double M = p + q + std::sqrt(mm + (p - q) * (p - q));
    DisplacementBound b;
    b.rho_lower = safe_acosh(M / 8.0);
    b.attained_hint =
        "equality requires delta(f) = delta(g) = delta(f,g)/2 with the base "
        "point midway between the axes";
    return b;
}

double beta_upper_from_gamma(double t, double gamma_abs, double beta_f_plus4_abs) {
    const double den = 4.0 * t - beta_f_plus4_abs;
    if (den <= 0.0) throw std::invalid_argument("bound vacuous");
    return 4.0 * t - 4.0 * gamma_abs / den;
}

double min_t_from_beta(double beta_g_plus4_abs, double gamma_abs,
                       double beta_f_plus4_abs) {
    // Larger root of (4t - p)(4t - q) = 4|gamma| in t, p = |beta_f + 4|,
    // q = |beta_g + 4|.
    const double p = beta_f_plus4_abs;
    const double q = beta_g_plus4_abs;
    return (p + q + std::sqrt((p - q) * (p - q) + 16.0 * gamma_abs)) / 8.0;
}

}  // namespace margulis
