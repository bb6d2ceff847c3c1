#pragma once

#include <string>
#include <utility>

#include "margulis/halfspace.hpp"
#include "margulis/mobius.hpp"

namespace margulis {

struct DisplacementBound {
    double rho_lower{0.0};
    std::string attained_hint;
};

// arccosh((cosh(2 delta) |beta| + |beta + 4|) / 4).  Throws
// std::invalid_argument("parabolic: use parabolic_displacement") for beta = 0.
double rho_from_beta_delta(cplx beta, double delta);

// Displacement of the parabolic z -> z + u at x: cosh h = 1 + |u|^2 / (2 t^2).
double parabolic_displacement(cplx u, const HPoint& x = kBasePoint);

// Upper bounds on the axial displacement of an order-n elliptic with
// displacement rho at the point:
//   cosh(2 delta) <= (cosh rho - cos^2(pi/n)) / sin^2(pi/n)
//   sinh^2(2 delta) <= (cosh rho - 1)(cosh rho + 1 - 2 cos^2(pi/n)) / sin^4(pi/n)
// Returns {cosh2delta_max, sinh2delta_sq_max}.  Requires n >= 3.
std::pair<double, double> elliptic_delta_upper(int n, double rho);

// Axial-displacement bounds in terms of |beta|:
//   cosh(2 delta) <= 4 cosh(rho) / |beta|,  sinh(2 delta) <= 4 sinh(rho) / |beta|
// (equality when the element has order 2).  Returns
// {cosh2delta_max, sinh2delta_max}.  Requires beta != 0.
std::pair<double, double> order2_delta_upper(cplx beta, double rho);

// Joint lower bound on rho = max(rho(f), rho(g)) at any point:
//   8 cosh(rho) >= p + q + sqrt(mm + (p - q)^2)
// with p = |beta_f + 4|, q = |beta_g + 4| and
// mm = 2 (|4 gamma + beta_f beta_g| + |4 gamma| + |beta_f beta_g|).
DisplacementBound joint_rho_lower(const GroupParams& p);

// |beta_g + 4| <= 4 t - 4 |gamma| / (4 t - |beta_f + 4|).  Requires
// 4 t > beta_f_plus4_abs, else throws ("bound vacuous").
double beta_upper_from_gamma(double t, double gamma_abs, double beta_f_plus4_abs);

// Inverse of the above: minimal t admitting a given |beta_g + 4|, i.e. the
// larger root of (4 t - p)(4 t - q) = 4 |gamma|.
double min_t_from_beta(double beta_g_plus4_abs, double gamma_abs,
                       double beta_f_plus4_abs);

// Guarded arccosh: arguments in [1 - 1e-12, 1] clamp to 1.
double safe_acosh(double x);

}  // namespace margulis
