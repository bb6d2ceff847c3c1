#pragma once

#include <string>
#include <utility>
#include <vector>

namespace margulis {

// Marker for n = infinity in the constant table.
inline constexpr int kInf = -1;

// Collision constant c(n) for elliptics of order n (kInf for the parabolic
// case).  Closed forms for n != 5; c(5) is defined as arccosh(solve_t(5)).
double c(int n);

// Axis-distance coefficient table: (1+sqrt 5)/4, (1+sqrt 3)/4, 1/2, 1/2,
// then cos^2(pi/n) - 1/2 for n >= 7.
double psi(int n);

// Minimal axis distance: b(n) = arccosh(psi(n) / sin^2(pi/n)).
double b(int n);

// phi(t, n) = t (t - cos^2(pi/n)) + (t - 1) sqrt((t + 1)(t + 1 - 2 cos^2(pi/n))),
// strictly increasing in t >= 1.
double phi(double t, int n);

// Unique root of phi(t, n) = psi(n) on [1, 10], by bisection (200 iterations).
double solve_t(int n);

// d(n) = c(n) except d(6) = arccosh(6 - sqrt 24).
double d(int n);

// Yamada's constant for the loxodromic-free case, = 0.2629...
double yamada_cF();

// Both closed forms of c(3) (arccosh form, 2-arcsinh form); they agree to
// 1e-12.
std::pair<double, double> c3_alternative_identity();

struct ConstantTable {
    int n{3};  // kInf for infinity
    double c_n{0.0};
    double d_n{0.0};
    double psi_n{0.0};
    double b_n{0.0};
    double t_n{0.0};
};

ConstantTable constant_table(int n);

// Optional high-precision recomputation (50 significant digits) of the
// acceptance constants, returned as decimal strings:
// {c3, c4, c5, c6, cinf, cF, d6}.
std::vector<std::pair<std::string, std::string>> high_precision_table();

}  // namespace margulis
