#pragma once

#include "margulis/mobius.hpp"

namespace margulis {

// Point (z, t) in the upper half-space model, t > 0.  The base point is
// j = (0, 1).
struct HPoint {
    cplx z{0.0};
    double t{1.0};
};

inline constexpr HPoint kBasePoint{cplx{0.0, 0.0}, 1.0};

// Point on the boundary sphere: a finite complex number or infinity.
struct BoundaryPoint {
    cplx value{0.0};
    bool infinite{false};

    static BoundaryPoint finite(cplx z) { return {z, false}; }
    static BoundaryPoint infinity() { return {cplx{0.0}, true}; }
};

// Hyperbolic line given by its two distinct boundary endpoints.
struct Geodesic {
    BoundaryPoint p;
    BoundaryPoint q;
};

// cosh h(x, y) = 1 + (|z_x - z_y|^2 + (t_x - t_y)^2) / (2 t_x t_y).
double hyp_distance(const HPoint& x, const HPoint& y);

// Chordal metric, q(z, w) = 2|z - w| / sqrt((1 + |z|^2)(1 + |w|^2)),
// q(z, inf) = 2 / sqrt(1 + |z|^2).  Values lie in [0, 2].
double chordal(const BoundaryPoint& z, const BoundaryPoint& w);

// Boundary action of f, with explicit infinity handling.
BoundaryPoint apply(const MoebiusMap& f, const BoundaryPoint& z);

// Poincare extension of f to the upper half-space.
HPoint apply(const MoebiusMap& f, const HPoint& x);

// d(f) = sup over the boundary sphere of q(f(z), z), by sphere grid search
// plus local refinement.
double chordal_norm(const MoebiusMap& f);

// rho(f) = h(f(j), j).
double hyperbolic_norm(const MoebiusMap& f);

// Axis of a nonparabolic, non-identity element: the geodesic joining its two
// fixed points.  Throws std::invalid_argument("no axis") otherwise.
Geodesic axis(const MoebiusMap& f);

// h(j, L) in closed form: cosh(2 delta) = (8 - q^2) / q^2 with q the chordal
// distance between the endpoints of L.
double delta_from_j(const Geodesic& L);

// h(x, ax(f)): conjugates x to j by an explicit isometry and applies
// delta_from_j.  Throws for parabolic/identity f.
double delta_point_axis(const HPoint& x, const MoebiusMap& f);

// delta(f,g) = distance between the axes of f and g, from the parameters:
//   2 (cosh(2 delta(f,g)) + 1) |b_f b_g| = 2 (|4 c + b_f b_g| + |4 c| + |b_f b_g|).
// Requires beta_f != 0 and beta_g != 0; throws otherwise.
double axes_distance_params(const GroupParams& p);

}  // namespace margulis
