#include "margulis/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace margulis {

namespace {

constexpr double kPi = std::numbers::pi;

double clamped_acosh(double x) { return std::acosh(std::max(1.0, x)); }

// Sphere point for polar coordinates: theta in [0, pi] from the pole that
// stereographic projection sends to 0, phi the longitude.
BoundaryPoint sphere_point(double theta, double phi) {
    if (theta >= kPi - 1e-12) return BoundaryPoint::infinity();
    const double r = std::tan(theta / 2.0);
    return BoundaryPoint::finite(std::polar(r, phi));
}

}  // namespace

double hyp_distance(const HPoint& x, const HPoint& y) {
    const double dz = std::norm(x.z - y.z) + (x.t - y.t) * (x.t - y.t);
    return clamped_acosh(1.0 + dz / (2.0 * x.t * y.t));
}

double chordal(const BoundaryPoint& z, const BoundaryPoint& w) {
    if (z.infinite && w.infinite) return 0.0;
    if (z.infinite) return 2.0 / std::sqrt(1.0 + std::norm(w.value));
    if (w.infinite) return 2.0 / std::sqrt(1.0 + std::norm(z.value));
    return 2.0 * std::abs(z.value - w.value) /
           std::sqrt((1.0 + std::norm(z.value)) * (1.0 + std::norm(w.value)));
}

BoundaryPoint apply(const MoebiusMap& f, const BoundaryPoint& z) {
    const Matrix2& m = f.mat();
    if (z.infinite) {
        if (std::abs(m.c) == 0.0) return BoundaryPoint::infinity();
        return BoundaryPoint::finite(m.a / m.c);
    }
    const cplx den = m.c * z.value + m.d;
    if (std::abs(den) == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::finite((m.a * z.value + m.b) / den);
}

HPoint apply(const MoebiusMap& f, const HPoint& x) {
    const Matrix2& m = f.mat();
    const cplx num = m.a * x.z + m.b;
    const cplx den = m.c * x.z + m.d;
    const double D = std::norm(den) + std::norm(m.c) * x.t * x.t;
    return {(num * std::conj(den) + m.a * std::conj(m.c) * x.t * x.t) / D,
            x.t / D};
}

double chordal_norm(const MoebiusMap& f) {
    const auto displacement = [&](double theta, double phi) {
        const BoundaryPoint z = sphere_point(theta, phi);
        return chordal(apply(f, z), z);
    };
    // Coarse grid.
    double best = 0.0, bt = 0.0, bp = 0.0;
    const int nt = 64, np = 128;
    for (int i = 0; i <= nt; ++i) {
        const double theta = kPi * i / nt;
        for (int k = 0; k < np; ++k) {
            const double phi = 2.0 * kPi * k / np;
            const double v = displacement(theta, phi);
            if (v > best) {
                best = v;
                bt = theta;
                bp = phi;
            }
        }
    }
    // Shrinking-step local refinement.
    double h = kPi / nt;
    for (int step = 0; step < 40; ++step) {
        bool improved = false;
        for (int dt = -1; dt <= 1; ++dt) {
            for (int dp = -1; dp <= 1; ++dp) {
                if (dt == 0 && dp == 0) continue;
                const double t2 = std::clamp(bt + dt * h, 0.0, kPi);
                const double p2 = bp + dp * h;
                const double v = displacement(t2, p2);
                if (v > best) {
                    best = v;
                    bt = t2;
                    bp = p2;
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.5;
    }
    return best;
}

double hyperbolic_norm(const MoebiusMap& f) {
    return hyp_distance(apply(f, kBasePoint), kBasePoint);
}

Geodesic axis(const MoebiusMap& f) {
    const cplx bt = beta(f);
    if (f.is_identity() || std::abs(bt) <= kIdTol) {
        throw std::invalid_argument("no axis");
    }
    const Matrix2& m = f.mat();
    BoundaryPoint p, q;
    if (std::abs(m.c) <= 1e-14) {
        p = BoundaryPoint::infinity();
        q = BoundaryPoint::finite(m.b / (m.d - m.a));
    } else {
        const cplx s = std::sqrt(bt);
        p = BoundaryPoint::finite((m.a - m.d + s) / (2.0 * m.c));
        q = BoundaryPoint::finite((m.a - m.d - s) / (2.0 * m.c));
    }
    // Orient loxodromics with q attracting (|f'(q)| < 1); elliptics keep the
    // root order.
    const auto deriv_mag = [&](const BoundaryPoint& z) {
        if (z.infinite) return std::abs(m.c) == 0.0 ? 1.0 / std::norm(m.a) : INFINITY;
        return 1.0 / std::norm(m.c * z.value + m.d);
    };
    if (deriv_mag(q) > deriv_mag(p)) std::swap(p, q);
    return {p, q};
}

double delta_from_j(const Geodesic& L) {
    const double q = chordal(L.p, L.q);
    if (q <= 0.0) throw std::invalid_argument("degenerate geodesic");
    const double c2 = (8.0 - q * q) / (q * q);
    return 0.5 * clamped_acosh(c2);
}

double delta_point_axis(const HPoint& x, const MoebiusMap& f) {
    const Geodesic L = axis(f);
    // Conjugating isometry sending x to j: z -> (z - z_x) / t_x.
    const double s = std::sqrt(x.t);
    const MoebiusMap phi{{cplx{1.0 / s}, -x.z / s, cplx{0.0}, cplx{s}}};
    return delta_from_j({apply(phi, L.p), apply(phi, L.q)});
}

double axes_distance_params(const GroupParams& p) {
    if (std::abs(p.beta_f) <= kIdTol || std::abs(p.beta_g) <= kIdTol) {
        throw std::invalid_argument("parabolic parameter: no axis");
    }
    const cplx bb = p.beta_f * p.beta_g;
    const double expr =
        (std::abs(4.0 * p.gamma + bb) + 4.0 * std::abs(p.gamma) + std::abs(bb)) /
            std::abs(bb) -
        1.0;
    return 0.5 * clamped_acosh(expr);
}

}  // namespace margulis
