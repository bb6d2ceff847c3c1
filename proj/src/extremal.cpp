#include "margulis/extremal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "margulis/cases.hpp"
#include "margulis/constants.hpp"

namespace margulis {

namespace {

// Rotation by angle theta about the geodesic with endpoints -1, 1 (the unit
// semicircle through j): conjugate of the vertical-axis rotation by the map
// sending (-1, 1) to (infinity, 0).
MoebiusMap horizontal_rotation(double theta) {
    const Matrix2 cayley{1.0, -1.0, 1.0, 1.0};
    const cplx e = std::polar(1.0, theta / 2.0);
    const Matrix2 rot{e, 0.0, 0.0, std::conj(e)};
    return normalize(cayley.inverse() * rot * cayley);
}

// The same rotation about the axis with endpoints -h, h (top point at height
// h = e^s above the origin).
MoebiusMap rotation_at_height(double theta, double s) {
    const MoebiusMap dil = MoebiusMap::dilation(std::exp(s));
    return dil * horizontal_rotation(theta) * dil.inverse();
}

// Splits the axis-separation budget so both generators displace j equally:
// solves cosh(2u) |b_f| + |b_f + 4| = cosh(2(s - u)) |b_g| + |b_g + 4| for
// the f-side share u, where b = -4 sin^2(pi/n) for an order-n elliptic.
double balanced_split(int nf, int ng, double budget) {
    const auto beta_abs = [](int n) {
        const double sn = std::sin(std::numbers::pi / n);
        return 4.0 * sn * sn;
    };
    const double bf = beta_abs(nf), bg = beta_abs(ng);
    double lo = 0.0, hi = budget;
    for (int i = 0; i < 200; ++i) {
        const double u = (lo + hi) / 2.0;
        const double lhs = std::cosh(2.0 * u) * bf + (4.0 - bf);
        const double rhs = std::cosh(2.0 * (budget - u)) * bg + (4.0 - bg);
        (lhs < rhs ? lo : hi) = u;
    }
    return (lo + hi) / 2.0;
}

ExtremalConfig two_elliptic_config(int nf, int ng, double budget, double claimed) {
    const double u = balanced_split(nf, ng, budget);
    const double v = budget - u;
    ExtremalConfig cfg;
    cfg.f = rotation_at_height(2.0 * std::numbers::pi / nf, u);
    cfg.g = rotation_at_height(2.0 * std::numbers::pi / ng, -v);
    cfg.witness = kBasePoint;
    cfg.claimed = claimed;
    cfg.kind = ExtremalKind::elliptic_sharp;
    cfg.n = nf;
    return cfg;
}

}  // namespace

ExtremalConfig extremal_elliptic_config(int n) {
    if (n < 3) throw std::invalid_argument("order must be at least 3");
    return two_elliptic_config(n, 2, b(n) / 2.0, d(n));
}

ExtremalConfig extremal_n6_joint_config() {
    const double budget = 0.5 * std::acosh(5.0 / 3.0);
    ExtremalConfig cfg = two_elliptic_config(6, 3, budget, std::acosh(17.0 / 16.0));
    return cfg;
}

ExtremalConfig modular_pair() {
    const double r = 1.0 / std::sqrt(2.0);
    ExtremalConfig cfg;
    cfg.f = MoebiusMap::translation(r);
    cfg.g = MoebiusMap{{0.0, r, -std::sqrt(2.0), 0.0}};
    cfg.witness = kBasePoint;
    cfg.claimed = std::acosh(5.0 / 4.0);
    cfg.kind = ExtremalKind::parabolic_modular;
    return cfg;
}

bool verify_equality(const ExtremalConfig& cfg, std::uint64_t seed) {
    const double rho_f = hyp_distance(apply(cfg.f, cfg.witness), cfg.witness);
    const double rho_g = hyp_distance(apply(cfg.g, cfg.witness), cfg.witness);
    if (std::abs(rho_f - rho_g) > 1e-6) return false;
    if (std::abs(std::max(rho_f, rho_g) - cfg.claimed) > 1e-6) return false;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        // Probe points within hyperbolic distance ~0.5 of the witness.
        const HPoint x{cfg.witness.z + 0.25 * cplx(unit(rng), unit(rng)),
                       cfg.witness.t * std::exp(0.25 * unit(rng))};
        const double m = std::max(hyp_distance(apply(cfg.f, x), x),
                                  hyp_distance(apply(cfg.g, x), x));
        if (m < cfg.claimed - 1e-6) return false;
    }
    return true;
}

std::string extremal_record(const ExtremalConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[extremal]\n";
    if (cfg.kind == ExtremalKind::parabolic_modular) {
        out << "name = modular-pair\n";
    } else {
        out << "name = elliptic-sharp-" << cfg.n << '\n';
    }
    const auto put = [&](const char* key, const Matrix2& m) {
        out << key << " = " << m.a.real() << ' ' << m.a.imag() << ' '
            << m.b.real() << ' ' << m.b.imag() << ' ' << m.c.real() << ' '
            << m.c.imag() << ' ' << m.d.real() << ' ' << m.d.imag() << '\n';
    };
    put("f", cfg.f.mat());
    put("g", cfg.g.mat());
    out << "witness = " << cfg.witness.z.real() << ' ' << cfg.witness.z.imag()
        << ' ' << cfg.witness.t << '\n';
    out << "claimed = " << cfg.claimed << '\n';
    return out.str();
}

}  // namespace margulis
