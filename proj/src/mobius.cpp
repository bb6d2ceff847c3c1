#include "margulis/mobius.hpp"

#include <cmath>
#include <numbers>

namespace margulis {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Matrix2 Matrix2::inverse() const {
    const cplx dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

double Matrix2::frobenius() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

MoebiusMap::MoebiusMap(const Matrix2& m) { *this = normalize(m); }

MoebiusMap normalize(const Matrix2& m) {
    const cplx dt = m.det();
    if (!finite(dt) || std::abs(dt) < 1e-300) {
        throw std::invalid_argument("degenerate matrix");
    }
    cplx s = std::sqrt(1.0 / dt);
    // Deterministic representative: nonnegative real part, ties broken by
    // nonnegative imaginary part.
    if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
    return MoebiusMap{MoebiusMap::raw_t{}, {m.a * s, m.b * s, m.c * s, m.d * s}};
}

MoebiusMap MoebiusMap::inverse() const { return {raw_t{}, mat_.inverse()}; }

MoebiusMap MoebiusMap::operator*(const MoebiusMap& o) const {
    return {raw_t{}, mat_ * o.mat_};
}

cplx MoebiusMap::apply(cplx z) const {
    if (!finite(z)) {
        if (std::abs(mat_.c) == 0.0) return {INFINITY, 0.0};
        return mat_.a / mat_.c;
    }
    const cplx den = mat_.c * z + mat_.d;
    if (std::abs(den) == 0.0) return {INFINITY, 0.0};
    return (mat_.a * z + mat_.b) / den;
}

bool MoebiusMap::is_identity(double tol) const {
    const Matrix2 id{1.0, 0.0, 0.0, 1.0};
    return (mat_ - id).frobenius() <= tol || (mat_ - (-id)).frobenius() <= tol;
}

MoebiusMap MoebiusMap::dilation(cplx k) {
    const cplx s = std::sqrt(k);
    return MoebiusMap{{s, 0.0, 0.0, 1.0 / s}};
}

cplx beta(const MoebiusMap& f) {
    const cplx t = f.mat().trace();
    return t * t - 4.0;
}

cplx gamma(const MoebiusMap& f, const MoebiusMap& g) {
    const Matrix2& a = f.mat();
    const Matrix2& b = g.mat();
    const Matrix2 comm = a * b * a.inverse() * b.inverse();
    return comm.trace() - 2.0;
}

GroupParams params(const MoebiusMap& f, const MoebiusMap& g) {
    return {gamma(f, g), beta(f), beta(g)};
}

TauTheta translation_rotation(const MoebiusMap& f) {
    const cplx bt = beta(f);
    if (f.is_identity() || std::abs(bt) <= kIdTol) {
        throw std::invalid_argument("no translation/rotation decomposition");
    }
    const double tau = std::acosh(std::max(1.0, (std::abs(bt + 4.0) + std::abs(bt)) / 4.0));
    // Squared eigenvalue ratio k: beta = k + 1/k - 2, so
    // k = e^{2 tau + i theta} is the root of k^2 - (beta + 2) k + 1 = 0 with
    // |k| >= 1; theta = arg k in (-pi, pi].
    const cplx s = std::sqrt((bt + 4.0) * bt);
    cplx k = (bt + 2.0 + s) / 2.0;
    if (std::abs(k) < 1.0) k = (bt + 2.0 - s) / 2.0;
    double theta = std::arg(k);
    if (theta <= -kPi) theta = kPi;
    return {tau, theta};
}

double matrix_norm(const MoebiusMap& f) {
    return (f.mat() - f.mat().inverse()).frobenius();
}

ElementClass classify(const MoebiusMap& f) {
    ElementClass r;
    if (f.is_identity()) {
        r.kind = ElementKind::identity;
        return r;
    }
    const cplx bt = beta(f);
    if (std::abs(bt) <= kIdTol) {
        r.kind = ElementKind::parabolic;
        return r;
    }
    const TauTheta tt = translation_rotation(f);
    r.tau = tt.tau;
    r.theta = tt.theta;
    if (tt.tau <= kIdTol) {
        r.kind = ElementKind::elliptic;
        r.tau = 0.0;
        for (int n = 2; n <= kMaxEllipticOrder; ++n) {
            const double m = tt.theta * n / (2.0 * kPi);
            if (std::abs(m - std::round(m)) <= 1e-6 * n) {
                r.order = n;
                break;
            }
        }
    } else {
        r.kind = ElementKind::loxodromic;
    }
    return r;
}

cplx fricke_transform(const GroupParams& p, FrickeTransform which) {
    switch (which) {
        case FrickeTransform::power_g2:
            return p.gamma * (p.beta_g + 4.0);
        case FrickeTransform::conj_commutator:
            return p.gamma * (p.gamma - p.beta_f);
        case FrickeTransform::beta_fg_order2:
            if (std::abs(p.beta_f + 4.0) > kIdTol) {
                throw std::invalid_argument("identity not applicable");
            }
            return p.gamma - p.beta_g - 4.0;
        case FrickeTransform::tilde_f:
            if (std::abs(p.gamma) <= kIdTol) {
                throw std::invalid_argument("identity not applicable");
            }
            return p.beta_g - p.gamma;
    }
    throw std::invalid_argument("identity not applicable");
}

cplx beta_power2(cplx beta_g) { return beta_g * (beta_g + 4.0); }

}  // namespace margulis
