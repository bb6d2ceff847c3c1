#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

namespace margulis {

using cplx = std::complex<double>;

// Tolerance for identity/parabolic detection on |beta| and on the matrix
// distance to +-I.
inline constexpr double kIdTol = 1e-9;

// Cap for elliptic order detection.
inline constexpr int kMaxEllipticOrder = 2000;

// 2x2 complex matrix, row-major [a b; c d].
struct Matrix2 {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    Matrix2 inverse() const;
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator-() const { return {-a, -b, -c, -d}; }
    Matrix2 operator-(const Matrix2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    // Entrywise root-sum-square norm.
    double frobenius() const;
};

// Moebius transformation as a unit-determinant matrix.  The representative
// is fixed by taking the square root of 1/det with nonnegative real part
// (nonnegative imaginary part on ties); all exported quantities are
// invariant under negation anyway.
class MoebiusMap {
public:
    MoebiusMap() = default;
    explicit MoebiusMap(const Matrix2& m);

    const Matrix2& mat() const { return mat_; }

    MoebiusMap inverse() const;
    MoebiusMap operator*(const MoebiusMap& o) const;

    // Action on the extended complex plane.  A non-finite input is treated
    // as the point at infinity; the result may itself be non-finite.
    cplx apply(cplx z) const;

    bool is_identity(double tol = kIdTol) const;

    static MoebiusMap identity() { return MoebiusMap{}; }
    static MoebiusMap translation(cplx u) { return MoebiusMap{{1.0, u, 0.0, 1.0}}; }
    // z -> k z, k != 0.
    static MoebiusMap dilation(cplx k);

private:
    struct raw_t {};
    MoebiusMap(raw_t, const Matrix2& m) : mat_(m) {}
    friend MoebiusMap normalize(const Matrix2& m);

    Matrix2 mat_{};
};

// Element classification per the tau/theta decomposition.
enum class ElementKind { identity, parabolic, elliptic, loxodromic };

struct ElementClass {
    ElementKind kind{ElementKind::identity};
    double tau{0.0};
    double theta{0.0};
    // Smallest n <= kMaxEllipticOrder with n*theta = 0 mod 2*pi, when elliptic.
    std::optional<int> order;
};

MoebiusMap normalize(const Matrix2& m);

// beta(f) = tr^2(f) - 4.
cplx beta(const MoebiusMap& f);

// gamma(f,g) = tr([f,g]) - 2 with [f,g] = f g f^-1 g^-1.
cplx gamma(const MoebiusMap& f, const MoebiusMap& g);

struct GroupParams {
    cplx gamma{0.0};
    cplx beta_f{0.0};
    cplx beta_g{0.0};
};

GroupParams params(const MoebiusMap& f, const MoebiusMap& g);

// Translation length and rotation angle: 4 cosh(tau) = |beta+4| + |beta|,
// 4 cos(theta) = |beta+4| - |beta|.  theta is the argument of the squared
// eigenvalue ratio mapped into (-pi, pi].
// Throws for parabolic or identity input.
struct TauTheta {
    double tau;
    double theta;
};
TauTheta translation_rotation(const MoebiusMap& f);

// m(f) = ||A - A^-1||.
double matrix_norm(const MoebiusMap& f);

ElementClass classify(const MoebiusMap& f);

// Trace-parameter identities used to push constraints between words in the
// group generated by f and g.
enum class FrickeTransform {
    power_g2,         // gamma(f, g^2)   = gamma (beta_g + 4)
    conj_commutator,  // gamma(f, gfg^-1) = gamma (gamma - beta_f)
    beta_fg_order2,   // beta(fg)        = gamma - beta_g - 4   (requires beta_f = -4)
    tilde_f,          // gamma(ftilde, g) = beta_g - gamma       (requires gamma != 0)
};

cplx fricke_transform(const GroupParams& p, FrickeTransform which);

// beta(g^2) = beta_g (beta_g + 4), the companion identity of power_g2.
cplx beta_power2(cplx beta_g);

}  // namespace margulis
