#include "contactgeo/singular_normals.hpp"

#include <cmath>

#include "contactgeo/curvature.hpp"

namespace contactgeo {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kComponentTol = 1e-8; // below this, a component is treated as absent

double clamp_unit(double x) {
    // 1e-14 slack absorbs rounding before the arccos.
    if (x > 1.0 && x < 1.0 + 1e-14) return 1.0;
    if (x < -1.0 && x > -1.0 - 1e-14) return -1.0;
    return std::min(1.0, std::max(-1.0, x));
}

} // namespace

NormalDecomposition adapted_decomposition(const ModelFrame& frame, const Vec& n) {
    if (std::abs(n.norm() - 1.0) > kUnitTol)
        throw NormalizationError("adapted_decomposition: N must be a unit vector");

    const Mat& a = frame.A();
    const Mat& j = frame.J();

    // <A_s N, N> = cos(s) <AN,N> + sin(s) <JAN,N> has amplitude
    // sqrt(<AN,N>^2 + <JAN,N>^2) attained at s* = atan2(<JAN,N>, <AN,N>).
    const double ca = (a * n).dot(n);
    const double sa = (j * a * n).dot(n);
    const double s_star = std::atan2(sa, ca);

    NormalDecomposition dec;
    dec.A_adapted = frame.rotated_real_structure(s_star);
    const double cos2t = clamp_unit((dec.A_adapted * n).dot(n));
    dec.t = 0.5 * std::acos(cos2t);

    // N + A N = 2 cos(t) Z1 never vanishes for t <= pi/4.
    dec.z1 = (n + dec.A_adapted * n).normalized();

    const Vec w = -(j * (n - dec.A_adapted * n)); // = 2 sin(t) Z2
    if (w.norm() > kComponentTol) {
        dec.z2 = w.normalized();
        dec.z2_arbitrary = false;
    } else {
        // Any unit vector of V(A_adapted) orthogonal to Z1 completes the
        // decomposition; pick a deterministic one by projecting complement
        // candidates into V(A_adapted) with (I + A)/2.
        const Mat comp = orthonormal_complement(frame, {dec.z1, j * dec.z1});
        Vec pick;
        for (Eigen::Index i = 0; i < comp.cols(); ++i) {
            Vec cand = 0.5 * (comp.col(i) + dec.A_adapted * comp.col(i));
            if (cand.norm() >= 0.5) {
                pick = cand;
                break;
            }
        }
        dec.z2 = pick.normalized();
        dec.z2_arbitrary = true;
    }
    return dec;
}

SingularType classify_normal(const ModelFrame& frame, const Vec& n, double tol_t) {
    const NormalDecomposition dec = adapted_decomposition(frame, n);
    if (dec.t < tol_t) return SingularType{SingularClass::APrincipal, dec.t};
    if (std::abs(dec.t - M_PI / 4.0) < tol_t) return SingularType{SingularClass::AIsotropic, dec.t};
    return SingularType{SingularClass::Generic, dec.t};
}

double jn_eigen_defect(const AmbientSpec& spec, const Vec& n) {
    if (!spec.is_quadric())
        throw WrongAmbientError("jn_eigen_defect: quadric ambient required");
    const Vec jn = spec.frame.J() * n;
    const Vec rjn = ambient_curvature(spec, jn, n, n);
    return (rjn - rjn.dot(jn) * jn).norm();
}

} // namespace contactgeo
