#include "contactgeo/curvature.hpp"

#include <cmath>

#include "contactgeo/sampling.hpp"

namespace contactgeo {

namespace {

// Kaehler curvature form at c = 4 normalization (without the c/4 factor).
Vec kahler_part(const Mat& j, const Vec& x, const Vec& y, const Vec& z) {
    const Vec jx = j * x;
    const Vec jy = j * y;
    const Vec jz = j * z;
    return y.dot(z) * x - x.dot(z) * y + jy.dot(z) * jx - jx.dot(z) * jy - 2.0 * jx.dot(y) * jz;
}

Vec real_structure_part(const Mat& j, const Mat& a, const Vec& x, const Vec& y, const Vec& z) {
    const Vec ax = a * x;
    const Vec ay = a * y;
    const Vec jax = j * ax;
    const Vec jay = j * ay;
    return ay.dot(z) * ax - ax.dot(z) * ay + jay.dot(z) * jax - jax.dot(z) * jay;
}

} // namespace

Vec csf_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z) {
    if (!spec.is_csf())
        throw WrongAmbientError("csf_curvature: spec is not a constant holomorphic "
                                "sectional curvature ambient");
    return (spec.c / 4.0) * kahler_part(spec.frame.J(), x, y, z);
}

Vec quadric_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z) {
    if (!spec.is_quadric())
        throw WrongAmbientError("quadric_curvature: spec is not a quadric ambient");
    const Mat& j = spec.frame.J();
    const Mat& a = spec.frame.A();
    return static_cast<double>(spec.epsilon) *
           (kahler_part(j, x, y, z) + real_structure_part(j, a, x, y, z));
}

Vec ambient_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z) {
    return spec.is_csf() ? csf_curvature(spec, x, y, z) : quadric_curvature(spec, x, y, z);
}

Mat normal_jacobi_operator(const AmbientSpec& spec, const Vec& n) {
    if (std::abs(n.norm() - 1.0) > 1e-12)
        throw NormalizationError("normal_jacobi_operator: N must be a unit vector");
    const int d = spec.frame.real_dim();
    Mat op(d, d);
    for (int k = 0; k < d; ++k) {
        Vec ek = Vec::Zero(d);
        ek(k) = 1.0;
        op.col(k) = ambient_curvature(spec, ek, n, n);
    }
    return op;
}

Mat ricci_operator(const AmbientSpec& spec) {
    const int n = spec.frame.complex_dim();
    const int d = 2 * n;
    const Mat& j = spec.frame.J();
    Mat ric(d, d);
    for (int col = 0; col < d; ++col) {
        Vec x = Vec::Zero(d);
        x(col) = 1.0;
        const Vec jx = j * x;
        Vec sum = Vec::Zero(d);
        for (int k = 0; k < n; ++k)
            sum += ambient_curvature(spec, spec.frame.e(k), spec.frame.Je(k), jx);
        ric.col(col) = sum;
    }
    return ric;
}

CurvatureReport curvature_selftest(const AmbientSpec& spec, int trials, std::uint64_t seed) {
    if (trials < 1) throw ParameterError("curvature_selftest: trials must be >= 1");
    const int d = spec.frame.real_dim();
    const Mat& j = spec.frame.J();
    VectorSampler sampler(seed);

    CurvatureReport report;
    report.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const Vec x = sampler.vector(d);
        const Vec y = sampler.vector(d);
        const Vec z = sampler.vector(d);
        const Vec w = sampler.vector(d);

        const Vec rxyz = ambient_curvature(spec, x, y, z);
        const double pair = std::abs(rxyz.dot(w) - ambient_curvature(spec, z, w, x).dot(y));
        const double bianchi = (rxyz + ambient_curvature(spec, y, z, x) +
                                ambient_curvature(spec, z, x, y))
                                   .norm();
        const double kahler = (ambient_curvature(spec, j * x, j * y, z) - rxyz).norm();
        const double skew = (ambient_curvature(spec, y, x, z) + rxyz).norm();

        report.residual_pair_symmetry = std::max(report.residual_pair_symmetry, pair);
        report.residual_bianchi = std::max(report.residual_bianchi, bianchi);
        report.residual_kahler_invariance = std::max(report.residual_kahler_invariance, kahler);
        report.residual_skew = std::max(report.residual_skew, skew);
    }
    return report;
}

} // namespace contactgeo
