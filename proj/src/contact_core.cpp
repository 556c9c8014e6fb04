#include "contactgeo/contact_core.hpp"

#include <cmath>

namespace contactgeo {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kSymmetryTol = 1e-10;
constexpr double kContactPreTol = 1e-8;

Mat tangent_projector(const Vec& n) {
    const int d = static_cast<int>(n.size());
    return Mat::Identity(d, d) - n * n.transpose();
}

} // namespace

ContactStructure induce_contact_structure(const ModelFrame& frame, const Vec& n) {
    if (std::abs(n.norm() - 1.0) > kUnitTol)
        throw NormalizationError("induce_contact_structure: N must be a unit vector");

    ContactStructure cs;
    cs.N = n;
    cs.xi = -(frame.J() * n);
    const Mat p = tangent_projector(n);
    cs.phi = p * frame.J() * p;
    cs.tangent_basis = orthonormal_complement(frame, {n});
    cs.c_basis = orthonormal_complement(frame, {n, frame.J() * n});
    return cs;
}

ShapeData make_shape_data_with_rho(const ContactStructure& cs, const Mat& s_ambient, double rho) {
    const Mat& b = cs.tangent_basis;
    const Mat skew = b.transpose() * (s_ambient - s_ambient.transpose()) * b;
    if (operator_norm(skew) > kSymmetryTol)
        throw ParameterError("make_shape_data: S is not symmetric on TM");
    ShapeData sd;
    sd.S = s_ambient;
    sd.alpha = cs.xi.dot(s_ambient * cs.xi);
    sd.rho = rho;
    return sd;
}

ShapeData make_shape_data(const ContactStructure& cs, const Mat& s_ambient, int n) {
    ShapeData sd = make_shape_data_with_rho(cs, s_ambient, 0.0);
    sd.rho = contact_rho(sd, n);
    return sd;
}

double contact_defect(const ContactStructure& cs, const ShapeData& sd) {
    const Mat m = sd.S * cs.phi + cs.phi * sd.S - 2.0 * sd.rho * cs.phi;
    return operator_norm(cs.tangent_basis.transpose() * m * cs.tangent_basis);
}

HopfData hopf_data(const ContactStructure& cs, const ShapeData& sd) {
    const Vec sxi = sd.S * cs.xi;
    const double alpha = sxi.dot(cs.xi);
    return HopfData{alpha, (sxi - alpha * cs.xi).norm()};
}

double contact_rho(const ShapeData& sd, int n) {
    if (n < 2) throw InvalidDimensionError("contact_rho: n must be >= 2");
    return (sd.S.trace() - sd.alpha) / (2.0 * (n - 1));
}

double pairing_check(const ContactStructure& cs, const ShapeData& sd) {
    if (contact_defect(cs, sd) >= kContactPreTol)
        throw PreconditionError("pairing_check: data is not contact (defect >= 1e-8)");

    const Mat sc = cs.c_basis.transpose() * sd.S * cs.c_basis;
    Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (sc + sc.transpose()));
    double worst = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        const double lambda = eig.eigenvalues()(i);
        const Vec x = cs.c_basis * eig.eigenvectors().col(i);
        const Vec phix = cs.phi * x;
        worst = std::max(worst, (sd.S * phix - (2.0 * sd.rho - lambda) * phix).norm());
    }
    return worst;
}

double asquared_residual(const ContactStructure& cs, const ShapeData& sd,
                         const AmbientSpec& spec) {
    const Vec jn = spec.frame.J() * cs.N;
    const Mat pc = cs.c_basis * cs.c_basis.transpose();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < cs.c_basis.cols(); ++i) {
        const Vec x = cs.c_basis.col(i);
        const Vec sx = sd.S * x;
        const Vec lhs = 2.0 * (sd.S * sx - 2.0 * sd.rho * sx + sd.alpha * sd.rho * x);
        const Vec rhs = pc * ambient_curvature(spec, jn, cs.N, spec.frame.J() * x);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

TraceIdentityResiduals trace_identities(const ContactStructure& cs, const ShapeData& sd,
                                        const AmbientSpec& spec, int n) {
    const double tr_s = sd.S.trace();
    const double r1 = std::abs(tr_s - sd.alpha - 2.0 * (n - 1) * sd.rho);

    const Vec jn = spec.frame.J() * cs.N;
    const double ric_nn = (ricci_operator(spec) * cs.N).dot(cs.N);
    const double jacobi_jn = ambient_curvature(spec, jn, cs.N, cs.N).dot(jn);
    const double tr_s2 = (sd.S * sd.S).trace();
    const double expected = sd.alpha * sd.alpha +
                            2.0 * (n - 1) * sd.rho * (2.0 * sd.rho - sd.alpha) - ric_nn +
                            jacobi_jn;
    return TraceIdentityResiduals{r1, std::abs(tr_s2 - expected)};
}

bool dim2_contact_check(const ContactStructure& cs, const ShapeData& sd, double hopf_tol) {
    if (cs.N.size() != 4)
        throw InvalidDimensionError("dim2_contact_check: ambient complex dimension must be 2");
    const HopfData hopf = hopf_data(cs, sd);
    if (hopf.defect >= hopf_tol)
        throw PreconditionError("dim2_contact_check: data is not Hopf within tolerance");
    return std::abs(sd.S.trace() - hopf.alpha) > 1e-8;
}

} // namespace contactgeo
