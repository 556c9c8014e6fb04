#include "contactgeo/model_frame.hpp"

#include <cmath>
#include <utility>

namespace contactgeo {

namespace {

constexpr double kStructureTol = 1e-12;
constexpr double kDependenceTol = 1e-10;

} // namespace

double operator_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

ModelFrame::ModelFrame(int n, Mat j, std::optional<Mat> a)
    : n_(n), J_(std::move(j)), A_(std::move(a)) {
    validate();
}

ModelFrame ModelFrame::standard(int n, bool with_real_structure) {
    if (n < 2) {
        throw InvalidDimensionError("make_model_frame: complex dimension must be >= 2, got " +
                                    std::to_string(n));
    }
    const int d = 2 * n;
    Mat j = Mat::Zero(d, d);
    j.block(n, 0, n, n) = Mat::Identity(n, n);
    j.block(0, n, n, n) = -Mat::Identity(n, n);

    std::optional<Mat> a;
    if (with_real_structure) {
        Mat am = Mat::Identity(d, d);
        am.block(n, n, n, n) = -Mat::Identity(n, n);
        a = am;
    }
    return ModelFrame(n, std::move(j), std::move(a));
}

void ModelFrame::validate() const {
    const int d = 2 * n_;
    const Mat id = Mat::Identity(d, d);
    if (operator_norm(J_ * J_ + id) > kStructureTol)
        throw ParameterError("ModelFrame: J*J != -Id");
    if (operator_norm(J_.transpose() * J_ - id) > kStructureTol)
        throw ParameterError("ModelFrame: J is not an isometry");
    if (A_) {
        const Mat& a = *A_;
        if (operator_norm(a * a - id) > kStructureTol)
            throw ParameterError("ModelFrame: A*A != Id");
        if (operator_norm(a - a.transpose()) > kStructureTol)
            throw ParameterError("ModelFrame: A is not symmetric");
        if (operator_norm(a * J_ + J_ * a) > kStructureTol)
            throw ParameterError("ModelFrame: A does not anticommute with J");
    }
}

const Mat& ModelFrame::A() const {
    if (!A_) throw NoRealStructureError("ModelFrame: no real structure present");
    return *A_;
}

Mat ModelFrame::rotated_real_structure(double s) const {
    const Mat& a = A();
    return std::cos(s) * a + std::sin(s) * (J_ * a);
}

ModelFrame ModelFrame::with_real_structure(const Mat& a) const {
    return ModelFrame(n_, J_, a);
}

Vec ModelFrame::e(int k) const {
    Vec v = Vec::Zero(2 * n_);
    v(k) = 1.0;
    return v;
}

Vec ModelFrame::Je(int k) const {
    Vec v = Vec::Zero(2 * n_);
    v(n_ + k) = 1.0;
    return v;
}

Mat ModelFrame::v_basis() const {
    Mat b = Mat::Zero(2 * n_, n_);
    b.topRows(n_) = Mat::Identity(n_, n_);
    return b;
}

Mat ModelFrame::jv_basis() const {
    Mat b = Mat::Zero(2 * n_, n_);
    b.bottomRows(n_) = Mat::Identity(n_, n_);
    return b;
}

Mat orthonormalize(const Mat& columns) {
    Mat q(columns.rows(), columns.cols());
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        Vec v = columns.col(j);
        // Two projection passes keep orthogonality at machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < j; ++i) v -= q.col(i).dot(v) * q.col(i);
        }
        const double norm = v.norm();
        if (norm < kDependenceTol)
            throw DegenerateInputError("orthonormalize: columns numerically dependent");
        q.col(j) = v / norm;
    }
    return q;
}

Mat orthonormal_complement(const ModelFrame& frame, const std::vector<Vec>& vectors) {
    const int d = frame.real_dim();
    const int k = static_cast<int>(vectors.size());
    if (k == 0) return Mat::Identity(d, d);
    if (k > d) throw DegenerateInputError("orthonormal_complement: more vectors than dimensions");

    Mat input(d, k);
    for (int j = 0; j < k; ++j) {
        if (vectors[j].size() != d)
            throw ParameterError("orthonormal_complement: vector dimension mismatch");
        input.col(j) = vectors[j];
    }
    const Vec sv = Eigen::JacobiSVD<Mat>(input).singularValues();
    if (sv(sv.size() - 1) < kDependenceTol)
        throw DegenerateInputError(
            "orthonormal_complement: input nearly dependent (sigma_min = " +
            std::to_string(sv(sv.size() - 1)) + ")");

    Mat q = orthonormalize(input);

    // Extend by rank-revealing Gram-Schmidt over the standard basis: always
    // absorb the coordinate direction with the largest residual.
    Mat full(d, d);
    full.leftCols(k) = q;
    int have = k;
    while (have < d) {
        int best = -1;
        double best_norm = -1.0;
        Vec best_v;
        for (int c = 0; c < d; ++c) {
            Vec v = Vec::Zero(d);
            v(c) = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i < have; ++i) v -= full.col(i).dot(v) * full.col(i);
            }
            const double nrm = v.norm();
            if (nrm > best_norm) {
                best_norm = nrm;
                best = c;
                best_v = v;
            }
        }
        (void)best;
        full.col(have) = best_v / best_norm;
        ++have;
    }
    return full.rightCols(d - k);
}

AmbientSpec AmbientSpec::csf(ModelFrame frame, double c) {
    if (frame.has_real_structure())
        throw WrongAmbientError("AmbientSpec::csf: frame carries a real structure");
    AmbientSpec spec{Kind::ConstantHolSectional, c, 0, std::move(frame)};
    return spec;
}

AmbientSpec AmbientSpec::quadric(ModelFrame frame, int epsilon) {
    if (!frame.has_real_structure())
        throw NoRealStructureError("AmbientSpec::quadric: frame has no real structure");
    if (epsilon != 1 && epsilon != -1)
        throw ParameterError("AmbientSpec::quadric: epsilon must be +1 or -1");
    AmbientSpec spec{Kind::Quadric, 0.0, epsilon, std::move(frame)};
    return spec;
}

} // namespace contactgeo
