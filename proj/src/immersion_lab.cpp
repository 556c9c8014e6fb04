#include "contactgeo/immersion_lab.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace contactgeo {

namespace {

constexpr double kConditionLimit = 1e8;

Vec realify(const std::complex<double>& a, const std::complex<double>& b) {
    Vec v(4);
    v << a.real(), b.real(), a.imag(), b.imag();
    return v;
}

Vec oriented_normal(const Chart& chart, const Vec& u, const Mat& tangent,
                    const ModelFrame& frame) {
    std::vector<Vec> cols;
    cols.reserve(tangent.cols());
    for (Eigen::Index i = 0; i < tangent.cols(); ++i) cols.push_back(tangent.col(i));
    Vec n = orthonormal_complement(frame, cols).col(0);

    if (chart.orient_hint) {
        if (chart.orient_hint(u).dot(n) < 0.0) n = -n;
        return n;
    }
    Mat square(chart.ambient_dim, chart.ambient_dim);
    square.leftCols(chart.domain_dim) = tangent;
    square.col(chart.ambient_dim - 1) = n;
    if (square.determinant() < 0.0) n = -n;
    return n;
}

Mat fd_tangent(const Chart& chart, const Vec& u, double h) {
    Mat t(chart.ambient_dim, chart.domain_dim);
    Vec up = u;
    for (int i = 0; i < chart.domain_dim; ++i) {
        up(i) = u(i) + h;
        const Vec fplus = chart.eval(up);
        up(i) = u(i) - h;
        const Vec fminus = chart.eval(up);
        up(i) = u(i);
        t.col(i) = (fplus - fminus) / (2.0 * h);
    }
    return t;
}

Mat antisymmetrize(const Mat& m) {
    Mat out = Mat::Zero(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            const double v = 0.5 * (m(i, j) - m(j, i));
            out(i, j) = v;
            out(j, i) = -v;
        }
    return out;
}

} // namespace

Chart sphere_chart(int n, double radius) {
    if (n < 2) throw InvalidDimensionError("sphere_chart: n must be >= 2");
    if (radius <= 0.0) throw ParameterError("sphere_chart: radius must be positive");
    const int d = 2 * n;
    Chart chart;
    chart.name = "sphere";
    chart.domain_dim = d - 1;
    chart.ambient_dim = d;
    chart.eval = [d, radius](const Vec& u) -> Vec {
        const double q = radius * radius - u.squaredNorm();
        if (q <= 0.0) throw ParameterError("sphere_chart: parameter outside the chart domain");
        Vec p(d);
        p.head(d - 1) = u;
        p(d - 1) = std::sqrt(q);
        return p;
    };
    auto eval = chart.eval;
    chart.orient_hint = [eval, radius](const Vec& u) { return Vec(eval(u) / radius); };
    return chart;
}

Chart hyperplane_chart(int n) {
    if (n < 2) throw InvalidDimensionError("hyperplane_chart: n must be >= 2");
    const int d = 2 * n;
    Chart chart;
    chart.name = "hyperplane";
    chart.domain_dim = d - 1;
    chart.ambient_dim = d;
    chart.eval = [d](const Vec& u) -> Vec {
        Vec p = Vec::Zero(d);
        p.head(d - 1) = u;
        return p;
    };
    chart.orient_hint = [d](const Vec&) {
        Vec hint = Vec::Zero(d);
        hint(d - 1) = 1.0;
        return hint;
    };
    return chart;
}

Chart cylinder_chart(int n, double radius) {
    if (n < 2) throw InvalidDimensionError("cylinder_chart: n must be >= 2");
    if (radius <= 0.0) throw ParameterError("cylinder_chart: radius must be positive");
    const int d = 2 * n;
    Chart chart;
    chart.name = "cylinder";
    chart.domain_dim = d - 1;
    chart.ambient_dim = d;
    // u(0) is arclength along the circle in the z_1-plane (slots 0 and n);
    // the remaining parameters fill the flat factor.
    chart.eval = [d, n, radius](const Vec& u) -> Vec {
        Vec p(d);
        p(0) = radius * std::cos(u(0) / radius);
        p(n) = radius * std::sin(u(0) / radius);
        int next = 1;
        for (int k = 1; k < n; ++k) p(k) = u(next++);
        for (int k = n + 1; k < d; ++k) p(k) = u(next++);
        return p;
    };
    chart.orient_hint = [d, n, radius](const Vec& u) {
        Vec hint = Vec::Zero(d);
        hint(0) = std::cos(u(0) / radius);
        hint(n) = std::sin(u(0) / radius);
        return hint;
    };
    return chart;
}

Chart flip_orientation(const Chart& chart) {
    if (!chart.orient_hint)
        throw ParameterError("flip_orientation: chart has no orientation hint");
    Chart flipped = chart;
    auto hint = chart.orient_hint;
    flipped.orient_hint = [hint](const Vec& u) { return Vec(-hint(u)); };
    flipped.name = chart.name + "-flipped";
    return flipped;
}

HolomorphicCurve quadratic_graph_curve() {
    return HolomorphicCurve{
        [](std::complex<double> z) { return 0.5 * z * z; },
        [](std::complex<double> z) { return z; },
        [](std::complex<double>) { return std::complex<double>(1.0, 0.0); },
    };
}

double osculating_radius(const HolomorphicCurve& curve, std::complex<double> z) {
    const double fpp = std::abs(curve.fpp(z));
    if (fpp < 1e-30) return std::numeric_limits<double>::infinity();
    return std::pow(1.0 + std::norm(curve.fp(z)), 1.5) / fpp;
}

Chart holomorphic_tube_chart(const HolomorphicCurve& curve, double r) {
    if (r <= 0.0) throw ParameterError("holomorphic_tube_chart: radius must be positive");
    Chart chart;
    chart.name = "holomorphic-tube";
    chart.domain_dim = 3;
    chart.ambient_dim = 4;

    auto circle_normal = [curve](std::complex<double> z, double s) {
        const std::complex<double> fp = curve.fp(z);
        const double denom = std::sqrt(1.0 + std::norm(fp));
        const std::complex<double> phase = std::polar(1.0, s);
        return std::make_pair(phase * (-std::conj(fp)) / denom, phase / denom);
    };

    chart.eval = [curve, r, circle_normal](const Vec& u) -> Vec {
        const std::complex<double> z(u(0), u(1));
        const double theta = osculating_radius(curve, z);
        if (r >= 0.9 * theta)
            throw FocalRangeError("holomorphic_tube_chart: radius within 0.9 of the focal "
                                  "distance at |z| = " + std::to_string(std::abs(z)));
        auto [n1, n2] = circle_normal(z, u(2));
        return realify(z + r * n1, curve.f(z) + r * n2);
    };
    chart.orient_hint = [circle_normal](const Vec& u) {
        auto [n1, n2] = circle_normal(std::complex<double>(u(0), u(1)), u(2));
        return realify(n1, n2);
    };
    return chart;
}

PointGeometry extrinsic_geometry(const Chart& chart, const Vec& u, double h) {
    if (h <= 0.0) throw ParameterError("extrinsic_geometry: h must be positive");
    const int n = chart.ambient_dim / 2;
    const ModelFrame frame = ModelFrame::standard(n, false);

    PointGeometry pg;
    pg.param = u;
    pg.position = chart.eval(u);
    pg.tangent = fd_tangent(chart, u, h);

    const Vec sv = Eigen::JacobiSVD<Mat>(pg.tangent).singularValues();
    if (sv(0) > kConditionLimit * sv(sv.size() - 1))
        throw ChartSingularityError("extrinsic_geometry: chart frame numerically singular");

    pg.normal = oriented_normal(chart, u, pg.tangent, frame);
    pg.metric = pg.tangent.transpose() * pg.tangent;
    pg.normal_tangency = (pg.tangent.transpose() * pg.normal).cwiseAbs().maxCoeff();

    // Weingarten data: difference the oriented normal along each chart axis.
    Mat dn(chart.ambient_dim, chart.domain_dim);
    Vec up = u;
    for (int i = 0; i < chart.domain_dim; ++i) {
        up(i) = u(i) + h;
        const Vec nplus = oriented_normal(chart, up, fd_tangent(chart, up, h), frame);
        up(i) = u(i) - h;
        const Vec nminus = oriented_normal(chart, up, fd_tangent(chart, up, h), frame);
        up(i) = u(i);
        dn.col(i) = (nplus - nminus) / (2.0 * h);
    }
    const Mat s_raw = -dn * pg.metric.ldlt().solve(pg.tangent.transpose()).eval();

    pg.contact = induce_contact_structure(frame, pg.normal);
    const Mat& b = pg.contact.tangent_basis;
    pg.shape_symmetry_defect = operator_norm(b.transpose() * (s_raw - s_raw.transpose()) * b);

    const Mat proj = Mat::Identity(chart.ambient_dim, chart.ambient_dim) -
                     pg.normal * pg.normal.transpose();
    pg.shape = proj * (0.5 * (s_raw + s_raw.transpose())) * proj;
    pg.shape_data = make_shape_data(pg.contact, pg.shape, n);
    return pg;
}

int ImmersedPatch::node_count() const {
    int total = 1;
    for (int s : shape) total *= s;
    return total;
}

int ImmersedPatch::flat_index(const std::vector<int>& mi) const {
    int idx = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) idx = idx * shape[a] + mi[a];
    return idx;
}

std::vector<int> ImmersedPatch::multi_index(int flat) const {
    std::vector<int> mi(shape.size());
    for (int a = static_cast<int>(shape.size()) - 1; a >= 0; --a) {
        mi[a] = flat % shape[a];
        flat /= shape[a];
    }
    return mi;
}

Vec ImmersedPatch::node_param(const std::vector<int>& mi) const {
    Vec u = center;
    for (std::size_t a = 0; a < shape.size(); ++a)
        u(a) += spacing(a) * (mi[a] - (shape[a] - 1) / 2);
    return u;
}

bool ImmersedPatch::is_interior(const std::vector<int>& mi, int margin) const {
    for (std::size_t a = 0; a < shape.size(); ++a)
        if (mi[a] < margin || mi[a] >= shape[a] - margin) return false;
    return true;
}

ImmersedPatch sample_patch(const Chart& chart, const Vec& center, const Vec& spacing,
                           const std::vector<int>& points_per_axis, double h) {
    if (static_cast<int>(points_per_axis.size()) != chart.domain_dim ||
        spacing.size() != chart.domain_dim || center.size() != chart.domain_dim)
        throw ParameterError("sample_patch: grid dimensions do not match the chart");
    for (int p : points_per_axis)
        if (p < 1 || p % 2 == 0)
            throw ParameterError("sample_patch: points per axis must be odd and positive");

    ImmersedPatch patch;
    patch.chart = chart;
    patch.n = chart.ambient_dim / 2;
    patch.h = h;
    patch.center = center;
    patch.spacing = spacing;
    patch.shape = points_per_axis;

    const int total = patch.node_count();
    patch.points.reserve(total);
    for (int flat = 0; flat < total; ++flat)
        patch.points.push_back(extrinsic_geometry(chart, patch.node_param(patch.multi_index(flat)), h));
    return patch;
}

FormField eta_field(const ImmersedPatch& patch) {
    FormField field;
    field.degree = 1;
    field.one.reserve(patch.points.size());
    for (const PointGeometry& pg : patch.points)
        field.one.push_back(pg.tangent.transpose() * pg.contact.xi);
    return field;
}

FormField omega_field(const ImmersedPatch& patch) {
    const Mat j = ModelFrame::standard(patch.n, false).J();
    FormField field;
    field.degree = 2;
    field.two.reserve(patch.points.size());
    for (const PointGeometry& pg : patch.points)
        field.two.push_back(antisymmetrize(pg.tangent.transpose() * j.transpose() * pg.tangent));
    return field;
}

namespace {

void check_uniform_spacing(const ImmersedPatch& patch, double h) {
    for (Eigen::Index a = 0; a < patch.spacing.size(); ++a)
        if (std::abs(patch.spacing(a) - h) > 1e-12)
            throw ParameterError("exterior derivative: h must equal the grid spacing");
}

// field value of component j at the node offset by +/-1 along axis a
double one_form_neighbor(const ImmersedPatch& patch, const FormField& field,
                         std::vector<int> mi, int axis, int dir, int j) {
    mi[axis] += dir;
    return field.one[patch.flat_index(mi)](j);
}

double two_form_neighbor(const ImmersedPatch& patch, const FormField& field,
                         std::vector<int> mi, int axis, int dir, int i, int j) {
    mi[axis] += dir;
    return field.two[patch.flat_index(mi)](i, j);
}

} // namespace

Mat exterior_derivative_oneform_at(const ImmersedPatch& patch, const FormField& field,
                                   const std::vector<int>& node, double h) {
    if (field.degree != 1)
        throw ParameterError("exterior_derivative_oneform_at: one-form required");
    check_uniform_spacing(patch, h);
    if (!patch.is_interior(node))
        throw BoundaryError("exterior_derivative_oneform_at: stencil leaves the grid");

    const int k = static_cast<int>(patch.shape.size());
    Mat grad(k, k); // grad(a, j) = d_a eta_j
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < k; ++j)
            grad(a, j) = (one_form_neighbor(patch, field, node, a, +1, j) -
                          one_form_neighbor(patch, field, node, a, -1, j)) /
                         (2.0 * h);
    // (d eta)_ij = grad(i,j) - grad(j,i); entrywise subtraction is exactly
    // antisymmetric in IEEE arithmetic.
    return grad - grad.transpose();
}

std::vector<std::pair<int, Mat>> exterior_derivative_oneform(const ImmersedPatch& patch,
                                                             const FormField& field, double h) {
    std::vector<std::pair<int, Mat>> out;
    for (int flat = 0; flat < patch.node_count(); ++flat) {
        const std::vector<int> mi = patch.multi_index(flat);
        if (!patch.is_interior(mi)) continue;
        out.emplace_back(flat, exterior_derivative_oneform_at(patch, field, mi, h));
    }
    return out;
}

std::vector<double> exterior_derivative_twoform_at(const ImmersedPatch& patch,
                                                   const FormField& field,
                                                   const std::vector<int>& node, double h) {
    if (field.degree != 2)
        throw ParameterError("exterior_derivative_twoform_at: two-form required");
    check_uniform_spacing(patch, h);
    if (!patch.is_interior(node))
        throw BoundaryError("exterior_derivative_twoform_at: stencil leaves the grid");

    const int k = static_cast<int>(patch.shape.size());
    auto partial = [&](int axis, int i, int j) {
        return (two_form_neighbor(patch, field, node, axis, +1, i, j) -
                two_form_neighbor(patch, field, node, axis, -1, i, j)) /
               (2.0 * h);
    };
    std::vector<double> comps;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                comps.push_back(partial(a, b, c) - partial(b, a, c) + partial(c, a, b));
    return comps;
}

SphereCheckResult sphere_check(int n, double r, double h) {
    if (n < 2) throw InvalidDimensionError("sphere_check: n must be >= 2");
    if (r <= 0.0 || h <= 0.0) throw ParameterError("sphere_check: r and h must be positive");

    const Chart chart = sphere_chart(n, r);
    const int k = 2 * n - 1;
    const int pts = (n <= 3) ? 5 : 3;

    // Form derivatives live on a grid whose spacing follows the stencil, so
    // every discretization length halves with h. Pointwise fields that are
    // compared ACROSS the patch (rho constancy, d tr S) need a patch of fixed
    // extent instead: on the h-coupled grid their truncation variation sinks
    // below the rounding floor.
    const double field_spacing = 2.0 * h;
    const ImmersedPatch field_patch = sample_patch(
        chart, Vec::Zero(k), Vec::Constant(k, field_spacing), std::vector<int>(k, pts), h);
    const double wide_spacing = 0.15 * r;
    const ImmersedPatch wide_patch = sample_patch(
        chart, Vec::Zero(k), Vec::Constant(k, wide_spacing), std::vector<int>(k, pts), h);

    SphereCheckResult res{};
    res.dim2 = true;

    for (const PointGeometry& pg : field_patch.points) {
        Vec xi_expected(2 * n);
        xi_expected.head(n) = pg.position.tail(n) / r;
        xi_expected.tail(n) = -pg.position.head(n) / r;
        res.xi_match = std::max(res.xi_match, (pg.contact.xi - xi_expected).norm());

        const Mat& b = pg.contact.tangent_basis;
        const Mat s_tm = b.transpose() * pg.shape * b;
        res.shape_residual =
            std::max(res.shape_residual, operator_norm(s_tm + Mat::Identity(k, k) / r));

        const ShapeData sd_fixed = make_shape_data_with_rho(pg.contact, pg.shape, -1.0 / r);
        res.contact_defect = std::max(res.contact_defect, contact_defect(pg.contact, sd_fixed));

        if (n == 2)
            res.dim2 = res.dim2 && dim2_contact_check(pg.contact, pg.shape_data, 1e-4);
    }

    const FormField eta = eta_field(field_patch);
    const FormField omega = omega_field(field_patch);
    double deta_abs = 0.0;
    double omega_abs = 0.0;
    for (int flat = 0; flat < field_patch.node_count(); ++flat) {
        const std::vector<int> mi = field_patch.multi_index(flat);
        if (!field_patch.is_interior(mi)) continue;

        const Mat deta = exterior_derivative_oneform_at(field_patch, eta, mi, field_spacing);
        deta_abs =
            std::max(deta_abs, (deta + (2.0 / r) * omega.two[flat]).cwiseAbs().maxCoeff());
        omega_abs = std::max(omega_abs, omega.two[flat].cwiseAbs().maxCoeff());

        for (double c : exterior_derivative_twoform_at(field_patch, omega, mi, field_spacing))
            res.domega_max = std::max(res.domega_max, std::abs(c));
    }
    res.deta_plus_2r_omega_rel = deta_abs / omega_abs;

    double rho_min = std::numeric_limits<double>::infinity();
    double rho_max = -std::numeric_limits<double>::infinity();
    std::vector<double> trace_field(wide_patch.points.size());
    for (std::size_t idx = 0; idx < wide_patch.points.size(); ++idx) {
        const PointGeometry& pg = wide_patch.points[idx];
        rho_min = std::min(rho_min, pg.shape_data.rho);
        rho_max = std::max(rho_max, pg.shape_data.rho);
        trace_field[idx] = pg.shape.trace();
    }
    res.rho_variation = rho_max - rho_min;

    for (int flat = 0; flat < wide_patch.node_count(); ++flat) {
        const std::vector<int> mi = wide_patch.multi_index(flat);
        if (!wide_patch.is_interior(mi)) continue;
        const PointGeometry& pg = wide_patch.points[flat];
        Vec grad(k);
        for (int a = 0; a < k; ++a) {
            std::vector<int> mp = mi;
            std::vector<int> mm = mi;
            mp[a] += 1;
            mm[a] -= 1;
            grad(a) = (trace_field[wide_patch.flat_index(mp)] -
                       trace_field[wide_patch.flat_index(mm)]) /
                      (2.0 * wide_spacing);
        }
        for (Eigen::Index col = 0; col < pg.contact.c_basis.cols(); ++col) {
            const Vec coeff =
                pg.metric.ldlt().solve(pg.tangent.transpose() * pg.contact.c_basis.col(col));
            res.dtrs_c_max = std::max(res.dtrs_c_max, std::abs(grad.dot(coeff)));
        }
    }
    return res;
}

C2TubeCheckResult c2_tube_check(const HolomorphicCurve& curve, double r, double h) {
    if (r <= 0.0 || h <= 0.0) throw ParameterError("c2_tube_check: r and h must be positive");

    const Chart chart = holomorphic_tube_chart(curve, r);
    Vec spacing(3);
    spacing << 0.105, 0.105, 2.0 * M_PI / 5.0;
    const ImmersedPatch patch =
        sample_patch(chart, Vec::Zero(3), spacing, std::vector<int>{5, 5, 5}, h);

    C2TubeCheckResult res{};
    res.dim2_all = true;
    double rho_min = std::numeric_limits<double>::infinity();
    double rho_max = -std::numeric_limits<double>::infinity();

    for (int flat = 0; flat < patch.node_count(); ++flat) {
        const PointGeometry& pg = patch.points[flat];
        const std::complex<double> z(pg.param(0), pg.param(1));
        const double theta = osculating_radius(curve, z);

        const Mat sc = pg.contact.c_basis.transpose() * pg.shape * pg.contact.c_basis;
        Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (sc + sc.transpose()));
        const double lo = eig.eigenvalues()(0);
        const double hi = eig.eigenvalues()(1);
        const double expected_hi = 1.0 / (theta - r);
        const double expected_lo = -1.0 / (theta + r);
        res.pc_residual = std::max(
            res.pc_residual, std::max(std::abs(hi - expected_hi), std::abs(lo - expected_lo)));

        const double rho_exact = r / (theta * theta - r * r);
        const ShapeData sd_fixed = make_shape_data_with_rho(pg.contact, pg.shape, rho_exact);
        res.contact_defect = std::max(res.contact_defect, contact_defect(pg.contact, sd_fixed));

        rho_min = std::min(rho_min, pg.shape_data.rho);
        rho_max = std::max(rho_max, pg.shape_data.rho);
        res.dim2_all = res.dim2_all && dim2_contact_check(pg.contact, pg.shape_data, 1e-4);

        const std::vector<int> mi = patch.multi_index(flat);
        if (mi[0] == 2 && mi[1] == 2 && mi[2] == 2) {
            res.center_pc_upper = hi;
            res.center_pc_lower = lo;
        }
    }
    res.rho_variation = rho_max - rho_min;
    return res;
}

} // namespace contactgeo
