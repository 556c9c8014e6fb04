#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "contactgeo/contact_core.hpp"

namespace contactgeo {

/**
 * An evaluable immersion of an open box of R^{2n-1} into R^{2n} = C^n.
 * Ambient coordinate layout: slots 0..n-1 are the real parts, slots n..2n-1
 * the imaginary parts, so J acts as (x, y) -> (-y, x).
 *
 * `orient_hint`, when present, fixes the normal sign by sign(<N, hint(u)>);
 * otherwise the sign making det[T_1, ..., T_{2n-1}, N] positive is used.
 */
struct Chart {
    std::string name;
    int domain_dim;
    int ambient_dim;
    std::function<Vec(const Vec&)> eval;
    std::function<Vec(const Vec&)> orient_hint; // may be empty
};

/// Graph chart of the sphere S^{2n-1}(radius) near the pole on the last axis,
/// oriented outward.
Chart sphere_chart(int n, double radius);

/// Affine hyperplane {last coordinate = 0}.
Chart hyperplane_chart(int n);

/// S^1(radius) x R^{2n-2}, circle in the z_1-plane, oriented outward.
Chart cylinder_chart(int n, double radius);

/// Copy of the chart with the normal orientation reversed.
Chart flip_orientation(const Chart& chart);

/// Holomorphic graph curve w = F(z) in C^2, with derivatives supplied.
struct HolomorphicCurve {
    std::function<std::complex<double>(std::complex<double>)> f;
    std::function<std::complex<double>(std::complex<double>)> fp;
    std::function<std::complex<double>(std::complex<double>)> fpp;
};

/// F(z) = z^2 / 2.
HolomorphicCurve quadratic_graph_curve();

/// Osculating radius theta(z) = (1 + |F'|^2)^{3/2} / |F''|.
double osculating_radius(const HolomorphicCurve& curve, std::complex<double> z);

/**
 * Tube of radius r around the curve, parametrized by (x, y, s) with the
 * normal circle traversed at unit speed in s. Oriented outward (away from
 * the curve). Evaluation throws FocalRangeError where r >= 0.9 theta(z).
 */
Chart holomorphic_tube_chart(const HolomorphicCurve& curve, double r);

/// Per-sample extrinsic data of an immersed hypersurface point.
struct PointGeometry {
    Vec param;
    Vec position;
    Mat tangent;                  ///< 2n x (2n-1) raw central-difference partials
    Vec normal;
    Mat metric;                   ///< Gram matrix of the partials
    Mat shape;                    ///< symmetrized ambient shape operator (S X = -grad_X N)
    double shape_symmetry_defect; ///< pre-symmetrization skewness on TM
    double normal_tangency;       ///< max |<N, partial_i>|
    ContactStructure contact;
    ShapeData shape_data;         ///< alpha = <S xi, xi>, rho from the trace identity
};

/**
 * Central differences with stencil h for the frame and the Weingarten data.
 * Throws ChartSingularityError when the frame condition number exceeds 1e8.
 */
PointGeometry extrinsic_geometry(const Chart& chart, const Vec& u, double h);

/// Sampled box of chart parameters with per-node extrinsic data.
struct ImmersedPatch {
    Chart chart;
    int n;      ///< ambient complex dimension
    double h;   ///< stencil used per node
    Vec center;
    Vec spacing;                ///< per-axis grid spacing
    std::vector<int> shape;     ///< points per axis (odd, so the center is a node)
    std::vector<PointGeometry> points; ///< row-major over the grid

    int node_count() const;
    int flat_index(const std::vector<int>& mi) const;
    std::vector<int> multi_index(int flat) const;
    Vec node_param(const std::vector<int>& mi) const;
    bool is_interior(const std::vector<int>& mi, int margin = 1) const;
};

ImmersedPatch sample_patch(const Chart& chart, const Vec& center, const Vec& spacing,
                           const std::vector<int>& points_per_axis, double h);

/// One-form or two-form sampled on the patch grid, in chart components.
/// Two-form matrices are antisymmetric exactly (mirrored on construction).
struct FormField {
    int degree = 1;
    std::vector<Vec> one;
    std::vector<Mat> two;
};

FormField eta_field(const ImmersedPatch& patch);   ///< eta_i = <T_i, xi>
FormField omega_field(const ImmersedPatch& patch); ///< omega_ij = <J T_i, T_j>

/**
 * (d eta)_ij = partial_i eta_j - partial_j eta_i by central differences over
 * the grid. `h` must match the per-axis grid spacing (ParameterError
 * otherwise); nodes whose stencil leaves the grid raise BoundaryError.
 */
Mat exterior_derivative_oneform_at(const ImmersedPatch& patch, const FormField& field,
                                   const std::vector<int>& node, double h);

/// Same over every interior node, returned with the interior flat indices.
std::vector<std::pair<int, Mat>> exterior_derivative_oneform(const ImmersedPatch& patch,
                                                             const FormField& field, double h);

/// Components (d omega)_{ijk}, i<j<k, of the exterior derivative of a two-form.
std::vector<double> exterior_derivative_twoform_at(const ImmersedPatch& patch,
                                                   const FormField& field,
                                                   const std::vector<int>& node, double h);

/// Residuals of the round-sphere identities over a sampled patch.
struct SphereCheckResult {
    double xi_match;              ///< max || xi_fd + i z / r ||
    double shape_residual;        ///< max || S + (1/r) Id || on TM
    double contact_defect;        ///< with rho = -1/r
    double rho_variation;         ///< spread of the trace-recovered rho
    double deta_plus_2r_omega_rel;///< componentwise relative, vs max |omega|
    double domega_max;
    double dtrs_c_max;            ///< max |d(tr S)(v)| over C-directions
    bool dim2;                    ///< n = 2 criterion at every node (true when n > 2)
};

SphereCheckResult sphere_check(int n, double r, double h);

/// Residuals of the C^2 tube construction over a sampled patch.
struct C2TubeCheckResult {
    double pc_residual;     ///< max match defect vs (1/(theta-r), -1/(theta+r))
    double center_pc_upper; ///< larger C-principal curvature at z = 0
    double center_pc_lower; ///< smaller C-principal curvature at z = 0
    double contact_defect;  ///< with pointwise rho = r/(theta^2 - r^2)
    double rho_variation;   ///< spread of the trace-recovered rho over the patch
    bool dim2_all;
};

C2TubeCheckResult c2_tube_check(const HolomorphicCurve& curve, double r, double h);

} // namespace contactgeo
