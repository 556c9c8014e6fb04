#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contactgeo/contact_core.hpp"

namespace contactgeo {

/// Value and derivative at r of the scalar Jacobi equation f'' + kappa f = 0.
struct JacobiSolution {
    double value;
    double derivative;
};

/**
 * Closed form: trigonometric for kappa > 0, linear for kappa = 0,
 * hyperbolic for kappa < 0, with initial data f(0) = f0, f'(0) = f0p.
 */
JacobiSolution jacobi_solution(double kappa, double f0, double f0p, double r);

/// Classical fourth-order Runge-Kutta integration of the same equation,
/// global error O(step^4). Independent check of the closed forms.
JacobiSolution jacobi_ode_oracle(double kappa, double f0, double f0p, double r, double step);

/**
 * Shape-operator spectrum of the homogeneous contact hypersurfaces of the
 * quadric pair, realized at a single model point with A-principal N = e_0:
 * eigenvalue alpha on R JN, lambda = 0 on JV(A) cap C, mu = 2 rho on
 * V(A) cap C (multiplicities 1, n-1, n-1); alpha rho = -epsilon.
 */
struct PrincipalProfile {
    AmbientSpec ambient;
    int n;
    std::optional<double> r; ///< tube radius; absent for the horosphere
    double alpha;
    double lambda;
    double mu;
    double rho;
};

/**
 * Compact-quadric profile: rho = tan(sqrt2 r)/sqrt2, alpha = -sqrt2 cot(sqrt2 r),
 * mu = sqrt2 tan(sqrt2 r). Requires n >= 3 and 0 < r < pi/(2 sqrt2)
 * (FocalRangeError otherwise).
 */
PrincipalProfile tube_profile_theorem1(int n, double r);

/**
 * Dual-quadric profiles (epsilon = -1), case 1|2|3:
 *   1: rho = tanh(sqrt2 r)/sqrt2, alpha = sqrt2 coth(sqrt2 r)   (tube, r > 0)
 *   2: rho = 1/sqrt2, alpha = mu = sqrt2                        (horosphere)
 *   3: rho = coth(sqrt2 r)/sqrt2, alpha = sqrt2 tanh(sqrt2 r)   (tube, r > 0)
 */
PrincipalProfile tube_profile_theorem2(int case_id, int n, double r = 0.0);

/// Realizes the profile as (contact structure, shape operator) at N = e_0.
std::pair<ContactStructure, ShapeData> profile_shape_operator(const PrincipalProfile& p);

/// One core eigendirection: normal Jacobi eigenvalue along the geodesic and
/// the core principal curvature (initial data f(0) = 1, f'(0) = -s0).
struct CorePrincipalData {
    double kappa;
    double s0;
};

/**
 * All r in (0, r_max] where some core Jacobi factor vanishes, located by
 * sign bracketing (width 1e-3) and bisection to 1e-12. Sorted ascending.
 */
std::vector<double> focal_distances(const AmbientSpec& ambient,
                                    const std::vector<CorePrincipalData>& core_data,
                                    double r_max);

} // namespace contactgeo
