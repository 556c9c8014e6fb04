#pragma once

#include "contactgeo/model_frame.hpp"

namespace contactgeo {

/**
 * Decomposition of a unit tangent vector N of the quadric against the circle
 * of real structures: N = cos(t) Z1 + sin(t) J Z2 with t in [0, pi/4] and
 * orthonormal Z1, Z2 in V(A_adapted), where A_adapted maximizes <A_s N, N>
 * over the circle.
 */
struct NormalDecomposition {
    Mat A_adapted;      ///< maximizing real structure
    double t;           ///< angle in [0, pi/4]; <A_adapted N, N> = cos(2t)
    Vec z1;             ///< unit, in V(A_adapted)
    Vec z2;             ///< unit, in V(A_adapted), orthogonal to z1
    bool z2_arbitrary;  ///< true near t = 0, where any completion works
};

enum class SingularClass { APrincipal, AIsotropic, Generic };

struct SingularType {
    SingularClass cls;
    double t;
};

/**
 * Adapted decomposition of a unit N. The maximizer is found in closed form:
 * s* = atan2(<JAN,N>, <AN,N>), then t = arccos(<A_s* N, N>)/2.
 */
NormalDecomposition adapted_decomposition(const ModelFrame& frame, const Vec& n);

/// APrincipal iff t < tol_t; AIsotropic iff |t - pi/4| < tol_t; Generic(t) otherwise.
SingularType classify_normal(const ModelFrame& frame, const Vec& n, double tol_t = 1e-8);

/**
 * || R_N(JN) - <R_N(JN), JN> JN ||, the off-JN part of the normal Jacobi
 * operator applied to JN. Equals |sin(4t)| for the quadric pair.
 */
double jn_eigen_defect(const AmbientSpec& spec, const Vec& n);

} // namespace contactgeo
