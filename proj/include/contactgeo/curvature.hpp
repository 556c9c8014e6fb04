#pragma once

#include <cstdint>

#include "contactgeo/model_frame.hpp"

namespace contactgeo {

/**
 * Curvature tensor of constant holomorphic sectional curvature c:
 *
 *   R(X,Y)Z = (c/4) ( <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY - 2<JX,Y>JZ ).
 *
 * Throws WrongAmbientError unless spec is CSF.
 */
Vec csf_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z);

/**
 * Curvature tensor of the quadric family: the CSF form at c = 4 normalization
 * plus the real-structure terms
 *
 *   <AY,Z>AX - <AX,Z>AY + <JAY,Z>JAX - <JAX,Z>JAY,
 *
 * all multiplied by epsilon (+1 compact, -1 noncompact dual).
 */
Vec quadric_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z);

/// Dispatch on the ambient kind.
Vec ambient_curvature(const AmbientSpec& spec, const Vec& x, const Vec& y, const Vec& z);

/**
 * Normal Jacobi operator R_N = R(., N)N assembled column by column.
 * N must be unit to 1e-12 (NormalizationError otherwise). The result is
 * symmetric and annihilates N.
 */
Mat normal_jacobi_operator(const AmbientSpec& spec, const Vec& n);

/**
 * Ricci operator via the Kaehler frame-pair sum
 * Ric(X) = sum_k R(e_k, J e_k) J X over the standard frame pairs.
 */
Mat ricci_operator(const AmbientSpec& spec);

/// Max residuals of the classical tensor identities over random trials.
struct CurvatureReport {
    double residual_pair_symmetry = 0.0;
    double residual_bianchi = 0.0;
    double residual_kahler_invariance = 0.0;
    double residual_skew = 0.0;
    int trials = 0;

    bool pass(double tol = 1e-12) const {
        return residual_pair_symmetry < tol && residual_bianchi < tol &&
               residual_kahler_invariance < tol && residual_skew < tol;
    }
};

/**
 * Random-quadruple self-test: pair symmetry <R(X,Y)Z,W> = <R(Z,W)X,Y>,
 * first Bianchi, Kaehler invariance R(JX,JY) = R(X,Y), and antisymmetry.
 */
CurvatureReport curvature_selftest(const AmbientSpec& spec, int trials, std::uint64_t seed = 0);

} // namespace contactgeo
