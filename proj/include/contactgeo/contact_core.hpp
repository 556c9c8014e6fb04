#pragma once

#include "contactgeo/curvature.hpp"
#include "contactgeo/model_frame.hpp"

namespace contactgeo {

/**
 * Almost contact metric structure induced on the hyperplane TM = N-perp by
 * a unit normal N: Reeb vector xi = -J N, dual one-form eta(X) = <X, xi>,
 * phi = tangential part of J, fundamental two-form omega(X,Y) = <phi X, Y>.
 *
 * Operators are stored as ambient endomorphisms that annihilate N and map
 * TM to itself.
 */
struct ContactStructure {
    Vec N;              ///< unit normal
    Vec xi;             ///< -J N
    Mat phi;            ///< (I - N N^T) J (I - N N^T)
    Mat tangent_basis;  ///< 2n x (2n-1), orthonormal basis of TM
    Mat c_basis;        ///< 2n x (2n-2), orthonormal basis of C = ker(eta)

    double eta(const Vec& x) const { return x.dot(xi); }
    double omega(const Vec& x, const Vec& y) const { return (phi * x).dot(y); }
};

/// Builds the induced structure. N must be unit to 1e-12.
ContactStructure induce_contact_structure(const ModelFrame& frame, const Vec& n);

/// Shape operator data at the point, convention S X = -grad_X N.
struct ShapeData {
    Mat S;        ///< ambient endomorphism, symmetric on TM, annihilates N
    double rho;   ///< contact constant
    double alpha; ///< Reeb principal curvature <S xi, xi>
};

/**
 * ShapeData with alpha = <S xi, xi> and rho recovered from the trace identity
 * tr S = alpha + 2(n-1) rho. S must be symmetric to 1e-10 on TM.
 */
ShapeData make_shape_data(const ContactStructure& cs, const Mat& s_ambient, int n);

/// Same, but with rho imposed by the caller.
ShapeData make_shape_data_with_rho(const ContactStructure& cs, const Mat& s_ambient, double rho);

/// Operator norm of S phi + phi S - 2 rho phi on TM; zero iff the contact
/// equation holds with the stored rho at this point.
double contact_defect(const ContactStructure& cs, const ShapeData& sd);

struct HopfData {
    double alpha;  ///< <S xi, xi>
    double defect; ///< ||S xi - alpha xi||
};

HopfData hopf_data(const ContactStructure& cs, const ShapeData& sd);

/// The unique rho consistent with tr S = alpha + 2(n-1) rho.
double contact_rho(const ShapeData& sd, int n);

/**
 * For each eigenpair (lambda, X) of S compressed to C, the residual
 * ||S phi X - (2 rho - lambda) phi X||, maximized over the eigenbasis.
 * Requires contact_defect < 1e-8 (PreconditionError otherwise).
 */
double pairing_check(const ContactStructure& cs, const ShapeData& sd);

/**
 * Max over an orthonormal basis X of C of
 * || 2 (S^2 - 2 rho S + alpha rho) X - (R(JN,N)JX)_C ||,
 * where (.)_C is the orthogonal projection onto C.
 */
double asquared_residual(const ContactStructure& cs, const ShapeData& sd, const AmbientSpec& spec);

struct TraceIdentityResiduals {
    double mean_curvature; ///< | tr S - alpha - 2(n-1) rho |
    double square_norm;    ///< | tr S^2 - (alpha^2 + 2(n-1)rho(2rho-alpha) - Ric(N,N) + <R(JN,N)N,JN>) |
};

TraceIdentityResiduals trace_identities(const ContactStructure& cs, const ShapeData& sd,
                                        const AmbientSpec& spec, int n);

/**
 * Pointwise n = 2 contact criterion: true iff |tr S - alpha| > 1e-8.
 * Requires ambient complex dimension 2 (WrongDimensionError via
 * InvalidDimensionError otherwise) and Hopf defect below hopf_tol
 * (PreconditionError). Finite-difference data needs a looser hopf_tol
 * than the default.
 */
bool dim2_contact_check(const ContactStructure& cs, const ShapeData& sd, double hopf_tol = 1e-8);

} // namespace contactgeo
