#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "contactgeo/errors.hpp"

namespace contactgeo {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Largest singular value.
double operator_norm(const Mat& m);

/**
 * Point model of one tangent space of the ambient space: R^{2n} with the
 * standard inner product, a complex structure J, and (for quadric ambients)
 * a real structure A with A J = -J A.
 *
 * Basis convention: e_0..e_{n-1} span V(A), the (+1)-eigenspace of A, and
 * the vectors J e_k occupy slots n..2n-1, spanning the (-1)-eigenspace.
 * All values are immutable after construction.
 */
class ModelFrame {
public:
    /// Standard frame: J e_k = e_{n+k}, J e_{n+k} = -e_k; A fixes e_k and
    /// negates e_{n+k} when requested. Throws InvalidDimensionError for n < 2.
    static ModelFrame standard(int n, bool with_real_structure);

    int complex_dim() const { return n_; }
    int real_dim() const { return 2 * n_; }

    const Mat& J() const { return J_; }

    bool has_real_structure() const { return A_.has_value(); }

    /// Base real structure. Throws NoRealStructureError if absent.
    const Mat& A() const;

    /// A_s = cos(s) A + sin(s) (J A), the circle of real structures through A.
    Mat rotated_real_structure(double s) const;

    /// Copy of this frame carrying `a` as its real structure. The candidate
    /// must satisfy all real-structure invariants (checked to 1e-12).
    ModelFrame with_real_structure(const Mat& a) const;

    Vec e(int k) const;   ///< e_k for k in [0, n)
    Vec Je(int k) const;  ///< J e_k = e_{n+k}

    Mat v_basis() const;   ///< columns e_0..e_{n-1} (V(A))
    Mat jv_basis() const;  ///< columns e_n..e_{2n-1} (J V(A))

private:
    ModelFrame(int n, Mat j, std::optional<Mat> a);
    void validate() const;

    int n_;
    Mat J_;
    std::optional<Mat> A_;
};

/// Twice-iterated Gram-Schmidt on the columns (assumed independent).
Mat orthonormalize(const Mat& columns);

/**
 * Orthonormal basis of the orthogonal complement of span(vectors), returned
 * as columns. Inputs must be independent: if the smallest singular value of
 * the input matrix is below 1e-10, DegenerateInputError is thrown.
 */
Mat orthonormal_complement(const ModelFrame& frame, const std::vector<Vec>& vectors);

/// Which curvature tensor applies on the frame.
struct AmbientSpec {
    enum class Kind { ConstantHolSectional, Quadric };

    Kind kind;
    double c = 0.0;    ///< holomorphic sectional curvature (CSF kind only)
    int epsilon = 0;   ///< +1 compact quadric, -1 noncompact dual (quadric kind only)
    ModelFrame frame;

    /// CSF ambient; the frame must not carry a real structure.
    static AmbientSpec csf(ModelFrame frame, double c);

    /// Quadric ambient with sign epsilon in {+1, -1}; the frame must carry A.
    static AmbientSpec quadric(ModelFrame frame, int epsilon);

    bool is_csf() const { return kind == Kind::ConstantHolSectional; }
    bool is_quadric() const { return kind == Kind::Quadric; }
};

} // namespace contactgeo
