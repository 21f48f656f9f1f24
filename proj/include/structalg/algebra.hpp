#pragma once

#include <string>

#include "structalg/linalg.hpp"

namespace structalg {

/// Finite-dimensional unital algebra with involution over Q(i).
///
/// table[i][j] holds the coordinates of e_i * e_j in the basis {e_k}.
/// sigma is the involution matrix in the column convention used project-wide:
/// M[i][j] is the coefficient of e_i in the image of e_j.
struct AlgebraWithInvolution {
    int dim = 0;
    int unit_index = 0;
    std::vector<std::vector<Vec>> table;  // table[i][j] = coords of e_i e_j
    Mat sigma;
    std::string label;

    Vec basis_vector(int i) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec involve(const Vec& x) const;

    /// Left multiplication operator L_x (column convention).
    Mat left_op(const Vec& x) const;
    /// Right multiplication operator R_x.
    Mat right_op(const Vec& x) const;
    /// T_x(z) = xz + zx - z*sigma(x).
    Mat t_op(const Vec& x) const;
    /// V_{x,y}(z) = (x sigma(y)) z + (z sigma(y)) x - (z sigma(x)) y.
    Mat v_op(const Vec& x, const Vec& y) const;

    /// Validates table shape, unit behaviour, and sigma being an involutive
    /// anti-automorphism; throws DimensionMismatch/ParseError on failure.
    void validate() const;
};

using Algebra = AlgebraWithInvolution;

/// Value of the 36-term structurable defect ID(x,y,z,t); zero for all inputs
/// exactly when the algebra is structurable.
Vec id_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t);

/// Checks ID on all dim^4 basis quadruples.
bool is_structurable(const Algebra& a);

/// Eigenspace split of the involution: H = fix(sigma), S = anti-fix(sigma).
struct HSSplit {
    Mat hermitian;       // RREF basis of the +1 eigenspace
    Mat skew_hermitian;  // RREF basis of the -1 eigenspace
};
HSSplit hs_split(const Algebra& a);

}  // namespace structalg
