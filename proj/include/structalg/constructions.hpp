#pragma once

#include <string>
#include <vector>

#include "structalg/algebra.hpp"

namespace structalg {

/// A finite-dimensional Lie algebra given by its full bracket table:
/// bracket[i][j] holds the coordinates of [b_i, b_j].
struct LieAlgebra {
    int dim = 0;
    std::vector<int> grades;                 // empty when ungraded
    std::vector<std::vector<Vec>> bracket;   // full antisymmetric table
    std::vector<Mat> degree_zero_basis;      // operator realization, when built

    Vec apply(const Vec& x, const Vec& y) const;
};

/// The conservative algebra C(A): x ⋆ y = T_x(y), same unit.
/// Returned as a plain algebra with identity involution (the involution plays
/// no further role downstream).
Algebra allison_hein(const Algebra& a);

/// The four operator transforms used by the 5-graded construction.
struct OperatorTransforms {
    Mat delta;      // E + R_{sigma(E(e1))}
    Mat epsilon;    // E - T_{E(e1) + sigma(E(e1))}
    Mat eps_delta;  // (E^epsilon)^delta
    Mat bar;        // sigma E sigma
};
OperatorTransforms operator_transforms(const Algebra& a, const Mat& e);

/// Basis of the inner-structure operator algebra: the commutator closure of
/// {V_{x,y}} together with {L_s L_r} for skew elements.  Prefers the named
/// generator basis {T_{e_i}} (optionally extended by the elementary map
/// e3 -> e2) when it spans the same space.
std::vector<Mat> instr(const Algebra& a);

/// The 5-graded Lie algebra F(A) with index layout
/// F1 (dim A) | F2 (dim S) | F0 | F-1 (dim A) | F-2 (dim S).
/// Throws F0NotClosed if the degree-zero basis fails to absorb a product.
LieAlgebra ak_construct(const Algebra& a);

}  // namespace structalg
