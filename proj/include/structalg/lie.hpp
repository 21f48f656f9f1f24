#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "structalg/constructions.hpp"

namespace structalg {

/// Triples (i, j, k), i < j < k, on which the Jacobi identity fails.
std::vector<std::array<int, 3>> jacobi_defects(const LieAlgebra& lie);
bool check_jacobi(const LieAlgebra& lie);

/// Span of all brackets [u, v], u in U, v in V (RREF rows).
Mat sub_bracket_span(const LieAlgebra& lie, const Mat& u, const Mat& v);

/// Derived series of the span of `start` (defaults to the whole algebra);
/// the chain stops when it stabilizes or reaches zero.
std::vector<Mat> derived_series(const LieAlgebra& lie, const Mat& start = {});

/// Lower central series of the span of `start` inside the whole algebra.
std::vector<Mat> lower_central_series(const LieAlgebra& lie, const Mat& start);

bool is_perfect(const LieAlgebra& lie);

Mat ad_matrix(const LieAlgebra& lie, const Vec& x);
Mat killing_form(const LieAlgebra& lie);

/// Solvable radical: Killing-orthogonal complement of the derived algebra.
Mat radical(const LieAlgebra& lie);

/// Structure constants of the sub-Lie-algebra spanned by `basis`; throws
/// F0NotClosed if the span is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& lie, const Mat& basis);

/// Smallest ideal containing `seed`.
Mat ideal_closure(const LieAlgebra& lie, const Vec& seed);

/// Rank: dim minus the maximal rank of ad(x) over a fixed sweep of sample
/// elements x = sum k^i b_i, k in {1, 2, 3, 5, 7}.
int lie_rank(const LieAlgebra& lie);

/// Decomposition of a semisimple Lie algebra into simple ideals, each given
/// by a basis in the input coordinates.
std::vector<Mat> decompose_semisimple(const LieAlgebra& lie);

struct SimpleComponent {
    int dim = 0;
    int rank = 0;
    std::string label;  // "sl2", "sl3", or "unknown"

    bool operator==(const SimpleComponent&) const = default;
    auto key() const { return std::tie(dim, rank, label); }
};

/// Profile of the semisimple part spanned by s_basis, sorted.
std::vector<SimpleComponent> semisimple_profile(const LieAlgebra& lie, const Mat& s_basis);

/// True iff r_basis spans the radical, s_basis is bracket-closed, they meet
/// trivially, their dimensions sum to dim, and the Killing form restricted to
/// s_basis is nondegenerate.
bool levi_verify(const LieAlgebra& lie, const Mat& s_basis, const Mat& r_basis);

struct LeviReport {
    bool jacobi_ok = false;
    bool perfect = false;
    int radical_dim = 0;
    bool radical_abelian = false;
    int radical_nilindex = 0;  // length of the lower central series to zero
    Mat radical_basis;
    Mat levi_basis;  // a Killing-orthogonal complement closed under bracket
    std::vector<SimpleComponent> levi_profile;
};

/// Full analysis: Jacobi, perfectness, radical, a Levi complement (verified
/// bracket-closed and semisimple), and the simple-component profile.
LeviReport analyze_lie(const LieAlgebra& lie);

}  // namespace structalg
