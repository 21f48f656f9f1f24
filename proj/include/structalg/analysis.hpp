#pragma once

#include <optional>
#include <string>
#include <vector>

#include "structalg/algebra.hpp"
#include "structalg/expr.hpp"

namespace structalg {

/// Derivations D with D(xy) = D(x)y + xD(y); with `bar` set, additionally
/// D∘sigma = sigma∘D.  The ambient space is dim^2 flattened row-major.
Subspace derivation_algebra(const Algebra& a, bool bar);

/// A parametric matrix family (entries are expressions in the parameters)
/// together with the sample parameter assignments used for verification.
struct MatrixFamily {
    std::vector<std::string> params;
    std::vector<std::vector<std::string>> entries;  // matrix of expressions
    std::vector<ExprEnv> samples;
    bool require_involution = false;

    Mat instantiate(const ExprEnv& env) const;
};

/// Verifies every sample of the family as an (involutive) automorphism of a.
/// Throws SingularSample when an instantiated sample is singular.
bool verify_automorphism_family(const Algebra& a, const MatrixFamily& family);

/// The eight degree-2 words, in the fixed project-wide order:
///   xy, yx, bar(x)y, x bar(y), bar(y)x, y bar(x), bar(xy), bar(yx).
constexpr int kIdentityWords = 8;

/// Nullspace of {f(e_i, e_j) = 0 for all i,j} in the 8-dim coefficient space.
Subspace functional_identity_space(const Algebra& a);

/// Evaluates the combination with the given 8 coefficients at (x, y).
Vec identity_value(const Algebra& a, const Vec& coeffs, const Vec& x, const Vec& y);

struct SubspaceChecks {
    bool is_subalgebra = false;
    bool is_left_ideal = false;
    bool is_right_ideal = false;
    bool is_ideal = false;
    bool is_bar_closed = false;
};

SubspaceChecks subspace_checks(const Algebra& a, const Mat& basis);

/// All k-dimensional subalgebras whose RREF entries lie on the rational grid
/// {p/q + r/s*i : |p|,|r| <= bound, 1 <= q,s <= bound}.  Sound and
/// deduplicated; complete only relative to the grid.
std::vector<Subspace> enumerate_subalgebras(const Algebra& a, int k, int bound);

/// A parametric family of subspaces: each generator row is a vector of
/// expressions in the (at most one) parameter.
struct SubspaceFamily {
    std::vector<std::string> params;
    std::vector<std::vector<std::string>> generators;

    Mat instantiate(const ExprEnv& env) const;
};

/// Decides whether s equals some member of the family; returns the parameter
/// value exhibiting membership (irrelevant/zero for parameter-free families).
std::optional<GQ> family_membership(const Subspace& s, const SubspaceFamily& family);

}  // namespace structalg
