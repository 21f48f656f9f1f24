#pragma once

#include <string>

#include "structalg/algebra.hpp"

namespace structalg {

/// Parameters of the generic unital table with involution of type (2,1):
///   e2 e2 =  a1 e1 + b1 e2
///   e2 e3 =  a2 e1 + b2 e2 + g e3
///   e3 e2 = -a2 e1 - b2 e2 + g e3
///   e3 e3 =  a3 e1 + b3 e2
struct Params21 {
    GQ a1, a2, a3, b1, b2, b3, g;
};

/// Parameters of the generic unital table with involution of type (1,2):
///   e2 e2 = a1 e1
///   e2 e3 = a2 e1 + b e2 + g e3
///   e3 e2 = a2 e1 - b e2 - g e3
///   e3 e3 = a3 e1
struct Params12 {
    GQ a1, a2, a3, b, g;
};

Algebra build_21(const Params21& p);
Algebra build_12(const Params12& p);

/// Reads the (2,1) parameters back off a table of the expected shape.
Params21 read_21(const Algebra& a);

/// Base change: columns of p are the new basis vectors in old coordinates.
Algebra transport(const Algebra& a, const Mat& p);

struct ClassificationResult {
    std::string label;
    Mat change_of_basis;  // transport(input, change_of_basis) == canonical
};

/// Classifies a type-(2,1) parametric table; throws NotStructurable with the
/// violated constraint, or FieldExtensionRequired when the A4 normalization
/// needs a square root absent from the field.
ClassificationResult classify_21(const Params21& p);

/// Classifies a type-(1,2) parametric table; throws NotStructurable.
ClassificationResult classify_12(const Params12& p);

/// Checks that phi is an invertible algebra isomorphism A -> B on basis pairs;
/// when require_involution is set it additionally checks phi∘sigma_A = sigma_B∘phi.
bool verify_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi,
                        bool require_involution = true);

/// Cheap isomorphism-necessary invariants of an algebra with involution.
struct Fingerprint {
    int dim = 0;
    int hermitian_dim = 0;
    int skew_dim = 0;
    int der_dim = 0;
    int bar_der_dim = 0;
    int identity_space_dim = 0;
    std::vector<int> left_op_derived_dims;  // derived series dims of the L-operator Lie algebra

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint invariant_fingerprint(const Algebra& a);

}  // namespace structalg
