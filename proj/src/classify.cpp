#include "structalg/classify.hpp"

#include <sstream>

#include "structalg/analysis.hpp"
#include "structalg/errors.hpp"
#include "structalg/registry.hpp"

namespace structalg {

namespace {

Algebra unital_3d(const std::string& label, const Mat& sigma) {
    Algebra a;
    a.dim = 3;
    a.unit_index = 0;
    a.label = label;
    a.table.assign(3, std::vector<Vec>(3, Vec(3)));
    for (int j = 0; j < 3; ++j) {
        a.table[0][j][j] = GQ(1);
        a.table[j][0][j] = GQ(1);
    }
    a.sigma = sigma;
    return a;
}

Mat diag_signs(long s1, long s2, long s3) {
    Mat m = zeros(3, 3);
    m[0][0] = GQ(s1);
    m[1][1] = GQ(s2);
    m[2][2] = GQ(s3);
    return m;
}

}  // namespace

Algebra build_21(const Params21& p) {
    Algebra a = unital_3d("", diag_signs(1, 1, -1));
    a.table[1][1] = {p.a1, p.b1, GQ(0)};
    a.table[1][2] = {p.a2, p.b2, p.g};
    a.table[2][1] = {-p.a2, -p.b2, p.g};
    a.table[2][2] = {p.a3, p.b3, GQ(0)};
    return a;
}

Algebra build_12(const Params12& p) {
    Algebra a = unital_3d("", diag_signs(1, -1, -1));
    a.table[1][1] = {p.a1, GQ(0), GQ(0)};
    a.table[1][2] = {p.a2, p.b, p.g};
    a.table[2][1] = {p.a2, -p.b, -p.g};
    a.table[2][2] = {p.a3, GQ(0), GQ(0)};
    return a;
}

Params21 read_21(const Algebra& a) {
    return {a.table[1][1][0], a.table[1][2][0], a.table[2][2][0],
            a.table[1][1][1], a.table[1][2][1], a.table[2][2][1], a.table[1][2][2]};
}

Algebra transport(const Algebra& a, const Mat& p) {
    Mat pinv = inverse(p);
    if (pinv.empty()) throw SingularSample("change of basis");
    Algebra b = a;
    for (int i = 0; i < a.dim; ++i) {
        Vec ei(a.dim), ej(a.dim);
        for (int r = 0; r < a.dim; ++r) ei[r] = p[r][i];
        for (int j = 0; j < a.dim; ++j) {
            for (int r = 0; r < a.dim; ++r) ej[r] = p[r][j];
            b.table[i][j] = mat_vec(pinv, a.multiply(ei, ej));
        }
    }
    b.sigma = mat_mul(pinv, mat_mul(a.sigma, p));
    return b;
}

namespace {

void check_canonical(const Algebra& got, const std::string& label) {
    Algebra can = canonical_algebra(label);
    if (got.table != can.table || got.sigma != can.sigma)
        throw EngineError("internal: normalization of " + label + " missed the canonical table");
}

}  // namespace

ClassificationResult classify_21(const Params21& p0) {
    Algebra input = build_21(p0);
    // Step 1: kill the gamma component via e2' = e2 - g e1.
    Mat p1 = identity(3);
    p1[0][1] = -p0.g;
    Params21 p = read_21(transport(input, p1));
    if (!p.g.is_zero()) throw EngineError("internal: gamma shift failed");
    // Step 2: structurability constraints of the reduced family.
    if (!p.a1.is_zero()) throw NotStructurable("alpha1 = 0");
    if (!p.a2.is_zero()) throw NotStructurable("alpha2 = 0");
    if (p.a3 != p.b2 * p.b2 - p.b1 * p.b3)
        throw NotStructurable("alpha3 = beta2^2 - beta1*beta3");
    if (!(p.b1 * p.b2).is_zero()) throw NotStructurable("beta1*beta2 = 0");
    if (!(p.b2 * p.b3).is_zero()) throw NotStructurable("beta2*beta3 = 0");
    // Step 3: rescale e2, e3 into the canonical representative.
    std::string label;
    GQ scale2(1), scale3(1);
    if (p.b1.is_zero() && p.b2.is_zero() && p.b3.is_zero()) {
        label = "A1";
    } else if (p.b1.is_zero() && p.b2.is_zero()) {
        label = "A2";
        scale2 = p.b3;
    } else if (!p.b1.is_zero() && p.b2.is_zero() && p.b3.is_zero()) {
        label = "A3";
        scale2 = p.b1.inverse();
    } else if (!p.b1.is_zero() && p.b2.is_zero()) {
        label = "A4";
        auto root = sqrt_in_field(p.b1 * p.b3);
        if (!root) throw FieldExtensionRequired("sqrt(beta1*beta3)");
        scale2 = p.b1.inverse();
        scale3 = root->inverse();
    } else {
        label = "A5";
        scale3 = p.b2.inverse();
    }
    Mat p2 = identity(3);
    p2[1][1] = scale2;
    p2[2][2] = scale3;
    Mat change = mat_mul(p1, p2);
    check_canonical(transport(input, change), label);
    return {label, change};
}

ClassificationResult classify_12(const Params12& p) {
    if (p.a1 != p.g * p.g) throw NotStructurable("alpha1 = gamma^2");
    if (p.a2 != -p.b * p.g) throw NotStructurable("alpha2 = -beta*gamma");
    if (p.a3 != p.b * p.b) throw NotStructurable("alpha3 = beta^2");
    Algebra input = build_12(p);
    Mat change;
    std::string label;
    if (p.b.is_zero() && p.g.is_zero()) {
        label = "S1";
        change = identity(3);
    } else if (!p.b.is_zero()) {
        label = "S2";
        change = identity(3);
        change[2][1] = p.g / p.b;   // e2' = e2 + (g/b) e3
        change[2][2] = p.b.inverse();  // e3' = e3 / b
    } else {
        // b = 0, g != 0: exchange e2 <-> e3, landing in the b' = -g family.
        Mat swap = zeros(3, 3);
        swap[0][0] = GQ(1);
        swap[2][1] = GQ(1);
        swap[1][2] = GQ(1);
        Algebra swapped = transport(input, swap);
        Params12 q{swapped.table[1][1][0], swapped.table[1][2][0], swapped.table[2][2][0],
                   swapped.table[1][2][1], swapped.table[1][2][2]};
        ClassificationResult inner = classify_12(q);
        label = inner.label;
        change = mat_mul(swap, inner.change_of_basis);
    }
    check_canonical(transport(input, change), label);
    return {label, change};
}

bool verify_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi,
                        bool require_involution) {
    if (a.dim != b.dim || static_cast<int>(phi.size()) != a.dim)
        throw DimensionMismatch("verify_isomorphism");
    if (inverse(phi).empty()) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = mat_vec(phi, a.multiply(a.basis_vector(i), a.basis_vector(j)));
            Vec rhs = b.multiply(mat_vec(phi, a.basis_vector(i)), mat_vec(phi, a.basis_vector(j)));
            if (lhs != rhs) return false;
        }
    if (require_involution && mat_mul(phi, a.sigma) != mat_mul(b.sigma, phi)) return false;
    return true;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "{dim=" << dim << ", type=(" << hermitian_dim << "," << skew_dim
       << "), der=" << der_dim << ", bar_der=" << bar_der_dim
       << ", ident=" << identity_space_dim << ", left_op_derived=[";
    for (size_t i = 0; i < left_op_derived_dims.size(); ++i)
        os << (i ? "," : "") << left_op_derived_dims[i];
    os << "]}";
    return os.str();
}

Fingerprint invariant_fingerprint(const Algebra& a) {
    Fingerprint f;
    f.dim = a.dim;
    HSSplit hs = hs_split(a);
    f.hermitian_dim = static_cast<int>(hs.hermitian.size());
    f.skew_dim = static_cast<int>(hs.skew_hermitian.size());
    f.der_dim = derivation_algebra(a, false).dim();
    f.bar_der_dim = derivation_algebra(a, true).dim();
    f.identity_space_dim = functional_identity_space(a).dim();
    // Derived-series dims of the commutator closure of span{L_{e_i}}.
    std::vector<Mat> gens;
    for (int i = 0; i < a.dim; ++i) gens.push_back(a.left_op(a.basis_vector(i)));
    std::vector<Mat> closure = commutator_closure(gens);
    std::vector<Mat> current = closure;
    f.left_op_derived_dims.push_back(static_cast<int>(current.size()));
    while (true) {
        Mat derived_flat;
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j)
                derived_flat.push_back(flatten(commutator(current[i], current[j])));
        derived_flat = rref(std::move(derived_flat));
        int d = static_cast<int>(derived_flat.size());
        if (d == f.left_op_derived_dims.back()) break;
        f.left_op_derived_dims.push_back(d);
        current.clear();
        for (const auto& row : derived_flat) current.push_back(unflatten(row, a.dim, a.dim));
        if (d == 0) break;
    }
    return f;
}

}  // namespace structalg
