#include "structalg/algebra.hpp"

#include "structalg/errors.hpp"

namespace structalg {

Vec Algebra::basis_vector(int i) const {
    Vec v(dim);
    v[i] = GQ(1);
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw DimensionMismatch("multiply");
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            GQ c = x[i] * y[j];
            for (int k = 0; k < dim; ++k) r[k] += c * table[i][j][k];
        }
    }
    return r;
}

Vec Algebra::involve(const Vec& x) const { return mat_vec(sigma, x); }

Mat Algebra::left_op(const Vec& x) const {
    Mat m = zeros(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = multiply(x, basis_vector(j));
        for (int i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    return m;
}

Mat Algebra::right_op(const Vec& x) const {
    Mat m = zeros(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec col = multiply(basis_vector(j), x);
        for (int i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    return m;
}

Mat Algebra::t_op(const Vec& x) const {
    Mat m = zeros(dim, dim);
    Vec xbar = involve(x);
    for (int j = 0; j < dim; ++j) {
        Vec z = basis_vector(j);
        Vec col = vec_sub(vec_add(multiply(x, z), multiply(z, x)), multiply(z, xbar));
        for (int i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    return m;
}

Mat Algebra::v_op(const Vec& x, const Vec& y) const {
    Mat m = zeros(dim, dim);
    Vec xbar = involve(x), ybar = involve(y);
    Vec xyb = multiply(x, ybar);
    for (int j = 0; j < dim; ++j) {
        Vec z = basis_vector(j);
        Vec col = vec_sub(vec_add(multiply(xyb, z), multiply(multiply(z, ybar), x)),
                          multiply(multiply(z, xbar), y));
        for (int i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    return m;
}

void Algebra::validate() const {
    if (dim <= 0) throw DimensionMismatch("algebra dimension must be positive");
    if (unit_index < 0 || unit_index >= dim) throw DimensionMismatch("unit index out of range");
    if (static_cast<int>(table.size()) != dim) throw DimensionMismatch("table rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != dim) throw DimensionMismatch("table columns");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != dim) throw DimensionMismatch("table entries");
    }
    if (static_cast<int>(sigma.size()) != dim) throw DimensionMismatch("sigma size");
    Vec e = basis_vector(unit_index);
    for (int j = 0; j < dim; ++j) {
        Vec b = basis_vector(j);
        if (multiply(e, b) != b || multiply(b, e) != b)
            throw ParseError("unit element does not act as identity");
    }
    if (mat_mul(sigma, sigma) != identity(dim)) throw ParseError("sigma is not involutive");
    if (involve(e) != e) throw ParseError("sigma does not fix the unit");
    // Anti-automorphism: sigma(x y) = sigma(y) sigma(x) on basis pairs.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec lhs = involve(multiply(basis_vector(i), basis_vector(j)));
            Vec rhs = multiply(involve(basis_vector(j)), involve(basis_vector(i)));
            if (lhs != rhs) throw ParseError("sigma is not an anti-automorphism");
        }
}

Vec id_defect(const Algebra& a, const Vec& x, const Vec& y, const Vec& z, const Vec& t) {
    auto m = [&](const Vec& u, const Vec& v) { return a.multiply(u, v); };
    Vec xb = a.involve(x), yb = a.involve(y), zb = a.involve(z);

    Vec xyb_t = m(m(x, yb), t);   // (x ybar) t
    Vec tyb_x = m(m(t, yb), x);   // (t ybar) x
    Vec txb_y = m(m(t, xb), y);   // (t xbar) y
    Vec zt = m(z, t), tz = m(t, z), tzb = m(t, zb);

    Vec g1(a.dim);
    auto acc = [&](Vec& out, int sign, const Vec& v) {
        out = (sign > 0) ? vec_add(out, v) : vec_sub(out, v);
    };
    acc(g1, +1, m(z, xyb_t));
    acc(g1, +1, m(z, tyb_x));
    acc(g1, -1, m(z, txb_y));
    acc(g1, +1, m(xyb_t, z));
    acc(g1, +1, m(tyb_x, z));
    acc(g1, -1, m(txb_y, z));
    acc(g1, -1, m(xyb_t, zb));
    acc(g1, -1, m(tyb_x, zb));
    acc(g1, +1, m(txb_y, zb));
    acc(g1, -1, m(m(x, yb), zt));
    acc(g1, -1, m(m(x, yb), tz));
    acc(g1, +1, m(m(x, yb), tzb));
    acc(g1, -1, m(m(zt, yb), x));
    acc(g1, -1, m(m(tz, yb), x));
    acc(g1, +1, m(m(tzb, yb), x));
    acc(g1, +1, m(m(zt, xb), y));
    acc(g1, +1, m(m(tz, xb), y));
    acc(g1, -1, m(m(tzb, xb), y));

    Vec g2(a.dim);
    acc(g2, +1, m(m(m(z, x), yb), t));
    acc(g2, +1, m(m(m(x, z), yb), t));
    acc(g2, -1, m(m(m(x, zb), yb), t));
    acc(g2, +1, m(m(t, yb), m(z, x)));
    acc(g2, +1, m(m(t, yb), m(x, z)));
    acc(g2, -1, m(m(t, yb), m(x, zb)));
    acc(g2, -1, m(m(t, m(xb, zb)), y));
    acc(g2, -1, m(m(t, m(zb, xb)), y));
    acc(g2, +1, m(m(t, m(z, xb)), y));
    acc(g2, -1, m(m(x, m(yb, z)), t));
    acc(g2, -1, m(m(x, m(z, yb)), t));
    acc(g2, +1, m(m(x, m(zb, yb)), t));
    acc(g2, -1, m(m(t, m(yb, z)), x));
    acc(g2, -1, m(m(t, m(z, yb)), x));
    acc(g2, +1, m(m(t, m(zb, yb)), x));
    acc(g2, +1, m(m(t, xb), m(zb, y)));
    acc(g2, +1, m(m(t, xb), m(y, zb)));
    acc(g2, -1, m(m(t, xb), m(y, z)));

    return vec_sub(g1, g2);
}

bool is_structurable(const Algebra& a) {
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (int z = 0; z < a.dim; ++z)
                for (int t = 0; t < a.dim; ++t)
                    if (!vec_is_zero(id_defect(a, a.basis_vector(x), a.basis_vector(y),
                                               a.basis_vector(z), a.basis_vector(t))))
                        return false;
    return true;
}

HSSplit hs_split(const Algebra& a) {
    Mat minus = mat_sub(a.sigma, identity(a.dim));
    Mat plus = mat_add(a.sigma, identity(a.dim));
    return {nullspace(minus, a.dim), nullspace(plus, a.dim)};
}

}  // namespace structalg
