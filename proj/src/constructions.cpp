#include "structalg/constructions.hpp"

#include "structalg/errors.hpp"

namespace structalg {

Vec LieAlgebra::apply(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw DimensionMismatch("lie bracket");
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            GQ c = x[i] * y[j];
            for (int k = 0; k < dim; ++k) r[k] += c * bracket[i][j][k];
        }
    }
    return r;
}

Algebra allison_hein(const Algebra& a) {
    Algebra c;
    c.dim = a.dim;
    c.unit_index = a.unit_index;
    c.label = a.label.empty() ? "" : "C(" + a.label + ")";
    c.sigma = identity(a.dim);
    c.table.assign(a.dim, std::vector<Vec>(a.dim, Vec(a.dim)));
    for (int i = 0; i < a.dim; ++i) {
        Mat t = a.t_op(a.basis_vector(i));  // x ⋆ y = T_x(y)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) c.table[i][j][k] = t[k][j];
    }
    return c;
}

OperatorTransforms operator_transforms(const Algebra& a, const Mat& e) {
    OperatorTransforms t;
    Vec e1 = a.basis_vector(a.unit_index);
    Vec ee1 = mat_vec(e, e1);
    t.delta = mat_add(e, a.right_op(a.involve(ee1)));
    t.epsilon = mat_sub(e, a.t_op(vec_add(ee1, a.involve(ee1))));
    Vec eps_e1 = mat_vec(t.epsilon, e1);
    t.eps_delta = mat_add(t.epsilon, a.right_op(a.involve(eps_e1)));
    t.bar = mat_mul(a.sigma, mat_mul(e, a.sigma));
    return t;
}

std::vector<Mat> instr(const Algebra& a) {
    const int d = a.dim;
    HSSplit hs = hs_split(a);
    std::vector<Mat> gens;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Mat v = a.v_op(a.basis_vector(i), a.basis_vector(j));
            if (!vec_is_zero(flatten(v))) gens.push_back(std::move(v));
        }
    for (const auto& s : hs.skew_hermitian)
        for (const auto& r : hs.skew_hermitian) {
            Mat m = mat_mul(a.left_op(s), a.left_op(r));
            if (!vec_is_zero(flatten(m))) gens.push_back(std::move(m));
        }
    std::vector<Mat> closure = commutator_closure(gens);
    Mat closure_flat;
    for (const auto& m : closure) closure_flat.push_back(flatten(m));
    // Prefer the named generators T_{e_i}, optionally extended by e3 -> e2.
    std::vector<Mat> preferred;
    for (int i = 0; i < d; ++i) preferred.push_back(a.t_op(a.basis_vector(i)));
    Mat extra = zeros(d, d);
    if (d >= 3) extra[1][2] = GQ(1);
    for (int with_extra = 0; with_extra <= (d >= 3 ? 1 : 0); ++with_extra) {
        std::vector<Mat> cand = preferred;
        if (with_extra) cand.push_back(extra);
        Mat cand_flat;
        for (const auto& m : cand) cand_flat.push_back(flatten(m));
        if (rank(cand_flat) == static_cast<int>(cand.size()) &&
            cand.size() == closure.size() && span_eq(cand_flat, closure_flat))
            return cand;
    }
    return closure;
}

LieAlgebra ak_construct(const Algebra& a) {
    const int d = a.dim;
    HSSplit hs = hs_split(a);
    const Mat& skew = hs.skew_hermitian;
    const int ds = static_cast<int>(skew.size());
    std::vector<Mat> f0 = instr(a);
    const int f0n = static_cast<int>(f0.size());
    const int dim = 2 * d + 2 * ds + f0n;
    const int o1 = 0, o2 = d, o0 = d + ds, om1 = d + ds + f0n, om2 = 2 * d + ds + f0n;

    LieAlgebra lie;
    lie.dim = dim;
    lie.degree_zero_basis = f0;
    lie.grades.assign(dim, 0);
    for (int i = 0; i < d; ++i) lie.grades[o1 + i] = 1;
    for (int s = 0; s < ds; ++s) lie.grades[o2 + s] = 2;
    for (int i = 0; i < d; ++i) lie.grades[om1 + i] = -1;
    for (int s = 0; s < ds; ++s) lie.grades[om2 + s] = -2;
    lie.bracket.assign(dim, std::vector<Vec>(dim, Vec(dim)));

    Mat f0_flat;
    for (const auto& m : f0) f0_flat.push_back(flatten(m));
    auto f0_coords = [&](const Mat& m) {
        auto c = solve_coordinates(f0_flat, flatten(m));
        if (!c) throw F0NotClosed("operator outside the degree-zero span");
        return *c;
    };
    auto s_coords = [&](const Vec& v) {
        auto c = solve_coordinates(skew, v);
        if (!c) throw F0NotClosed("element outside the skew part");
        return *c;
    };
    auto set_bracket = [&](int i, int j, const Vec& v) {
        lie.bracket[i][j] = v;
        Vec neg(dim);
        for (int k = 0; k < dim; ++k) neg[k] = -v[k];
        lie.bracket[j][i] = std::move(neg);
    };
    auto embed = [&](int offset, const Vec& v) {
        Vec out(dim);
        for (size_t t = 0; t < v.size(); ++t) out[offset + static_cast<int>(t)] = v[t];
        return out;
    };

    for (int b = 0; b < f0n; ++b) {
        const Mat& e = f0[b];
        OperatorTransforms t = operator_transforms(a, e);
        for (int i = 0; i < d; ++i) {
            Vec col(d);
            for (int r = 0; r < d; ++r) col[r] = e[r][i];
            set_bracket(o0 + b, o1 + i, embed(o1, col));  // [E, (x,0)] = (E x, 0)
        }
        for (int s = 0; s < ds; ++s)  // [E, (0,s)] = (0, E^delta s)
            set_bracket(o0 + b, o2 + s, embed(o2, s_coords(mat_vec(t.delta, skew[s]))));
        for (int i = 0; i < d; ++i)  // [E, hat(x,0)] = hat(E^eps x, 0)
            set_bracket(o0 + b, om1 + i, embed(om1, mat_vec(t.epsilon, a.basis_vector(i))));
        for (int s = 0; s < ds; ++s)
            set_bracket(o0 + b, om2 + s, embed(om2, s_coords(mat_vec(t.eps_delta, skew[s]))));
    }
    for (int b = 0; b < f0n; ++b)
        for (int c = b + 1; c < f0n; ++c)
            set_bracket(o0 + b, o0 + c, embed(o0, f0_coords(commutator(f0[b], f0[c]))));

    auto skew_product = [&](const Vec& x, const Vec& y) {
        return vec_sub(a.multiply(x, a.involve(y)), a.multiply(y, a.involve(x)));
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Vec sp = s_coords(skew_product(a.basis_vector(i), a.basis_vector(j)));
            set_bracket(o1 + i, o1 + j, embed(o2, sp));
            set_bracket(om1 + i, om1 + j, embed(om2, sp));
        }
    // [(x,s), hat(y,r)] = (s y, 0) - hat(r x, 0) + V_{x,y} + L_s L_r.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            set_bracket(o1 + i, om1 + j,
                        embed(o0, f0_coords(a.v_op(a.basis_vector(i), a.basis_vector(j)))));
    for (int i = 0; i < d; ++i)
        for (int s = 0; s < ds; ++s) {
            Vec prod = a.multiply(skew[s], a.basis_vector(i));
            Vec neg(d);
            for (int k = 0; k < d; ++k) neg[k] = -prod[k];
            set_bracket(o1 + i, om2 + s, embed(om1, neg));
        }
    for (int s = 0; s < ds; ++s)
        for (int j = 0; j < d; ++j)
            set_bracket(o2 + s, om1 + j, embed(o1, a.multiply(skew[s], a.basis_vector(j))));
    for (int s = 0; s < ds; ++s)
        for (int r = 0; r < ds; ++r) {
            Mat ll = mat_mul(a.left_op(skew[s]), a.left_op(skew[r]));
            set_bracket(o2 + s, om2 + r, embed(o0, f0_coords(ll)));
        }
    return lie;
}

}  // namespace structalg
