#include "structalg/analysis.hpp"

#include <array>
#include <set>

#include "structalg/classify.hpp"
#include "structalg/errors.hpp"

namespace structalg {

Subspace derivation_algebra(const Algebra& a, bool bar) {
    const int d = a.dim;
    Mat rows;
    // Unknowns: D[r][c] flattened as r*d + c (column convention).
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Vec& w = a.table[i][j];  // coords of e_i e_j
            for (int k = 0; k < d; ++k) {
                Vec row(d * d);
                // D(e_i e_j)_k = sum_t D[k][t] w_t
                for (int t = 0; t < d; ++t) row[k * d + t] += w[t];
                // -(D(e_i) e_j)_k = -sum_r D[r][i] c[r][j][k]
                for (int r = 0; r < d; ++r) row[r * d + i] -= a.table[r][j][k];
                // -(e_i D(e_j))_k = -sum_r D[r][j] c[i][r][k]
                for (int r = 0; r < d; ++r) row[r * d + j] -= a.table[i][r][k];
                rows.push_back(std::move(row));
            }
        }
    if (bar) {
        // (D sigma - sigma D)[i][j] = 0.
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec row(d * d);
                for (int t = 0; t < d; ++t) {
                    row[i * d + t] += a.sigma[t][j];
                    row[t * d + j] -= a.sigma[i][t];
                }
                rows.push_back(std::move(row));
            }
    }
    Subspace s;
    s.ambient = d * d;
    s.basis = nullspace(rows, d * d);
    return s;
}

Mat MatrixFamily::instantiate(const ExprEnv& env) const {
    Mat m;
    for (const auto& row : entries) {
        Vec r;
        for (const auto& e : row) r.push_back(eval_expr(e, env));
        m.push_back(std::move(r));
    }
    return m;
}

bool verify_automorphism_family(const Algebra& a, const MatrixFamily& family) {
    for (const auto& env : family.samples) {
        Mat phi = family.instantiate(env);
        if (inverse(phi).empty()) throw SingularSample("automorphism family sample");
        if (!verify_isomorphism(a, a, phi, family.require_involution)) return false;
    }
    return true;
}

Vec identity_value(const Algebra& a, const Vec& coeffs, const Vec& x, const Vec& y) {
    if (static_cast<int>(coeffs.size()) != kIdentityWords)
        throw DimensionMismatch("identity coefficients");
    Vec xb = a.involve(x), yb = a.involve(y);
    std::array<Vec, kIdentityWords> words = {
        a.multiply(x, y),  a.multiply(y, x),  a.multiply(xb, y), a.multiply(x, yb),
        a.multiply(yb, x), a.multiply(y, xb), a.involve(a.multiply(x, y)),
        a.involve(a.multiply(y, x))};
    Vec out(a.dim);
    for (int w = 0; w < kIdentityWords; ++w)
        out = vec_add(out, vec_scale(coeffs[w], words[w]));
    return out;
}

Subspace functional_identity_space(const Algebra& a) {
    const int d = a.dim;
    Mat rows;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // One linear row per output coordinate of f(e_i, e_j).
            std::array<Vec, kIdentityWords> words;
            Vec x = a.basis_vector(i), y = a.basis_vector(j);
            Vec xb = a.involve(x), yb = a.involve(y);
            words[0] = a.multiply(x, y);
            words[1] = a.multiply(y, x);
            words[2] = a.multiply(xb, y);
            words[3] = a.multiply(x, yb);
            words[4] = a.multiply(yb, x);
            words[5] = a.multiply(y, xb);
            words[6] = a.involve(words[0]);
            words[7] = a.involve(words[1]);
            for (int k = 0; k < d; ++k) {
                Vec row(kIdentityWords);
                for (int w = 0; w < kIdentityWords; ++w) row[w] = words[w][k];
                rows.push_back(std::move(row));
            }
        }
    Subspace s;
    s.ambient = kIdentityWords;
    s.basis = nullspace(rows, kIdentityWords);
    return s;
}

SubspaceChecks subspace_checks(const Algebra& a, const Mat& basis) {
    for (const auto& v : basis)
        if (static_cast<int>(v.size()) != a.dim) throw DimensionMismatch("subspace basis");
    SubspaceChecks c;
    c.is_subalgebra = true;
    for (const auto& u : basis)
        for (const auto& v : basis)
            if (!in_span(basis, a.multiply(u, v))) c.is_subalgebra = false;
    c.is_left_ideal = true;
    c.is_right_ideal = true;
    for (int i = 0; i < a.dim; ++i) {
        Vec b = a.basis_vector(i);
        for (const auto& v : basis) {
            if (!in_span(basis, a.multiply(b, v))) c.is_left_ideal = false;
            if (!in_span(basis, a.multiply(v, b))) c.is_right_ideal = false;
        }
    }
    c.is_ideal = c.is_left_ideal && c.is_right_ideal;
    c.is_bar_closed = true;
    for (const auto& v : basis)
        if (!in_span(basis, a.involve(v))) c.is_bar_closed = false;
    return c;
}

namespace {

std::vector<GQ> grid_values(int bound) {
    std::vector<GQ> out;
    std::vector<mpq_class> rationals;
    std::set<std::pair<long, long>> seen_q;
    for (long p = -bound; p <= bound; ++p)
        for (long q = 1; q <= bound; ++q) {
            mpq_class v(p, q);
            v.canonicalize();
            auto key = std::make_pair(v.get_num().get_si(), v.get_den().get_si());
            if (seen_q.insert(key).second) rationals.push_back(v);
        }
    for (const auto& re : rationals)
        for (const auto& im : rationals) out.emplace_back(re, im);
    return out;
}

// Closure check specialized for a basis already in RREF with known pivots:
// reduce each product against the basis rows directly instead of re-running
// Gaussian elimination per membership query.
bool closed_under_product(const Algebra& a, const Mat& basis, const std::vector<int>& pivots) {
    for (const auto& u : basis)
        for (const auto& v : basis) {
            Vec w = a.multiply(u, v);
            for (size_t r = 0; r < basis.size(); ++r) {
                const GQ& c = w[pivots[r]];
                if (c.is_zero()) continue;
                GQ factor = c;  // pivot entries are 1
                for (int t = 0; t < a.dim; ++t) w[t] -= factor * basis[r][t];
            }
            if (!vec_is_zero(w)) return false;
        }
    return true;
}

void emit_candidates(const Algebra& a, const std::vector<int>& pivots,
                     const std::vector<GQ>& values, std::vector<Subspace>& out) {
    const int d = a.dim;
    const int k = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(d, false);
    for (int p : pivots) is_pivot[p] = true;
    // Free positions: (row r, col c) with c non-pivot and c > pivots[r].
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < d; ++c)
            if (!is_pivot[c]) free_pos.emplace_back(r, c);
    std::vector<size_t> idx(free_pos.size(), 0);
    while (true) {
        Mat basis = zeros(k, d);
        for (int r = 0; r < k; ++r) basis[r][pivots[r]] = GQ(1);
        for (size_t f = 0; f < free_pos.size(); ++f)
            basis[free_pos[f].first][free_pos[f].second] = values[idx[f]];
        if (closed_under_product(a, basis, pivots)) {
            Subspace s;
            s.ambient = d;
            s.basis = basis;  // already RREF by construction
            out.push_back(std::move(s));
        }
        size_t f = 0;
        for (; f < idx.size(); ++f) {
            if (++idx[f] < values.size()) break;
            idx[f] = 0;
        }
        if (f == idx.size()) break;
        if (free_pos.empty()) break;
    }
}

}  // namespace

std::vector<Subspace> enumerate_subalgebras(const Algebra& a, int k, int bound) {
    if (bound < 1) throw DimensionMismatch("grid bound must be >= 1");
    std::vector<GQ> values = grid_values(bound);
    std::vector<Subspace> out;
    // All increasing pivot patterns of length k.
    std::vector<int> pattern(k);
    auto recurse = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            emit_candidates(a, pattern, values, out);
            return;
        }
        for (int c = start; c < a.dim; ++c) {
            pattern[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

Mat SubspaceFamily::instantiate(const ExprEnv& env) const {
    Mat m;
    for (const auto& row : generators) {
        Vec r;
        for (const auto& e : row) r.push_back(eval_expr(e, env));
        m.push_back(std::move(r));
    }
    return m;
}

std::optional<GQ> family_membership(const Subspace& s, const SubspaceFamily& family) {
    if (family.params.empty()) {
        Mat inst = family.instantiate({});
        return span_eq(inst, s.basis) ? std::optional<GQ>(GQ(0)) : std::nullopt;
    }
    if (family.params.size() != 1)
        throw DimensionMismatch("family_membership supports at most one parameter");
    // Entries are affine in the parameter: g(a) = g(0) + a*(g(1) - g(0)).
    ExprEnv e0{{family.params[0], GQ(0)}}, e1{{family.params[0], GQ(1)}};
    Mat g0 = family.instantiate(e0), g1 = family.instantiate(e1);
    const int n = s.ambient;
    Mat ann = nullspace(s.basis, n);
    std::optional<GQ> param;
    for (size_t r = 0; r < g0.size(); ++r) {
        Vec dv = vec_sub(g1[r], g0[r]);
        for (const auto& f : ann) {
            GQ c1(0), c0(0);
            for (int i = 0; i < n; ++i) {
                c1 += f[i] * dv[i];
                c0 += f[i] * g0[r][i];
            }
            // Solve c1 * a + c0 = 0 consistently across all constraints.
            if (!c1.is_zero()) {
                GQ cand = -c0 / c1;
                if (!param)
                    param = cand;
                else if (*param != cand)
                    return std::nullopt;
            } else if (!c0.is_zero()) {
                return std::nullopt;
            }
        }
    }
    GQ value = param.value_or(GQ(0));
    ExprEnv env{{family.params[0], value}};
    return span_eq(family.instantiate(env), s.basis) ? std::optional<GQ>(value) : std::nullopt;
}

}  // namespace structalg
