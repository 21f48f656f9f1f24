#include "structalg/lie.hpp"

#include <algorithm>

#include "structalg/errors.hpp"

namespace structalg {

namespace {

Vec basis_vec(int n, int i) {
    Vec v(n);
    v[i] = GQ(1);
    return v;
}

Mat full_basis(int n) {
    Mat m;
    for (int i = 0; i < n; ++i) m.push_back(basis_vec(n, i));
    return m;
}

}  // namespace

std::vector<std::array<int, 3>> jacobi_defects(const LieAlgebra& lie) {
    const int n = lie.dim;
    std::vector<std::array<int, 3>> bad;
    for (int i = 0; i < n; ++i) {
        Vec ei = basis_vec(n, i);
        for (int j = i + 1; j < n; ++j) {
            Vec ej = basis_vec(n, j);
            for (int k = j + 1; k < n; ++k) {
                Vec ek = basis_vec(n, k);
                Vec v = vec_add(vec_add(lie.apply(lie.apply(ei, ej), ek),
                                        lie.apply(lie.apply(ej, ek), ei)),
                                lie.apply(lie.apply(ek, ei), ej));
                if (!vec_is_zero(v)) bad.push_back({i, j, k});
            }
        }
    }
    return bad;
}

bool check_jacobi(const LieAlgebra& lie) { return jacobi_defects(lie).empty(); }

Mat sub_bracket_span(const LieAlgebra& lie, const Mat& u, const Mat& v) {
    Mat out;
    for (const auto& x : u)
        for (const auto& y : v) out.push_back(lie.apply(x, y));
    return rref(std::move(out));
}

std::vector<Mat> derived_series(const LieAlgebra& lie, const Mat& start) {
    Mat cur = rref(start.empty() ? full_basis(lie.dim) : start);
    std::vector<Mat> chain = {cur};
    while (true) {
        Mat nxt = sub_bracket_span(lie, cur, cur);
        if (span_eq(nxt, cur)) break;
        chain.push_back(nxt);
        cur = std::move(nxt);
        if (cur.empty()) break;
    }
    return chain;
}

std::vector<Mat> lower_central_series(const LieAlgebra& lie, const Mat& start) {
    Mat cur = rref(start);
    const Mat full = cur;
    std::vector<Mat> chain = {cur};
    while (true) {
        Mat nxt = sub_bracket_span(lie, full, cur);
        if (span_eq(nxt, cur)) break;
        chain.push_back(nxt);
        cur = std::move(nxt);
        if (cur.empty()) break;
    }
    return chain;
}

bool is_perfect(const LieAlgebra& lie) {
    Mat full = full_basis(lie.dim);
    return static_cast<int>(sub_bracket_span(lie, full, full).size()) == lie.dim;
}

Mat ad_matrix(const LieAlgebra& lie, const Vec& x) {
    const int n = lie.dim;
    Mat m = zeros(n, n);
    for (int j = 0; j < n; ++j) {
        Vec col = lie.apply(x, basis_vec(n, j));
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

Mat killing_form(const LieAlgebra& lie) {
    const int n = lie.dim;
    std::vector<Mat> ads;
    for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(lie, basis_vec(n, i)));
    Mat k = zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Mat m = mat_mul(ads[i], ads[j]);
            GQ tr(0);
            for (int t = 0; t < n; ++t) tr += m[t][t];
            k[i][j] = tr;
            k[j][i] = tr;
        }
    return k;
}

Mat radical(const LieAlgebra& lie) {
    const int n = lie.dim;
    Mat full = full_basis(n);
    Mat der = sub_bracket_span(lie, full, full);
    Mat k = killing_form(lie);
    Mat rows;
    for (const auto& d : der) rows.push_back(mat_vec(k, d));
    return nullspace(rows, n);
}

LieAlgebra restrict_to(const LieAlgebra& lie, const Mat& basis) {
    const int k = static_cast<int>(basis.size());
    LieAlgebra sub;
    sub.dim = k;
    sub.bracket.assign(k, std::vector<Vec>(k, Vec(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            auto c = solve_coordinates(basis, lie.apply(basis[i], basis[j]));
            if (!c) throw F0NotClosed("subspace is not bracket-closed");
            sub.bracket[i][j] = *c;
        }
    return sub;
}

Mat ideal_closure(const LieAlgebra& lie, const Vec& seed) {
    const int n = lie.dim;
    Mat cur = rref({seed});
    while (true) {
        Mat nxt = cur;
        for (int i = 0; i < n; ++i)
            for (const auto& v : cur) nxt.push_back(lie.apply(basis_vec(n, i), v));
        nxt = rref(std::move(nxt));
        if (nxt.size() == cur.size()) return cur;
        cur = std::move(nxt);
    }
}

int lie_rank(const LieAlgebra& lie) {
    const int n = lie.dim;
    int best = 0;
    for (long k : {1L, 2L, 3L, 5L, 7L}) {
        Vec x(n);
        GQ p(1);
        for (int i = 0; i < n; ++i) {
            p = p * GQ(k);
            x[i] = p;
        }
        best = std::max(best, rank(ad_matrix(lie, x)));
    }
    return n - best;
}

std::vector<Mat> decompose_semisimple(const LieAlgebra& lie) {
    const int n = lie.dim;
    if (n == 0) return {};
    std::vector<Mat> cands;
    for (int i = 0; i < n; ++i) cands.push_back(ideal_closure(lie, basis_vec(n, i)));
    std::vector<Mat> extra;
    for (size_t a = 0; a < cands.size(); ++a)
        for (size_t b = a + 1; b < cands.size(); ++b) {
            Mat m = span_intersect(cands[a], cands[b], n);
            if (!m.empty()) extra.push_back(std::move(m));
        }
    cands.insert(cands.end(), extra.begin(), extra.end());
    std::vector<Mat> proper;
    for (auto& c : cands)
        if (0 < static_cast<int>(c.size()) && static_cast<int>(c.size()) < n)
            proper.push_back(std::move(c));
    if (proper.empty()) return {full_basis(n)};
    const Mat& imin = *std::min_element(
        proper.begin(), proper.end(),
        [](const Mat& a, const Mat& b) { return a.size() < b.size(); });
    Mat k = killing_form(lie);
    Mat rows;
    for (const auto& d : imin) rows.push_back(mat_vec(k, d));
    Mat jc = nullspace(rows, n);
    if (imin.size() + jc.size() != static_cast<size_t>(n))
        throw DegenerateKilling();
    std::vector<Mat> out;
    for (const Mat* part : std::initializer_list<const Mat*>{&imin, &jc}) {
        LieAlgebra sub = restrict_to(lie, *part);
        for (const Mat& comp : decompose_semisimple(sub)) {
            Mat lifted;
            for (const Vec& cv : comp) {
                Vec v(n);
                for (size_t t = 0; t < part->size(); ++t)
                    v = vec_add(v, vec_scale(cv[t], (*part)[t]));
                lifted.push_back(std::move(v));
            }
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

std::vector<SimpleComponent> semisimple_profile(const LieAlgebra& lie, const Mat& s_basis) {
    LieAlgebra ls = restrict_to(lie, s_basis);
    if (ls.dim > 0 && rank(killing_form(ls)) != ls.dim)
        throw DegenerateKilling();
    std::vector<SimpleComponent> out;
    for (const Mat& comp : decompose_semisimple(ls)) {
        LieAlgebra sub = restrict_to(ls, comp);
        SimpleComponent c;
        c.dim = sub.dim;
        c.rank = lie_rank(sub);
        c.label = (c.dim == 3 && c.rank == 1)   ? "sl2"
                  : (c.dim == 8 && c.rank == 2) ? "sl3"
                                                : "unknown";
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const SimpleComponent& a, const SimpleComponent& b) { return a.key() < b.key(); });
    return out;
}

bool levi_verify(const LieAlgebra& lie, const Mat& s_basis, const Mat& r_basis) {
    const int n = lie.dim;
    if (static_cast<int>(s_basis.size() + r_basis.size()) != n) return false;
    if (!span_eq(rref(r_basis), radical(lie))) return false;
    if (!span_intersect(s_basis, r_basis, n).empty()) return false;
    for (const auto& x : s_basis)
        for (const auto& y : s_basis)
            if (!in_span(s_basis, lie.apply(x, y))) return false;
    if (s_basis.empty()) return true;
    LieAlgebra sub = restrict_to(lie, s_basis);
    return rank(killing_form(sub)) == sub.dim;
}

LeviReport analyze_lie(const LieAlgebra& lie) {
    LeviReport rep;
    rep.jacobi_ok = check_jacobi(lie);
    rep.perfect = is_perfect(lie);
    rep.radical_basis = radical(lie);
    rep.radical_dim = static_cast<int>(rep.radical_basis.size());
    if (rep.radical_dim > 0) {
        auto lc = lower_central_series(lie, rep.radical_basis);
        if (lc.back().empty()) rep.radical_nilindex = static_cast<int>(lc.size());
        rep.radical_abelian = rep.radical_nilindex > 0 && rep.radical_nilindex <= 2;
    }
    const int n = lie.dim;
    // Levi candidate 1: the coordinate complement of the radical's pivots.
    std::vector<bool> is_pivot(n, false);
    for (const auto& row : rep.radical_basis) {
        int p = 0;
        while (p < n && row[p].is_zero()) ++p;
        if (p < n) is_pivot[p] = true;
    }
    Mat cand;
    for (int i = 0; i < n; ++i)
        if (!is_pivot[i]) cand.push_back(basis_vec(n, i));
    auto closed = [&](const Mat& s) {
        for (const auto& x : s)
            for (const auto& y : s)
                if (!in_span(s, lie.apply(x, y))) return false;
        return true;
    };
    if (!cand.empty() && !closed(cand)) {
        // Levi candidate 2: the Killing-orthogonal complement of the radical.
        Mat k = killing_form(lie);
        Mat rows;
        for (const auto& r : rep.radical_basis) rows.push_back(mat_vec(k, r));
        Mat alt = nullspace(rows, n);
        cand = (static_cast<int>(alt.size()) + rep.radical_dim == n &&
                span_intersect(alt, rep.radical_basis, n).empty() && closed(alt))
                   ? alt
                   : Mat{};
    }
    if (!cand.empty() || rep.radical_dim == n) {
        rep.levi_basis = cand;
        if (!cand.empty()) rep.levi_profile = semisimple_profile(lie, cand);
    }
    return rep;
}

}  // namespace structalg
