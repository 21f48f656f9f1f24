#include "structalg/linalg.hpp"

#include <algorithm>

#include "structalg/errors.hpp"

namespace structalg {

bool Subspace::contains(const Vec& v) const { return in_span(basis, v); }

Mat zeros(int rows, int cols) { return Mat(rows, Vec(cols)); }

Mat identity(int n) {
    Mat m = zeros(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = GQ(1);
    return m;
}

namespace {
void require_same_size(size_t a, size_t b, const char* what) {
    if (a != b) throw DimensionMismatch(what);
}
}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a.size(), b.size(), "vector addition");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a.size(), b.size(), "vector subtraction");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const GQ& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const GQ& x) { return x.is_zero(); });
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    require_same_size(a[0].size(), b.size(), "matrix product");
    Mat r = zeros(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.empty()) return {};
    require_same_size(m[0].size(), v.size(), "matrix-vector product");
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    require_same_size(a.size(), b.size(), "matrix addition");
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = vec_add(a[i], b[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    require_same_size(a.size(), b.size(), "matrix subtraction");
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = vec_sub(a[i], b[i]);
    return r;
}

Mat mat_scale(const GQ& c, const Mat& a) {
    Mat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = vec_scale(c, a[i]);
    return r;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat r = zeros(static_cast<int>(m[0].size()), static_cast<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
    return r;
}

Mat commutator(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

Vec flatten(const Mat& m) {
    Vec r;
    for (const auto& row : m) r.insert(r.end(), row.begin(), row.end());
    return r;
}

Mat unflatten(const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) throw DimensionMismatch("unflatten");
    Mat m = zeros(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = v[i * cols + j];
    return m;
}

std::vector<int> rref_in_place(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        GQ inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GQ f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Mat rref(Mat m) {
    auto pivots = rref_in_place(m);
    m.resize(pivots.size());
    return m;
}

int rank(Mat m) { return static_cast<int>(rref_in_place(m).size()); }

Mat nullspace(const Mat& m, int cols) {
    Mat a = m;
    auto pivots = rref_in_place(a);
    a.resize(pivots.size());
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols);
        v[c] = GQ(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis));
}

Mat inverse(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Mat aug = zeros(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw DimensionMismatch("inverse of non-square");
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = GQ(1);
    }
    auto pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n)) return {};
    Mat inv = zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Subspace span_of(Mat vectors, int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = rref(std::move(vectors));
    return s;
}

bool in_span(const Mat& basis, const Vec& v) {
    if (vec_is_zero(v)) return true;
    Mat m = basis;
    int r0 = rank(m);
    m = basis;
    m.push_back(v);
    return rank(std::move(m)) == r0;
}

bool span_eq(const Mat& a, const Mat& b) {
    Mat ra = a, rb = b;
    return rref(std::move(ra)) == rref(std::move(rb));
}

std::optional<Vec> solve_coordinates(const Mat& basis, const Vec& v) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const int n = static_cast<int>(basis[0].size());
    // Solve B^T x = v with B rows as basis vectors.
    Mat aug = zeros(n, k + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = basis[j][i];
        aug[i][k] = v[i];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    Vec x(k);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][k];
    return x;
}

Mat span_intersect(const Mat& a, const Mat& b, int n) {
    // x in span(a) iff f(x) = 0 for all annihilator functionals f of a.
    Mat ann_a = nullspace(a, n);
    Mat ann_b = nullspace(b, n);
    Mat combined = ann_a;
    combined.insert(combined.end(), ann_b.begin(), ann_b.end());
    return nullspace(combined, n);
}

std::vector<Mat> commutator_closure(std::vector<Mat> generators) {
    if (generators.empty()) return {};
    const int n = static_cast<int>(generators[0].size());
    Mat flat;
    for (const auto& g : generators) flat.push_back(flatten(g));
    flat = rref(std::move(flat));
    const int limit = n * n + 1;
    for (int round = 0; round < limit; ++round) {
        std::vector<Mat> current;
        for (const auto& row : flat) current.push_back(unflatten(row, n, n));
        Mat next = flat;
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j)
                next.push_back(flatten(commutator(current[i], current[j])));
        next = rref(std::move(next));
        if (next == flat) {
            std::vector<Mat> result;
            for (const auto& row : flat) result.push_back(unflatten(row, n, n));
            return result;
        }
        flat = std::move(next);
    }
    throw ClosureDiverged("commutator closure");
}

}  // namespace structalg
