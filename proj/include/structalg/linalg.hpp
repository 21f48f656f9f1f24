#pragma once

#include <vector>

#include "structalg/field.hpp"

namespace structalg {

using Vec = std::vector<GQ>;
using Mat = std::vector<Vec>;  // row-major

/// A subspace of F^n represented by its unique reduced row echelon basis.
struct Subspace {
    Mat basis;  // RREF rows, zero rows dropped
    int ambient = 0;

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Mat zeros(int rows, int cols);
Mat identity(int n);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GQ& c, const Vec& a);
bool vec_is_zero(const Vec& a);

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const GQ& c, const Mat& a);
Mat transpose(const Mat& m);
/// Commutator a*b - b*a of square matrices.
Mat commutator(const Mat& a, const Mat& b);

Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, int rows, int cols);

/// In-place Gauss-Jordan reduction; returns pivot column indices.
std::vector<int> rref_in_place(Mat& m);
/// RREF copy with zero rows dropped.
Mat rref(Mat m);
int rank(Mat m);

/// Canonical (RREF) basis of the right nullspace {x : m x = 0} in F^cols.
Mat nullspace(const Mat& m, int cols);

/// Inverse of a square matrix, or empty if singular.
Mat inverse(const Mat& m);

/// Span helpers (all basis-insensitive).
Subspace span_of(Mat vectors, int ambient);
bool in_span(const Mat& basis, const Vec& v);
bool span_eq(const Mat& a, const Mat& b);
/// Coordinates of v in the given (independent) basis, or empty if outside.
std::optional<Vec> solve_coordinates(const Mat& basis, const Vec& v);

/// Intersection of two subspaces of F^n.
Mat span_intersect(const Mat& a, const Mat& b, int n);

/// Closure of the span of the given square matrices under commutators.
std::vector<Mat> commutator_closure(std::vector<Mat> generators);

}  // namespace structalg
