#pragma once

#include "json.hpp"
#include "structalg/algebra.hpp"
#include "structalg/constructions.hpp"

namespace structalg {

/// Algebra JSON format:
/// {"dim": n, "unit": u, "label": "...",
///  "table": n x n array of n coefficient strings (coords of e_i e_j),
///  "involution": n x n matrix of coefficient strings (column convention)}
nlohmann::json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const nlohmann::json& j);

/// Lie algebra JSON format:
/// {"dim": n, "grades": [...],
///  "brackets": [[i, j, k, "coeff"], ...]}  with 1-based indices and only
/// entries with i < j and nonzero coefficient listed.
nlohmann::json lie_to_json(const LieAlgebra& lie);
LieAlgebra lie_from_json(const nlohmann::json& j);

/// Shared helpers for coefficient matrices of strings.
Mat mat_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const Mat& m);
Vec vec_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const Vec& v);

}  // namespace structalg
