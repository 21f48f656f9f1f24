#include "structalg/json_io.hpp"

#include "structalg/errors.hpp"

namespace structalg {

using nlohmann::json;

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of coefficient strings");
    Vec v;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("coefficient entries must be strings");
        v.push_back(GQ::parse(e.get<std::string>()));
    }
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (const auto& c : v) j.push_back(c.str());
    return j;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a matrix of coefficient strings");
    Mat m;
    for (const auto& row : j) m.push_back(vec_from_json(row));
    return m;
}

json mat_to_json(const Mat& m) {
    json j = json::array();
    for (const auto& row : m) j.push_back(vec_to_json(row));
    return j;
}

json algebra_to_json(const Algebra& a) {
    json j;
    j["dim"] = a.dim;
    j["unit"] = a.unit_index;
    json table = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (int jj = 0; jj < a.dim; ++jj) row.push_back(vec_to_json(a.table[i][jj]));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    j["involution"] = mat_to_json(a.sigma);
    j["label"] = a.label;
    return j;
}

Algebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("table") || !j.contains("involution"))
        throw ParseError("algebra JSON needs dim, unit, table, involution");
    Algebra a;
    a.dim = j.at("dim").get<int>();
    a.unit_index = j.value("unit", 0);
    a.label = j.value("label", std::string{});
    if (a.dim <= 0) throw ParseError("algebra dim must be positive");
    const json& table = j.at("table");
    if (static_cast<int>(table.size()) != a.dim) throw ParseError("table has wrong row count");
    a.table.assign(a.dim, std::vector<Vec>(a.dim));
    for (int i = 0; i < a.dim; ++i) {
        if (static_cast<int>(table[i].size()) != a.dim)
            throw ParseError("table has wrong column count");
        for (int jj = 0; jj < a.dim; ++jj) {
            Vec v = vec_from_json(table[i][jj]);
            if (static_cast<int>(v.size()) != a.dim)
                throw ParseError("table entry has wrong length");
            a.table[i][jj] = std::move(v);
        }
    }
    a.sigma = mat_from_json(j.at("involution"));
    if (static_cast<int>(a.sigma.size()) != a.dim) throw ParseError("involution has wrong size");
    for (const auto& row : a.sigma)
        if (static_cast<int>(row.size()) != a.dim) throw ParseError("involution has wrong size");
    return a;
}

json lie_to_json(const LieAlgebra& lie) {
    json j;
    j["dim"] = lie.dim;
    j["grades"] = lie.grades;
    json brackets = json::array();
    for (int i = 0; i < lie.dim; ++i)
        for (int jj = i + 1; jj < lie.dim; ++jj)
            for (int k = 0; k < lie.dim; ++k)
                if (!lie.bracket[i][jj][k].is_zero())
                    brackets.push_back(
                        json::array({i + 1, jj + 1, k + 1, lie.bracket[i][jj][k].str()}));
    j["brackets"] = std::move(brackets);
    return j;
}

LieAlgebra lie_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
        throw ParseError("Lie JSON needs dim and brackets");
    LieAlgebra lie;
    lie.dim = j.at("dim").get<int>();
    if (lie.dim < 0) throw ParseError("Lie dim must be nonnegative");
    lie.grades = j.value("grades", std::vector<int>{});
    lie.bracket.assign(lie.dim, std::vector<Vec>(lie.dim, Vec(lie.dim)));
    for (const auto& e : j.at("brackets")) {
        if (!e.is_array() || e.size() != 4) throw ParseError("bracket entries are [i,j,k,coeff]");
        int i = e[0].get<int>() - 1, jj = e[1].get<int>() - 1, k = e[2].get<int>() - 1;
        if (i < 0 || jj < 0 || k < 0 || i >= lie.dim || jj >= lie.dim || k >= lie.dim)
            throw ParseError("bracket index out of range");
        GQ c = GQ::parse(e[3].get<std::string>());
        lie.bracket[i][jj][k] += c;
        lie.bracket[jj][i][k] -= c;
    }
    return lie;
}

}  // namespace structalg
