#include "structalg/registry.hpp"

#include <array>
#include <map>

#include "structalg/errors.hpp"

namespace structalg {

namespace {

struct Entry {
    int i, j;
    std::array<long, 3> re;  // real integer coords of e_i e_j
    std::array<long, 3> im;  // imaginary integer coords
};

Algebra build(const std::string& label, const std::vector<Entry>& extras,
              const std::array<long, 3>& sigma_signs) {
    Algebra a;
    a.dim = 3;
    a.unit_index = 0;
    a.label = label;
    a.table.assign(3, std::vector<Vec>(3, Vec(3)));
    for (int j = 0; j < 3; ++j) {
        a.table[0][j][j] = GQ(1);
        a.table[j][0][j] = GQ(1);
    }
    for (const auto& e : extras) {
        Vec v(3);
        for (int k = 0; k < 3; ++k)
            v[k] = GQ(mpq_class(e.re[k]), mpq_class(e.im[k]));
        a.table[e.i][e.j] = v;
    }
    a.sigma = zeros(3, 3);
    for (int k = 0; k < 3; ++k) a.sigma[k][k] = GQ(sigma_signs[k]);
    return a;
}

const std::array<long, 3> S21 = {1, 1, -1};
const std::array<long, 3> S12 = {1, -1, -1};
const std::array<long, 3> SID = {1, 1, 1};

std::map<std::string, Algebra> make_registry() {
    std::map<std::string, Algebra> r;
    r["A1"] = build("A1", {}, S21);
    r["A2"] = build("A2", {{2, 2, {0, 1, 0}, {}}}, S21);
    r["A3"] = build("A3", {{1, 1, {0, 1, 0}, {}}}, S21);
    r["A4"] = build("A4", {{1, 1, {0, 1, 0}, {}}, {2, 2, {-1, 1, 0}, {}}}, S21);
    r["A5"] = build("A5",
                    {{1, 2, {0, 1, 0}, {}}, {2, 1, {0, -1, 0}, {}}, {2, 2, {1, 0, 0}, {}}}, S21);
    r["S1"] = build("S1", {}, S12);
    r["S2"] = build("S2",
                    {{1, 2, {0, 1, 0}, {}}, {2, 1, {0, -1, 0}, {}}, {2, 2, {1, 0, 0}, {}}}, S12);
    r["J1"] = build("J1", {}, SID);
    r["J2"] = build("J2", {{1, 1, {0, 1, 0}, {}}, {2, 2, {0, 0, 1}, {}}}, SID);
    r["J3"] = build("J3",
                    {{1, 1, {0, 1, 0}, {}}, {1, 2, {0, 0, 1}, {}}, {2, 1, {0, 0, 1}, {}}}, SID);
    r["J4"] = build("J4", {{1, 1, {0, 0, 1}, {}}}, SID);
    r["J5"] = build("J5", {{1, 1, {0, 1, 0}, {}}}, SID);
    r["J6"] = build("J6", {{1, 1, {1, 0, 0}, {}}, {2, 2, {1, 0, 0}, {}}}, SID);
    return r;
}

const std::map<std::string, Algebra>& registry() {
    static const std::map<std::string, Algebra> r = make_registry();
    return r;
}

}  // namespace

const std::vector<std::string>& all_labels() {
    static const std::vector<std::string> labels = {"J1", "J2", "J3", "J4", "J5", "J6", "A1",
                                                    "A2", "A3", "A4", "A5", "S1", "S2"};
    return labels;
}

const std::vector<std::string>& noncommutative_labels() {
    static const std::vector<std::string> labels = {"A1", "A2", "A3", "A4", "A5", "S1", "S2"};
    return labels;
}

Algebra canonical_algebra(const std::string& label) {
    auto it = registry().find(label);
    if (it == registry().end()) throw UnknownLabel(label);
    return it->second;
}

bool is_known_label(const std::string& label) { return registry().count(label) > 0; }

}  // namespace structalg
