#include "structalg/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "structalg/errors.hpp"

namespace structalg {

namespace fs = std::filesystem;

std::string fixture_root() {
    if (const char* env = std::getenv("STRUCTALG_DATA_DIR"); env && *env) return env;
    fs::path rel = "data/fixtures";
    fs::path cur = fs::current_path();
    for (int up = 0; up < 4; ++up) {
        if (fs::is_directory(cur / rel)) return (cur / rel).string();
        if (!cur.has_parent_path() || cur.parent_path() == cur) break;
        cur = cur.parent_path();
    }
#ifdef STRUCTALG_SOURCE_DATA_DIR
    return STRUCTALG_SOURCE_DATA_DIR;
#else
    return rel.string();
#endif
}

nlohmann::json load_fixture(const std::string& name) {
    // "levi/F_X" is a view onto the Levi data stored in "ak/F_X".
    if (constexpr std::string_view kLevi = "levi/"; name.rfind(kLevi, 0) == 0) {
        nlohmann::json ak = load_fixture("ak/" + name.substr(kLevi.size()));
        return nlohmann::json{{"S", ak.at("levi_s")}, {"R", ak.at("radical")}};
    }
    fs::path path = fs::path(fixture_root()) / (name + ".json");
    std::ifstream in(path);
    if (!in) throw UnknownFixture(name);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("fixture " + name + " is not valid JSON");
    return j;
}

}  // namespace structalg
