#pragma once

#include <string>

#include "json.hpp"

namespace structalg {

/// Root directory holding the fixture data files.  Resolution order:
/// the STRUCTALG_DATA_DIR environment variable, a ./data/fixtures directory
/// relative to the current directory (walking up a few levels), then the
/// compiled-in source-tree location.
std::string fixture_root();

/// Loads a fixture by name, e.g. "algebras/A4" or "ak/F_S2" (".json" is
/// appended).  Throws UnknownFixture if the file is missing and ParseError
/// if it is not valid JSON.
nlohmann::json load_fixture(const std::string& name);

}  // namespace structalg
