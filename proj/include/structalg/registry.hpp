#pragma once

#include <string>
#include <vector>

#include "structalg/algebra.hpp"

namespace structalg {

/// All thirteen canonical labels: J1..J6, A1..A5, S1, S2.
const std::vector<std::string>& all_labels();
/// The seven labels with non-identity involution: A1..A5, S1, S2.
const std::vector<std::string>& noncommutative_labels();

/// The canonical algebra for a label; throws UnknownLabel.
Algebra canonical_algebra(const std::string& label);

bool is_known_label(const std::string& label);

}  // namespace structalg
