#pragma once

#include <string>

#include "mvkit/cartan.hpp"

namespace mvkit {

// Built-in Cartan data with minimal symmetrizers: A1..A4, B2, B3, C2, C3,
// D4, F4, G2. Error BadInput for unknown names.
CartanPair preset_pair(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace mvkit
