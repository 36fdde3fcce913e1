#pragma once

// Deterministic JSON text: two-space indentation, arrays of scalars on one line.

#include <string>

#include "json.hpp"

namespace orbitcat::io {

using Json = nlohmann::ordered_json;

std::string pretty(const Json& j);

}  // namespace orbitcat::io
