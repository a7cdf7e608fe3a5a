#pragma once

#include <string>

#include "steinerlab/designs.hpp"

namespace steinerlab {

/// Canonical design JSON: {"t":2,"n":3,"v":7,"blocks":[[1,2,3],...]},
/// 1-indexed points, blocks canonicalized on output.
std::string design_to_json(const SteinerSystem& sys);

/// Parses design JSON. Blocks may appear in any order; they are
/// canonicalized. Throws std::invalid_argument on malformed input.
SteinerSystem design_from_json(const std::string& text);

SteinerSystem load_design_file(const std::string& path);
void save_design_file(const SteinerSystem& sys, const std::string& path);

}  // namespace steinerlab
