#pragma once

#include <string>
#include <string_view>

#include "tilecs/periodic_graph.hpp"

namespace tilecs {

// Tiling-spec JSON. Unknown fields are rejected at every level.
PeriodicGraphSpec parse_spec_json(std::string_view text);
PeriodicGraphSpec load_spec_file(const std::string& path);

// Canonical serialization: fixed key order, two-space indent, trailing newline.
std::string spec_to_json(const PeriodicGraphSpec& spec);

}  // namespace tilecs
