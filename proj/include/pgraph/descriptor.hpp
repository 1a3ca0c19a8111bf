#pragma once

#include <string>
#include <string_view>

#include "pgraph/group.hpp"

namespace pgraph {

// Group descriptor text format: "Z<k>" atoms joined by "x", with "^e"
// repetition, e.g. "Z2^3 x Z4^2". Whitespace-insensitive; "1" denotes the
// trivial group. Throws std::invalid_argument with the offending position.
GroupSpec parse_group_descriptor(std::string_view text);

// Canonical rendering, e.g. "Z2^3 x Z4^2"; "1" for the trivial group.
std::string format_group_descriptor(const GroupSpec& g);

}  // namespace pgraph
