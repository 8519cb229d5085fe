#pragma once

#include <string>
#include <string_view>

#include "mis/graph.hpp"

namespace mis {

/// Parses one graph6 string (no ">>graph6<<" header, no newline).
/// Throws Graph6Error naming the offending byte offset, or CapacityError when
/// the encoded order exceeds kMaxVertices.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding with zero padding bits.
std::string encode_graph6(const Graph& g);

} // namespace mis
