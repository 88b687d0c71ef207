#pragma once

#include <string>

#include "regraph/graph.hpp"

namespace regraph {

/// Standard graph6, short form only (1 <= n <= 62): byte n+63, then the
/// upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2), ...,
/// packed big-endian into 6-bit groups offset by 63.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. The nominal degree of the result is taken from
/// vertex 0; callers that require regularity run degree_check afterwards.
/// Throws std::invalid_argument on malformed input (bad length, byte out of
/// range, unsupported size).
Graph graph6_decode(const std::string& line);

}  // namespace regraph
