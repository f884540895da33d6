#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

class Graph6Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// graph6 stores the upper triangle column by column: (0,1),(0,2),(1,2),(0,3),...
// six bits per byte, most significant first, each byte offset by 63.
// Orders up to 62 use the one-byte header; 63..258047 use '~' plus three bytes.

inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Parses one graph6 record. A single trailing '\n' (or "\r\n") is accepted.
/// The optional ">>graph6<<" header is not.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace sombor
