#pragma once

#include <stdexcept>
#include <string>

#include "ginertia/graph.hpp"

namespace ginertia {

/// Raised on malformed graph6 input; `offset` is the byte position of the
/// first offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6: " + what + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

/// graph6 text form: byte N+63 for order <= 62 ('~' + three 6-bit bytes
/// above), then the upper triangle column-major, packed into 6-bit chunks,
/// each +63, zero padded.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

/// DOT text for visual inspection.
std::string to_dot(const Graph& g);

}  // namespace ginertia
