#ifndef GCLAB_GRAPH6_HPP
#define GCLAB_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gclab/graph.hpp"

namespace gclab {

/// Raised by parse_graph6; `offset` is the byte index of the defect within
/// the input (after any ">>graph6<<" header).
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 text encoding of a labelled graph: N(n) followed by the upper
/// triangle of the adjacency matrix in column order, six bits per byte,
/// each byte offset by 63.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6.  Accepts and strips a leading ">>graph6<<" header,
/// accepts orders up to 64 in either the short or the long N(n) form, and
/// rejects malformed input (bad length, out-of-range byte, nonzero padding,
/// trailing garbage) with the offset of the defect.
Graph parse_graph6(std::string_view text);

}  // namespace gclab

#endif
