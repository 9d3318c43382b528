#include "gclab/graph6.hpp"

#include <vector>

namespace gclab {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());

    auto value_at = [&](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte out of range", i);
        return c - 63;
    };

    if (text.empty()) throw Graph6ParseError("empty graph6 string", 0);

    std::size_t pos = 0;
    long n;
    if (text[0] != 126) {
        n = value_at(0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw Graph6ParseError("graph order exceeds capacity (64 vertices)", 0);
        if (text.size() < 4) throw Graph6ParseError("truncated graph order", text.size());
        n = (static_cast<long>(value_at(1)) << 12) | (value_at(2) << 6) | value_at(3);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Graph6ParseError("graph order exceeds capacity (64 vertices)", 0);

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos < nbytes)
        throw Graph6ParseError("truncated adjacency data", text.size());
    if (text.size() - pos > nbytes)
        throw Graph6ParseError("trailing garbage after graph6 data", pos + nbytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = value_at(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; k < nbytes * 6; ++k) {
        const int byte = value_at(pos + k / 6);
        if ((byte >> (5 - k % 6)) & 1)
            throw Graph6ParseError("nonzero padding bits", pos + k / 6);
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace gclab
