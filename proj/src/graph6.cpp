#include "regraph/graph6.hpp"

#include <stdexcept>

namespace regraph {

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 62) throw std::invalid_argument("graph6_encode: n out of short-form range");
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    std::string out;
    out.reserve(1 + nbytes);
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6_decode: empty line");
    const int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 1 || n > 62) throw std::invalid_argument("graph6_decode: unsupported vertex count byte");
    const int nbits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() != expect) throw std::invalid_argument("graph6_decode: bad length");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int i = 0, j = 1;
    for (std::size_t b = 1; b < line.size(); ++b) {
        const int byte = static_cast<unsigned char>(line[b]) - 63;
        if (byte < 0 || byte > 63) throw std::invalid_argument("graph6_decode: byte out of range");
        for (int s = 5; s >= 0; --s, ++bit) {
            if (bit >= nbits) {
                if ((byte >> s) & 1) throw std::invalid_argument("graph6_decode: nonzero padding");
                continue;
            }
            if ((byte >> s) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    int k = 0;
    for (const auto& [u, v] : edges)
        if (u == 0 || v == 0) ++k;
    return Graph(n, k, edges);
}

}  // namespace regraph
