#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "excycle/graph.hpp"

namespace excycle {

class Graph6Error : public Error {
public:
    using Error::Error;
};

// graph6 text format: header byte n+63 (short form, n <= 62), then the
// upper-triangle adjacency bits in column-major order, six bits per byte,
// each byte offset by 63, final byte zero-padded.

inline std::string g6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw Graph6Error("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph g6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw Graph6Error("graph6 long-form header not supported (n > 62)");
    if (header < 63 || header > 125)
        throw Graph6Error("invalid graph6 header byte");
    const int n = header - 63;
    if (n == 0) throw Graph6Error("graph on 0 vertices rejected");

    const long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((pair_bits + 5) / 6);
    if (text.size() < 1 + payload) throw Graph6Error("truncated graph6 payload");
    if (text.size() > 1 + payload) throw Graph6Error("trailing data after graph6 payload");

    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    std::size_t byte_idx = 1;
    int cur = 0, bits_left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                const unsigned char c = static_cast<unsigned char>(text[byte_idx++]);
                if (c < 63 || c > 126) throw Graph6Error("graph6 payload byte out of range");
                cur = c - 63;
                bits_left = 6;
            }
            if ((cur >> (bits_left - 1) & 1) != 0) {
                adj[static_cast<std::size_t>(i)] |= vertex_bit(j);
                adj[static_cast<std::size_t>(j)] |= vertex_bit(i);
            }
            --bits_left;
        }
    }
    if (bits_left > 0 && (cur & ((1 << bits_left) - 1)) != 0)
        throw Graph6Error("nonzero padding bits in final graph6 byte");
    return Graph::from_adjacency(n, std::move(adj));
}

}  // namespace excycle
