#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/graph.hpp"

namespace curvex {

// graph6: printable-ASCII encoding used by the standard small-graph
// generators. Header encodes n (short form for n <= 62, '~'-prefixed long
// forms above); body packs the upper triangle in column-major order,
// big-endian six bits per byte, offset by 63. Parsing is strict: exact
// length, bytes in [63,126], zero padding bits.

namespace g6detail {

inline int bit_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

inline std::size_t body_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return std::size_t((bits + 5) / 6);
}

}  // namespace g6detail

inline Graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw MalformedGraph6("empty graph6 string", 0);

    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw MalformedGraph6("truncated graph6 string", i);
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw MalformedGraph6("graph6 byte out of range", i);
        return int(c) - 63;
    };

    long long n;
    if (text[0] != '~') {
        n = byte_at(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
        pos = 4;
    } else {
        n = 0;
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
        pos = 8;
    }
    if (n < 1) throw MalformedGraph6("graph6 order must be >= 1", 0);
    if (n > 5'000'000) throw MalformedGraph6("graph6 order unreasonably large", 0);

    const std::size_t need = g6detail::body_bytes(n);
    if (text.size() != pos + need)
        throw MalformedGraph6("graph6 body has wrong length", text.size() < pos + need ? text.size() : pos + need);

    const long long nbits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    long long b = 0;
    int ei = 0, ej = 1;  // walks pairs (0,1), (0,2), (1,2), (0,3), ...
    for (std::size_t k = 0; k < need; ++k) {
        int val = byte_at(pos + k);
        for (int s = 5; s >= 0; --s, ++b) {
            int bit = (val >> s) & 1;
            if (b >= nbits) {
                if (bit) throw MalformedGraph6("nonzero padding bits", pos + k);
                continue;
            }
            if (bit) edges.emplace_back(ei, ej);
            if (++ei == ej) {
                ei = 0;
                ++ej;
            }
        }
    }
    return Graph(int(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 0x3f) + 63));
        out.push_back(char(((n >> 6) & 0x3f) + 63));
        out.push_back(char((n & 0x3f) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(char(((n >> s) & 0x3f) + 63));
    }
    const std::size_t need = g6detail::body_bytes(n);
    std::vector<unsigned char> body(need, 0);
    for (auto [i, j] : g.edges()) {
        int b = g6detail::bit_index(i, j);
        body[b / 6] |= static_cast<unsigned char>(1u << (5 - b % 6));
    }
    for (unsigned char c : body) out.push_back(char(c + 63));
    return out;
}

}  // namespace curvex
