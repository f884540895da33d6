#include "sombor/graph6.hpp"

#include <vector>

namespace sombor {

namespace {

constexpr int kOffset = 63;
constexpr char kLongFormMarker = '~';

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t payload_bytes(std::size_t n) { return (pair_count(n) + 5) / 6; }

int sextet(char c, std::size_t pos) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
        throw Graph6Error("byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                          " is outside the printable range 63..126");
    }
    return b - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 record");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] == kLongFormMarker) {
        if (text.size() >= 2 && text[1] == kLongFormMarker) {
            throw Graph6Error("8-byte order header is not supported (order above " +
                              std::to_string(kGraph6MaxOrder) + ")");
        }
        if (text.size() < 4) throw Graph6Error("truncated long-form order header");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[i], i));
        if (n < 63) throw Graph6Error("long-form header encodes order " + std::to_string(n) + " < 63");
        pos = 4;
    } else {
        const int v = sextet(text[0], 0);
        if (v > 62) throw Graph6Error("invalid leading byte");
        n = static_cast<std::size_t>(v);
        pos = 1;
    }

    const std::size_t expected = payload_bytes(n);
    const std::size_t actual = text.size() - pos;
    if (actual != expected) {
        throw Graph6Error("payload for order " + std::to_string(n) + " must be " + std::to_string(expected) +
                          " bytes, got " + std::to_string(actual));
    }

    std::vector<Edge> edges;
    const std::size_t total = pair_count(n);
    std::size_t bit = 0;
    Vertex u = 0;
    Vertex v = 1;
    for (std::size_t i = 0; i < expected; ++i) {
        const int byte = sextet(text[pos + i], pos + i);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (byte >> shift) & 1;
            if (bit >= total) {
                if (set) throw Graph6Error("nonzero padding bit in final payload byte");
                continue;
            }
            if (set) edges.push_back({u, v});
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Graph6Error("order " + std::to_string(n) + " exceeds graph6 limit " +
                          std::to_string(kGraph6MaxOrder));
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        out.push_back(kLongFormMarker);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(kOffset + ((n >> shift) & 0x3f)));
        }
    }

    std::vector<unsigned char> payload(payload_bytes(n), 0);
    for (const Edge& e : g.edges()) {
        // Column-wise index of (u, v) with u < v.
        const std::size_t bit = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
        payload[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
    }
    for (unsigned char b : payload) out.push_back(static_cast<char>(kOffset + b));
    return out;
}

}  // namespace sombor
