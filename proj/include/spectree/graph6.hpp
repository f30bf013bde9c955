#pragma once
// graph6 text encoding. Header byte n+63 for n <= 62, or '~' plus three
// bytes of 6-bit groups for 63 <= n <= 64 (the format allows more, this
// library caps at 64). Payload: upper-triangle bits in column-major pair
// order (0,1),(0,2),(1,2),(0,3),... packed 6 per byte, each byte offset
// by 63.

#include <istream>
#include <optional>
#include <string>

#include "spectree/graph.hpp"

namespace spectree {

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph decode_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size())
            throw Graph6ParseError("truncated graph6 string", pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("invalid graph6 character", pos);
        ++pos;
        return c - 63;
    };
    long long n;
    int first = next();
    if (first == 63) {  // '~'
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = first;
    }
    if (n > kMaxOrder)
        throw Graph6ParseError("graph6 order " + std::to_string(n) + " exceeds 64", 0);
    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
            --nbits;
        }
    if (pos != text.size())
        throw Graph6ParseError("trailing characters after graph6 payload", pos);
    return g;
}

// Reads the next graph6 line from a stream, skipping blank lines and the
// conventional ">>graph6<<" header.
inline std::optional<Graph> read_graph6_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line = line.substr(10);
            if (line.empty()) continue;
        }
        return decode_graph6(line);
    }
    return std::nullopt;
}

}  // namespace spectree
