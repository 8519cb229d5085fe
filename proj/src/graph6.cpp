#include "mis/graph6.hpp"

#include <cstddef>

#include "mis/errors.hpp"

namespace mis {

namespace {

constexpr int kBias = 63;
constexpr char kLongSize = '~';

bool printable(char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view line)
{
    if (line.empty()) throw Graph6Error(0, "empty string");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] == kLongSize) {
        if (line.size() >= 2 && line[1] == kLongSize)
            throw Graph6Error(1, "eight-byte sizes are not supported");
        if (line.size() < 4) throw Graph6Error(line.size(), "truncated size field");
        for (pos = 1; pos < 4; ++pos) {
            if (!printable(line[pos])) throw Graph6Error(pos, "malformed size byte");
            n = (n << 6) | (line[pos] - kBias);
        }
        if (n <= 62) throw Graph6Error(1, "non-canonical size field");
    } else {
        if (!printable(line[0])) throw Graph6Error(0, "malformed size byte");
        n = line[0] - kBias;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));

    const int order = static_cast<int>(n);
    const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() < pos + body) throw Graph6Error(line.size(), "truncated edge data");
    if (line.size() > pos + body) throw Graph6Error(pos + body, "trailing bytes after edge data");

    GraphBuilder b(order);
    std::size_t k = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            const std::size_t at = pos + k / 6;
            if (k % 6 == 0 && !printable(line[at])) throw Graph6Error(at, "byte outside graph6 range");
            if (((line[at] - kBias) >> (5 - k % 6)) & 1) b.add_edge(u, v);
        }
    if (bits % 6 != 0) {
        const std::size_t at = pos + body - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (!printable(line[at])) throw Graph6Error(at, "byte outside graph6 range");
        if ((line[at] - kBias) & ((1 << pad) - 1)) throw Graph6Error(at, "non-zero padding bits");
    }
    return std::move(b).build();
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(kLongSize);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

} // namespace mis
