#include "turanlab/graph.hpp"

#include <algorithm>

namespace turanlab {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int checked_payload_byte(char c, size_t pos) {
    int v = static_cast<unsigned char>(c);
    if (v < kG6Lo || v > kG6Hi)
        throw MalformedGraph6("byte " + std::to_string(pos) + " outside graph6 range");
    return v - kG6Lo;
}

}  // namespace

Graph graph_from_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw MalformedGraph6("empty graph6 record");

    size_t pos = 0;
    int64_t n = 0;
    int first = static_cast<unsigned char>(text[0]);
    if (first < kG6Lo || first > kG6Hi) throw MalformedGraph6("size byte outside graph6 range");
    if (first < kG6Hi) {
        n = first - kG6Lo;
        pos = 1;
    } else {
        // '~' prefix: 18-bit size (the '~~' 36-bit form would start far above 64).
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kG6Hi)
            throw TooLarge("graph6 record uses the 36-bit size form; max order is 64");
        if (text.size() < 4) throw MalformedGraph6("truncated graph6 size field");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_payload_byte(text[i], i);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw TooLarge("graph6 record encodes " + std::to_string(n) + " vertices; max is 64");

    int order = static_cast<int>(n);
    size_t nbits = static_cast<size_t>(order) * (order - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() != pos + nbytes)
        throw MalformedGraph6("graph6 record has wrong length for " + std::to_string(order) +
                              " vertices");

    Graph g(order);
    size_t k = 0;
    int cur = 0, left = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (left == 0) {
                cur = checked_payload_byte(text[pos], pos);
                ++pos;
                left = 6;
            }
            if (cur & (1 << (left - 1))) g.add_edge(i, j);
            --left;
        }
    }
    if (left > 0 && (cur & ((1 << left) - 1)) != 0)
        throw MalformedGraph6("nonzero padding bits in graph6 record");
    return g;
}

std::string graph_to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int cur = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(cur + kG6Lo));
                cur = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + kG6Lo));
    return out;
}

PartSizes PartSizes::balanced(int64_t n, int parts) {
    if (parts < 1) throw Error("InvalidPartSizes", "need at least one class");
    if (n < 0) throw Error("InvalidPartSizes", "negative order");
    std::vector<int64_t> sizes;
    int64_t q = n / parts, r = n % parts;
    for (int i = 0; i < parts; ++i) {
        int64_t s = q + (i < r ? 1 : 0);
        if (s > 0) sizes.push_back(s);
    }
    return PartSizes(sizes);
}

Graph complete_multipartite(const PartSizes& parts) {
    int64_t total = parts.total();
    if (total > kMaxVertices)
        throw TooLarge("multipartite graph on " + std::to_string(total) + " vertices");
    Graph g(static_cast<int>(total));
    int start = 0;
    std::vector<std::pair<int, int>> ranges;
    for (int64_t s : parts.sizes()) {
        ranges.emplace_back(start, start + static_cast<int>(s));
        start += static_cast<int>(s);
    }
    for (size_t a = 0; a < ranges.size(); ++a)
        for (size_t b = a + 1; b < ranges.size(); ++b)
            for (int u = ranges[a].first; u < ranges[a].second; ++u)
                for (int v = ranges[b].first; v < ranges[b].second; ++v) g.add_edge(u, v);
    return g;
}

Graph turan_graph(int n, int parts) {
    if (n > kMaxVertices) throw TooLarge("Turan graph on " + std::to_string(n) + " vertices");
    if (n == 0) return Graph(0);
    return complete_multipartite(PartSizes::balanced(n, parts));
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1) throw Error("InvalidBlowUp", "t must be >= 1");
    int64_t total = static_cast<int64_t>(g.order()) * t;
    if (total > kMaxVertices)
        throw TooLarge("blow-up on " + std::to_string(total) + " vertices");
    Graph out(static_cast<int>(total));
    for (auto [u, v] : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) out.add_edge(u * t + i, v * t + j);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    if (n < 3) {
        if (n == 2) g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace turanlab
