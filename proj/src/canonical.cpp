#include "turanlab/canonical.hpp"

#include <algorithm>
#include <utility>

namespace turanlab {

namespace {

using Partition = std::vector<std::vector<int>>;

// Upper-triangle bits packed big-endian so lexicographic order equals
// word-wise integer order.
struct PackedBits {
    std::vector<uint64_t> words;
    size_t nbits = 0;

    void push(bool b) {
        size_t w = nbits >> 6;
        if (w == words.size()) words.push_back(0);
        if (b) words[w] |= uint64_t{1} << (63 - (nbits & 63));
        ++nbits;
    }
};

// Compares the first a.nbits bits of `a` against the same positions of `b`.
int prefix_cmp(const PackedBits& a, const PackedBits& b) {
    size_t nwords = (a.nbits + 63) / 64;
    for (size_t i = 0; i < nwords; ++i) {
        uint64_t x = a.words[i];
        uint64_t y = i < b.words.size() ? b.words[i] : 0;
        if (i + 1 == nwords && (a.nbits & 63) != 0) {
            uint64_t mask = ~uint64_t{0} << (64 - (a.nbits & 63));
            x &= mask;
            y &= mask;
        }
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

// Splits cells by neighbour counts into every cell until stable. Sub-cells are
// ordered by count, so the refined partition depends only on the structure of
// the graph, never on vertex labels.
void refine(const Graph& g, Partition& p) {
    bool again = true;
    while (again) {
        again = false;
        for (size_t s = 0; s < p.size() && !again; ++s) {
            uint64_t smask = 0;
            for (int v : p[s]) smask |= bit(v);
            for (size_t d = 0; d < p.size(); ++d) {
                if (p[d].size() <= 1) continue;
                std::vector<std::pair<int, int>> cv;
                cv.reserve(p[d].size());
                bool split = false;
                for (int v : p[d]) {
                    int c = std::popcount(g.neighbors(v) & smask);
                    if (!cv.empty() && c != cv.front().first) split = true;
                    cv.emplace_back(c, v);
                }
                if (!split) continue;
                std::stable_sort(cv.begin(), cv.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                Partition np;
                np.reserve(p.size() + 2);
                for (size_t i = 0; i < d; ++i) np.push_back(std::move(p[i]));
                size_t lo = 0;
                while (lo < cv.size()) {
                    size_t hi = lo;
                    std::vector<int> cell;
                    while (hi < cv.size() && cv[hi].first == cv[lo].first) cell.push_back(cv[hi++].second);
                    np.push_back(std::move(cell));
                    lo = hi;
                }
                for (size_t i = d + 1; i < p.size(); ++i) np.push_back(std::move(p[i]));
                p = std::move(np);
                again = true;
                break;
            }
        }
    }
}

bool are_twins(const Graph& g, int u, int v) {
    uint64_t m = ~(bit(u) | bit(v));
    return (g.neighbors(u) & m) == (g.neighbors(v) & m);
}

struct CanonSearch {
    const Graph& g;
    PackedBits best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run() {
        int n = g.order();
        Partition p{std::vector<int>(static_cast<size_t>(n))};
        for (int v = 0; v < n; ++v) p[0][static_cast<size_t>(v)] = v;
        refine(g, p);
        search(p);
    }

    void search(const Partition& p) {
        std::vector<int> prefix;
        size_t ci = 0;
        while (ci < p.size() && p[ci].size() == 1) prefix.push_back(p[ci++][0]);

        if (have_best && !prefix.empty()) {
            PackedBits bits;
            for (size_t j = 1; j < prefix.size(); ++j)
                for (size_t i = 0; i < j; ++i) bits.push(g.adjacent(prefix[i], prefix[j]));
            if (prefix_cmp(bits, best) > 0) return;
        }

        if (ci == p.size()) {
            PackedBits bits;
            for (size_t j = 1; j < prefix.size(); ++j)
                for (size_t i = 0; i < j; ++i) bits.push(g.adjacent(prefix[i], prefix[j]));
            if (!have_best || prefix_cmp(bits, best) < 0) {
                best = std::move(bits);
                best_perm = prefix;
                have_best = true;
            }
            return;
        }

        const std::vector<int>& target = p[ci];
        std::vector<int> tried;
        for (int v : target) {
            bool dup = false;
            for (int u : tried)
                if (are_twins(g, u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);

            Partition q;
            q.reserve(p.size() + 1);
            for (size_t i = 0; i < ci; ++i) q.push_back(p[i]);
            q.push_back({v});
            std::vector<int> rest;
            rest.reserve(target.size() - 1);
            for (int u : target)
                if (u != v) rest.push_back(u);
            q.push_back(std::move(rest));
            for (size_t i = ci + 1; i < p.size(); ++i) q.push_back(p[i]);
            refine(g, q);
            search(q);
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    CanonSearch s(g);
    s.run();
    return s.best_perm;
}

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_graph6(const Graph& g) { return graph_to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace turanlab
