#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanlab/errors.hpp"

namespace turanlab {

constexpr int kMaxVertices = 64;

inline uint64_t bit(int v) { return uint64_t{1} << v; }

// Mask with bits 0..n-1 set.
inline uint64_t full_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// Simple undirected graph on at most 64 vertices. One adjacency word per
// vertex, so neighbourhood intersection is a single AND. Immutable in spirit:
// construction helpers below build graphs; the counting and search code only
// ever reads them.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > kMaxVertices)
            throw TooLarge("graph order " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxVertices));
        adj_.assign(static_cast<size_t>(n), 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }
    uint64_t vertex_mask() const { return full_mask(order()); }

    bool adjacent(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("InvalidEdge", "loops are not allowed");
        if (adjacent(u, v)) return;
        adj_[static_cast<size_t>(u)] |= bit(v);
        adj_[static_cast<size_t>(v)] |= bit(u);
        ++edge_count_;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (!adjacent(u, v)) return;
        adj_[static_cast<size_t>(u)] &= ~bit(v);
        adj_[static_cast<size_t>(v)] &= ~bit(u);
        --edge_count_;
    }

    // Subgraph induced by the vertices in `mask`, relabeled to 0..k-1 in
    // increasing order of original index.
    Graph induced(uint64_t mask) const {
        mask &= vertex_mask();
        std::vector<int> keep;
        for (int v = 0; v < order(); ++v)
            if (mask & bit(v)) keep.push_back(v);
        Graph out(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i) {
            for (size_t j = i + 1; j < keep.size(); ++j) {
                if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
        return out;
    }

    Graph without_vertex(int v) const {
        check_vertex(v);
        return induced(vertex_mask() & ~bit(v));
    }

    // Relabel: vertex v of the result is old vertex perm[v].
    Graph relabeled(const std::vector<int>& perm) const {
        Graph out(order());
        for (int i = 0; i < order(); ++i)
            for (int j = i + 1; j < order(); ++j)
                if (adjacent(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    out.add_edge(i, j);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count_));
        for (int u = 0; u < order(); ++u) {
            uint64_t higher = adj_[static_cast<size_t>(u)] & ~full_mask(u + 1);
            while (higher) {
                int v = std::countr_zero(higher);
                higher &= higher - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw Error("InvalidVertex", "vertex " + std::to_string(v) + " outside 0.." +
                                            std::to_string(order() - 1));
    }

    std::vector<uint64_t> adj_;
    int edge_count_ = 0;
};

// Ordered class sizes of a complete multipartite graph. Sizes may exceed what
// fits in 64 vertices; only materialization enforces the cap.
class PartSizes {
public:
    PartSizes() = default;
    explicit PartSizes(std::vector<int64_t> sizes) : sizes_(std::move(sizes)) {
        for (int64_t s : sizes_)
            if (s < 1) throw Error("InvalidPartSizes", "class sizes must be >= 1");
    }

    const std::vector<int64_t>& sizes() const { return sizes_; }
    size_t count() const { return sizes_.size(); }

    int64_t total() const {
        int64_t t = 0;
        for (int64_t s : sizes_) t += s;
        return t;
    }

    // Balanced partition of n into `parts` classes, larger classes first.
    // Classes that would be empty are dropped.
    static PartSizes balanced(int64_t n, int parts);

private:
    std::vector<int64_t> sizes_;
};

// graph6 interchange (the header-free variant emitted by geng and friends).
Graph graph_from_graph6(std::string_view text);
std::string graph_to_graph6(const Graph& g);

// The complete (k-1)-partite graph on n vertices with class sizes differing by
// at most one; larger classes first, vertices numbered class by class.
Graph turan_graph(int n, int parts);

Graph complete_multipartite(const PartSizes& parts);

// Each vertex v becomes t mutually non-adjacent clones (v,0)..(v,t-1), mapped
// to index v*t+i; clones of adjacent vertices are all adjacent.
Graph blow_up(const Graph& g, int t);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

}  // namespace turanlab
