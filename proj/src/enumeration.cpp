#include "turanlab/enumeration.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "turanlab/canonical.hpp"
#include "turanlab/counting.hpp"

namespace turanlab {

namespace {

struct Rep {
    Graph graph;        // canonically labeled
    std::string key;    // graph6 of the canonical form
};

// Children of one parent that survive the F-filter and the canonical-deletion
// test, deduplicated within the parent (across parents no duplicates arise:
// an accepted child determines its parent's isomorphism class).
std::vector<Rep> children_of(const Rep& parent, const Graph& f) {
    int pn = parent.graph.order();
    int cn = pn + 1;
    std::vector<Rep> out;
    std::unordered_set<std::string> seen;
    uint64_t subsets = uint64_t{1} << pn;
    for (uint64_t s = 0; s < subsets; ++s) {
        Graph grown(cn);
        for (auto [u, v] : parent.graph.edges()) grown.add_edge(u, v);
        uint64_t nb = s;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            grown.add_edge(u, pn);
        }
        // The parent is F-free, so any copy of f must use the new vertex.
        if (copy_through_vertex_exists(grown, f, pn)) continue;

        std::vector<int> label = canonical_labeling(grown);
        int deletion_choice = label[static_cast<size_t>(cn - 1)];
        if (deletion_choice != pn &&
            canonical_graph6(grown.without_vertex(deletion_choice)) != parent.key)
            continue;

        Graph canon = grown.relabeled(label);
        std::string key = graph_to_graph6(canon);
        if (seen.insert(key).second) out.push_back({std::move(canon), std::move(key)});
    }
    return out;
}

std::vector<Rep> next_level(const std::vector<Rep>& parents, const Graph& f, int threads) {
    std::vector<Rep> out;
    if (threads <= 1 || parents.size() < 2) {
        for (const Rep& p : parents) {
            auto kids = children_of(p, f);
            out.insert(out.end(), std::make_move_iterator(kids.begin()),
                       std::make_move_iterator(kids.end()));
        }
    } else {
        int nt = std::min<int>(threads, static_cast<int>(parents.size()));
        std::vector<std::vector<Rep>> partial(static_cast<size_t>(nt));
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t) {
            pool.emplace_back([&, t] {
                for (size_t i = static_cast<size_t>(t); i < parents.size();
                     i += static_cast<size_t>(nt)) {
                    auto kids = children_of(parents[i], f);
                    auto& mine = partial[static_cast<size_t>(t)];
                    mine.insert(mine.end(), std::make_move_iterator(kids.begin()),
                                std::make_move_iterator(kids.end()));
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& chunk : partial)
            out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
    }
    std::sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) { return a.key < b.key; });
    return out;
}

}  // namespace

void enumerate_free_graphs(int n, const Graph& f, const std::function<void(const Graph&)>& sink,
                           int threads) {
    if (n < 0) throw Error("InvalidArgument", "negative order");
    if (n > kEnumerationCap)
        throw TooLarge("built-in enumeration capped at " + std::to_string(kEnumerationCap) +
                       " vertices; use an external stream for n = " + std::to_string(n));

    // Every graph contains the 0-vertex pattern, so nothing is free of it.
    if (f.order() == 0) return;

    std::vector<Rep> level;
    {
        Graph root(0);
        level.push_back({root, graph_to_graph6(root)});
    }
    for (int sz = 1; sz <= n; ++sz) level = next_level(level, f, threads);
    for (const Rep& r : level) sink(r.graph);
}

std::vector<Graph> enumerate_free_graphs(int n, const Graph& f, int threads) {
    std::vector<Graph> out;
    enumerate_free_graphs(n, f, [&](const Graph& g) { out.push_back(g); }, threads);
    return out;
}

void filter_graph6_stream(std::istream& in, const Graph& f,
                          const std::function<void(const std::string&, const Graph&)>& sink) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph_from_graph6(line);
        } catch (const Error& e) {
            throw MalformedGraph6("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!contains_copy(g, f)) sink(line, g);
    }
}

std::vector<Graph> filter_graph6_stream(std::istream& in, const Graph& f) {
    std::vector<Graph> out;
    filter_graph6_stream(in, f, [&](const std::string&, const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace turanlab
