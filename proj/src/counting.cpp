#include "turanlab/counting.hpp"

#include <algorithm>
#include <thread>

#include "turanlab/canonical.hpp"

namespace turanlab {

uint64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i);
        if (r > UINT64_MAX) throw Overflow("binomial coefficient overflow");
    }
    return static_cast<uint64_t>(r);
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked::mul(r, static_cast<uint64_t>(i));
    return r;
}

namespace {

// Pattern vertices in a greedy connected order: maximum degree first, then
// repeatedly the vertex with the most already-ordered neighbours (ties broken
// by degree, then index). Isolated vertices and later components fall to the
// end naturally.
std::vector<int> pattern_order(const Graph& h) {
    int n = h.order();
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_anchor = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed & bit(v)) continue;
            int anchor = std::popcount(h.neighbors(v) & placed);
            int deg = h.degree(v);
            if (anchor > best_anchor || (anchor == best_anchor && deg > best_deg)) {
                best = v;
                best_anchor = anchor;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed |= bit(best);
    }
    return order;
}

struct HomSearch {
    const Graph& h;
    const Graph& g;
    std::vector<int> order;              // pattern vertices in search order
    std::vector<uint64_t> earlier_nbrs;  // per position: earlier positions adjacent in h
    std::vector<int> degrees;            // pattern degree per position

    HomSearch(const Graph& pattern, const Graph& host) : h(pattern), g(host) {
        order = pattern_order(h);
        int n = h.order();
        earlier_nbrs.assign(static_cast<size_t>(n), 0);
        degrees.assign(static_cast<size_t>(n), 0);
        for (int p = 0; p < n; ++p) {
            degrees[static_cast<size_t>(p)] = h.degree(order[static_cast<size_t>(p)]);
            for (int q = 0; q < p; ++q)
                if (h.adjacent(order[static_cast<size_t>(p)], order[static_cast<size_t>(q)]))
                    earlier_nbrs[static_cast<size_t>(p)] |= uint64_t{1} << q;
        }
    }

    uint64_t candidates(int pos, const std::vector<int>& image, uint64_t used) const {
        uint64_t cand = g.vertex_mask() & ~used;
        uint64_t nb = earlier_nbrs[static_cast<size_t>(pos)];
        while (nb) {
            int q = std::countr_zero(nb);
            nb &= nb - 1;
            cand &= g.neighbors(image[static_cast<size_t>(q)]);
        }
        return cand;
    }

    uint64_t count_from(int pos, std::vector<int>& image, uint64_t used) {
        int n = h.order();
        uint64_t cand = candidates(pos, image, used);
        int want = degrees[static_cast<size_t>(pos)];
        if (pos + 1 == n) {
            if (want == 0) return std::popcount(cand);
            uint64_t total = 0;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (g.degree(v) >= want) ++total;
            }
            return total;
        }
        uint64_t total = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.degree(v) < want) continue;
            image[static_cast<size_t>(pos)] = v;
            total = checked::add(total, count_from(pos + 1, image, used | bit(v)));
        }
        return total;
    }

    bool exists_from(int pos, std::vector<int>& image, uint64_t used) {
        if (pos == h.order()) return true;
        uint64_t cand = candidates(pos, image, used);
        int want = degrees[static_cast<size_t>(pos)];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.degree(v) < want) continue;
            image[static_cast<size_t>(pos)] = v;
            if (exists_from(pos + 1, image, used | bit(v))) return true;
        }
        return false;
    }

    // Existence with one position pinned to a fixed host vertex.
    bool exists_pinned(int pin_pos, int pin_vertex, int pos, std::vector<int>& image,
                       uint64_t used) {
        if (pos == h.order()) return true;
        uint64_t cand = candidates(pos, image, used);
        if (pos == pin_pos) cand &= bit(pin_vertex);
        int want = degrees[static_cast<size_t>(pos)];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.degree(v) < want) continue;
            image[static_cast<size_t>(pos)] = v;
            if (exists_pinned(pin_pos, pin_vertex, pos + 1, image, used | bit(v))) return true;
        }
        return false;
    }
};

uint64_t injective_homs(const Graph& h, const Graph& g, int threads) {
    if (h.order() == 0) return 1;  // the empty map
    if (h.order() > g.order()) return 0;
    HomSearch s(h, g);
    std::vector<int> image(static_cast<size_t>(h.order()), -1);
    if (threads <= 1 || h.order() == 1) return s.count_from(0, image, 0);

    // Shard the root branching by the image of the first pattern vertex;
    // exact addition makes the reduction order-independent.
    std::vector<int> roots;
    uint64_t cand = s.candidates(0, image, 0);
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (g.degree(v) >= s.degrees[0]) roots.push_back(v);
    }
    int nt = std::min<int>(threads, static_cast<int>(roots.size()));
    if (nt <= 1) return s.count_from(0, image, 0);
    std::vector<uint64_t> partial(static_cast<size_t>(nt), 0);
    std::vector<std::string> errors(static_cast<size_t>(nt));
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                HomSearch local(h, g);
                std::vector<int> img(static_cast<size_t>(h.order()), -1);
                uint64_t sum = 0;
                for (size_t i = static_cast<size_t>(t); i < roots.size();
                     i += static_cast<size_t>(nt)) {
                    img[0] = roots[i];
                    sum = checked::add(sum, local.count_from(1, img, bit(roots[i])));
                }
                partial[static_cast<size_t>(t)] = sum;
            } catch (const std::exception& e) {
                errors[static_cast<size_t>(t)] = e.what();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) throw Overflow(e);
    uint64_t total = 0;
    for (uint64_t p : partial) total = checked::add(total, p);
    return total;
}

bool is_complete(const Graph& g) {
    int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

uint64_t automorphisms_connected(const Graph& h) {
    if (is_complete(h)) return factorial(h.order());
    return injective_homs(h, h, 1);
}

uint64_t cliques_rec(const Graph& g, uint64_t cand, int depth) {
    if (depth == 0) return 1;
    if (depth == 1) return std::popcount(cand);
    uint64_t total = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t next = cand & g.neighbors(v);
        if (std::popcount(next) >= depth - 1) total += cliques_rec(g, next, depth - 1);
    }
    return total;
}

}  // namespace

CopyCount count_automorphisms(const Graph& h) {
    int n = h.order();
    if (n == 0) return 1;

    // Components first: |Aut| is the product over components, times m! for
    // each family of m isomorphic ones. Keeps edgeless patterns cheap.
    std::vector<uint64_t> comp_masks;
    uint64_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if (seen & bit(v)) continue;
        uint64_t comp = bit(v), frontier = bit(v);
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= h.neighbors(u) & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        comp_masks.push_back(comp);
        seen |= comp;
    }

    if (comp_masks.size() == 1) return automorphisms_connected(h);

    std::vector<std::pair<std::string, Graph>> comps;
    for (uint64_t mask : comp_masks) {
        Graph c = h.induced(mask);
        comps.emplace_back(canonical_graph6(c), std::move(c));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    uint64_t total = 1;
    size_t i = 0;
    while (i < comps.size()) {
        size_t j = i;
        while (j < comps.size() && comps[j].first == comps[i].first) ++j;
        uint64_t one = automorphisms_connected(comps[i].second);
        for (size_t t = i; t < j; ++t) total = checked::mul(total, one);
        total = checked::mul(total, factorial(static_cast<int>(j - i)));
        i = j;
    }
    return total;
}

CopyCount count_injective_homomorphisms(const Graph& h, const Graph& g, int threads) {
    return injective_homs(h, g, threads);
}

CopyCount count_copies(const Graph& h, const Graph& g, int threads) {
    uint64_t homs = injective_homs(h, g, threads);
    return homs / count_automorphisms(h);
}

CopyCount count_copies_through_vertex(const Graph& h, const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error("InvalidVertex", "vertex outside host graph");
    if (h.order() == 0) return 0;
    uint64_t with = injective_homs(h, g, 1);
    uint64_t without = injective_homs(h, g.without_vertex(v), 1);
    return (with - without) / count_automorphisms(h);
}

CopyCount count_cliques(int r, const Graph& g, int threads) {
    if (r < 1) throw Error("InvalidArgument", "clique order must be >= 1");
    if (r == 1) return static_cast<uint64_t>(g.order());
    if (threads <= 1 || g.order() < 2) return cliques_rec(g, g.vertex_mask(), r);

    int nt = std::min<int>(threads, g.order());
    std::vector<uint64_t> partial(static_cast<size_t>(nt), 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            uint64_t sum = 0;
            for (int v = t; v < g.order(); v += nt) {
                uint64_t higher = g.vertex_mask() & ~full_mask(v + 1);
                sum += cliques_rec(g, g.neighbors(v) & higher, r - 1);
            }
            partial[static_cast<size_t>(t)] = sum;
        });
    }
    for (auto& th : pool) th.join();
    uint64_t total = 0;
    for (uint64_t p : partial) total = checked::add(total, p);
    return total;
}

CopyCount count_cliques_through_vertex(int r, const Graph& g, int v) {
    if (r < 1) throw Error("InvalidArgument", "clique order must be >= 1");
    if (v < 0 || v >= g.order()) throw Error("InvalidVertex", "vertex outside host graph");
    if (r == 1) return 1;
    return cliques_rec(g, g.neighbors(v), r - 1);
}

CopyCount count_cliques_in_mask(int r, const Graph& g, uint64_t mask) {
    if (r < 1) throw Error("InvalidArgument", "clique order must be >= 1");
    if (r == 1) return std::popcount(mask & g.vertex_mask());
    return cliques_rec(g, mask & g.vertex_mask(), r);
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;  // -1 = uncolored

    bool solve(int colored, int max_used) {
        int n = g.order();
        if (colored == n) return true;
        // DSATUR choice: max saturation, then max degree, then min index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            int sat = std::popcount(neighbor_colors(v));
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t forbidden = neighbor_colors(pick);
        int limit = std::min(k, max_used + 1);  // at most one brand-new color
        for (int c = 0; c < limit; ++c) {
            if (forbidden & bit(c)) continue;
            color[static_cast<size_t>(pick)] = c;
            if (solve(colored + 1, std::max(max_used, c + 1))) return true;
            color[static_cast<size_t>(pick)] = -1;
        }
        return false;
    }

    uint64_t neighbor_colors(int v) const {
        uint64_t out = 0;
        uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[static_cast<size_t>(u)] >= 0) out |= bit(color[static_cast<size_t>(u)]);
        }
        return out;
    }
};

bool k_colorable(const Graph& g, int k) {
    if (k >= g.order()) return true;
    ColorSearch s{g, k, std::vector<int>(static_cast<size_t>(g.order()), -1)};
    return s.solve(0, 0);
}

int greedy_clique_size(const Graph& g) {
    int best = 0;
    for (int start = 0; start < g.order(); ++start) {
        uint64_t cand = g.neighbors(start);
        int size = 1;
        while (cand) {
            int pick = -1, pick_deg = -1;
            uint64_t it = cand;
            while (it) {
                int v = std::countr_zero(it);
                it &= it - 1;
                int d = std::popcount(g.neighbors(v) & cand);
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

int dsatur_upper(const Graph& g) {
    int n = g.order();
    ColorSearch s{g, n, std::vector<int>(static_cast<size_t>(n), -1)};
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (s.color[static_cast<size_t>(v)] >= 0) continue;
            int sat = std::popcount(s.neighbor_colors(v));
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t forbidden = s.neighbor_colors(pick);
        int c = 0;
        while (forbidden & bit(c)) ++c;
        s.color[static_cast<size_t>(pick)] = c;
        used = std::max(used, c + 1);
    }
    return n > 0 ? std::max(used, 1) : 0;
}

}  // namespace

int chromatic_number(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    int lo = std::max(2, greedy_clique_size(g));
    int hi = dsatur_upper(g);
    for (int k = lo; k < hi; ++k)
        if (k_colorable(g, k)) return k;
    return hi;
}

namespace {

bool hom_search(const Graph& f, const Graph& h, const std::vector<int>& order, size_t pos,
                std::vector<int>& image) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int cand = 0; cand < h.order(); ++cand) {
        bool ok = true;
        for (size_t q = 0; q < pos && ok; ++q)
            if (f.adjacent(u, order[q]) && !h.adjacent(cand, image[q])) ok = false;
        if (!ok) continue;
        image[pos] = cand;
        if (hom_search(f, h, order, pos + 1, image)) return true;
    }
    return false;
}

struct MultipartiteCount {
    const Graph& h;
    const std::vector<int64_t>& sizes;
    std::vector<int> assigned;  // vertices already mapped to each class
    std::vector<int> class_of;
    unsigned __int128 total = 0;

    void rec(int v, unsigned __int128 acc) {
        if (v == h.order()) {
            unsigned __int128 before = total;
            total += acc;
            if (total < before) throw Overflow("multipartite copy count overflow");
            return;
        }
        for (size_t c = 0; c < sizes.size(); ++c) {
            int64_t room = sizes[c] - assigned[c];
            if (room <= 0) continue;
            bool proper = true;
            uint64_t nb = h.neighbors(v) & full_mask(v);
            while (nb && proper) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (class_of[static_cast<size_t>(u)] == static_cast<int>(c)) proper = false;
            }
            if (!proper) continue;
            unsigned __int128 next = acc * static_cast<unsigned __int128>(room);
            if (next / static_cast<unsigned __int128>(room) != acc)
                throw Overflow("multipartite copy count overflow");
            class_of[static_cast<size_t>(v)] = static_cast<int>(c);
            ++assigned[c];
            rec(v + 1, next);
            --assigned[c];
            class_of[static_cast<size_t>(v)] = -1;
        }
    }
};

}  // namespace

bool exists_homomorphism(const Graph& f, const Graph& h) {
    if (f.order() == 0) return true;
    if (h.order() == 0) return false;
    if (f.edge_count() > 0 && h.edge_count() == 0) return false;
    std::vector<int> order = pattern_order(f);
    std::vector<int> image(order.size(), -1);
    return hom_search(f, h, order, 0, image);
}

CopyCount count_copies_in_multipartite(const Graph& h, const PartSizes& p) {
    if (h.order() == 0) return 1;
    MultipartiteCount mc{h, p.sizes(), std::vector<int>(p.count(), 0),
                         std::vector<int>(static_cast<size_t>(h.order()), -1)};
    mc.rec(0, 1);
    unsigned __int128 copies = mc.total / count_automorphisms(h);
    if (copies > UINT64_MAX) throw Overflow("multipartite copy count overflow");
    return static_cast<uint64_t>(copies);
}

CopyCount zykov_clique_bound(int n, int r, int k) {
    if (r < 1 || r >= k) throw Error("InvalidArgument", "need 1 <= r < k");
    if (n < 0) throw Error("InvalidArgument", "negative order");
    uint64_t ceil_part =
        (static_cast<uint64_t>(n) + static_cast<uint64_t>(k - 2)) / static_cast<uint64_t>(k - 1);
    uint64_t power = 1;
    for (int i = 0; i < r; ++i) power = checked::mul(power, ceil_part);
    return checked::mul(binomial(k - 1, r), power);
}

bool contains_copy(const Graph& g, const Graph& f) {
    if (f.order() == 0) return true;
    if (f.order() > g.order() || f.edge_count() > g.edge_count()) return false;
    HomSearch s(f, g);
    std::vector<int> image(static_cast<size_t>(f.order()), -1);
    return s.exists_from(0, image, 0);
}

bool copy_through_vertex_exists(const Graph& g, const Graph& f, int v) {
    if (f.order() == 0) return true;
    if (f.order() > g.order()) return false;
    HomSearch s(f, g);
    std::vector<int> image(static_cast<size_t>(f.order()), -1);
    for (int pos = 0; pos < f.order(); ++pos) {
        if (g.degree(v) < s.degrees[static_cast<size_t>(pos)]) continue;
        if (s.exists_pinned(pos, v, 0, image, 0)) return true;
    }
    return false;
}

}  // namespace turanlab
