#include "turanlab/theorem_lab.hpp"

#include <algorithm>
#include <cmath>

#include "turanlab/canonical.hpp"
#include "turanlab/enumeration.hpp"

namespace turanlab {

namespace {

constexpr uint64_t kCensusBudget = uint64_t{1} << 26;

Rational rational_from_count(CopyCount c) { return Rational::from_uint(c); }

// Exhaustive ex(n, h, f): catalog first, then built-in enumeration.
CopyCount exact_ex(int n, const Graph& h, const Graph& f, const Catalog& catalog) {
    if (auto rec = catalog.get(n, h, f); rec && rec->exhaustive) return rec->value;
    if (n <= kEnumerationCap) return generalized_turan(n, h, f).value;
    throw TooLarge("no exhaustive ex(" + std::to_string(n) +
                   ", h, f) in the catalog and n exceeds the built-in enumeration cap");
}

int64_t rational_ceil(const Rational& x) {
    int64_t q = x.num() / x.den();
    if (x.num() > 0 && x.num() % x.den() != 0) ++q;
    return q;
}

// ---- small unsigned bignum, just enough for dyadic root verification ----

using BigU = std::vector<uint64_t>;  // little-endian limbs

BigU big_from(uint64_t v) { return v ? BigU{v} : BigU{}; }

void big_mul(BigU& a, uint64_t m) {
    if (m == 0) {
        a.clear();
        return;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : a) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
        limb = static_cast<uint64_t>(cur);
        carry = cur >> 64;
    }
    if (carry) a.push_back(static_cast<uint64_t>(carry));
}

void big_shl(BigU& a, int bits) {
    if (a.empty() || bits == 0) return;
    int words = bits / 64, rem = bits % 64;
    if (rem != 0) {
        uint64_t carry = 0;
        for (auto& limb : a) {
            uint64_t next = limb >> (64 - rem);
            limb = (limb << rem) | carry;
            carry = next;
        }
        if (carry) a.push_back(carry);
    }
    a.insert(a.begin(), static_cast<size_t>(words), 0);
}

int big_cmp(const BigU& a, const BigU& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// (t / 2^scale_bits)^d <= x, exactly.
bool scaled_pow_le(int64_t t, int d, int scale_bits, const Rational& x) {
    if (t <= 0) return x.num() >= 0;
    BigU lhs = big_from(static_cast<uint64_t>(t));
    for (int i = 1; i < d; ++i) big_mul(lhs, static_cast<uint64_t>(t));
    big_mul(lhs, static_cast<uint64_t>(x.den()));
    BigU rhs = big_from(static_cast<uint64_t>(x.num()));
    big_shl(rhs, scale_bits * d);
    return big_cmp(lhs, rhs) <= 0;
}

bool perfect_root(int64_t v, int d, int64_t& root) {
    if (v == 0 || v == 1) {
        root = v;
        return true;
    }
    auto guess = static_cast<int64_t>(std::llround(std::pow(static_cast<double>(v), 1.0 / d)));
    for (int64_t r = std::max<int64_t>(1, guess - 2); r <= guess + 2; ++r) {
        __int128 p = 1;
        bool over = false;
        for (int i = 0; i < d && !over; ++i) {
            p *= r;
            if (p > static_cast<__int128>(INT64_MAX)) over = true;
        }
        if (!over && p == v) {
            root = r;
            return true;
        }
    }
    return false;
}

// Largest dyadic (or exact) value <= x^{1/d} for x in [0, 1]; dyadic error
// is below 2^-30.
Rational root_floor(const Rational& x, int d) {
    if (x < Rational(0) || x > Rational(1))
        throw Error("InvalidArgument", "root extraction expects a value in [0, 1]");
    if (d == 1 || x.is_zero() || x == Rational(1)) return x;
    int64_t rn = 0, rd = 0;
    if (perfect_root(x.num(), d, rn) && perfect_root(x.den(), d, rd)) return Rational(rn, rd);

    constexpr int kScaleBits = 31;
    const int64_t scale = int64_t{1} << kScaleBits;
    auto est = static_cast<int64_t>(
        std::floor(std::pow(x.to_double(), 1.0 / d) * static_cast<double>(scale)));
    int64_t t = std::clamp<int64_t>(est, 0, scale);
    while (t > 0 && !scaled_pow_le(t, d, kScaleBits, x)) --t;
    while (t < scale && scaled_pow_le(t + 1, d, kScaleBits, x)) ++t;
    return Rational(t, scale);
}

}  // namespace

Rational clique_turan_density(int r, int k) {
    if (r < 1 || r >= k) throw Error("InvalidArgument", "need 1 <= r < k");
    Rational density = rational_from_count(factorial(r)) * rational_from_count(binomial(k - 1, r));
    return density * Rational(1, k - 1).pow(r);
}

DensityBracket density_bracket(const Graph& h, const Graph& f, int max_n, const Catalog& catalog) {
    int hs = h.order();
    if (hs < 1 || f.order() < 1)
        throw Error("InvalidArgument", "density bracket needs nonempty graphs");
    if (max_n < hs || max_n > kMaxVertices)
        throw Error("InvalidArgument", "max_n must lie in |V(h)|..64");
    int chi_h = chromatic_number(h), chi_f = chromatic_number(f);
    if (chi_h >= chi_f)
        throw DegeneratePair("chi(h) = " + std::to_string(chi_h) + " >= chi(f) = " +
                             std::to_string(chi_f) + "; the bracket is not meaningful");

    DensityBracket out;
    CopyCount ex_val = exact_ex(max_n, h, f, catalog);
    out.upper = rational_from_count(ex_val) / rational_from_count(binomial(max_n, hs));
    out.upper_n = max_n;

    int parts = chi_f - 1;
    for (int n = hs; n <= kMaxVertices; ++n) {
        CopyCount cnt = count_copies_in_multipartite(h, PartSizes::balanced(n, parts));
        Rational cand = rational_from_count(cnt);
        for (int i = 1; i <= hs; ++i) cand *= Rational(i, n);  // * h! / n^h
        if (out.lower_n == 0 || cand > out.lower) {
            out.lower = cand;
            out.lower_n = n;
        }
    }
    return out;
}

std::vector<RatioViolation> check_ratio_monotone(
    const std::vector<std::pair<int, CopyCount>>& table, int h_size) {
    if (h_size < 1) throw Error("InvalidArgument", "pattern order must be >= 1");
    std::vector<RatioViolation> out;
    bool have_prev = false;
    int prev_n = 0;
    Rational prev_ratio;
    for (const auto& [n, value] : table) {
        if (have_prev && n <= prev_n)
            throw Error("InvalidArgument", "table rows must have strictly increasing n");
        if (n < h_size) {
            prev_n = n;
            continue;  // C(n, h) = 0; the ratio only exists from n = h on
        }
        Rational ratio = rational_from_count(value) / rational_from_count(binomial(n, h_size));
        if (have_prev && ratio > prev_ratio) out.push_back({prev_n, n, prev_ratio, ratio});
        have_prev = true;
        prev_n = n;
        prev_ratio = ratio;
    }
    return out;
}

namespace {

struct CensusSweep {
    const Graph& g;
    const Graph& h;
    int m;
    const Rational& threshold;

    bool clique_pattern;
    CopyCount aut = 1;

    CopyCount heavy = 0;
    CopyCount copy_sum = 0;

    CensusSweep(const Graph& host, const Graph& pattern, int subset_size, const Rational& thr)
        : g(host), h(pattern), m(subset_size), threshold(thr) {
        clique_pattern =
            h.order() >= 1 && h.edge_count() == h.order() * (h.order() - 1) / 2;
        if (!clique_pattern) aut = count_automorphisms(h);
    }

    void run() {
        int n = g.order();
        // Odometer over m-subsets in lexicographic order.
        std::vector<int> idx(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            uint64_t mask = 0;
            for (int i : idx) mask |= bit(i);
            visit(mask);
            int pos = m - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - m + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < m; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
    }

    void visit(uint64_t mask) {
        CopyCount cnt;
        if (clique_pattern) {
            cnt = count_cliques_in_mask(h.order(), g, mask);
        } else {
            cnt = count_injective_homomorphisms(h, g.induced(mask)) / aut;
        }
        copy_sum = checked::add(copy_sum, cnt);
        if (rational_from_count(cnt) > threshold) ++heavy;
    }
};

CensusResult census_sweep(const Graph& g, const Graph& h, int m, const Rational& threshold) {
    if (m == 0) {
        // One empty subset holding one empty copy if h is empty.
        CopyCount cnt = h.order() == 0 ? 1 : 0;
        return {rational_from_count(cnt) > threshold ? CopyCount{1} : CopyCount{0}, cnt};
    }
    CensusSweep sweep(g, h, m, threshold);
    sweep.run();

    CopyCount expected = checked::mul(binomial(g.order() - h.order(), m - h.order()),
                                      count_copies(h, g));
    if (sweep.copy_sum != expected)
        throw Error("InternalError", "census copy-sum failed the double-count identity");
    return {sweep.heavy, sweep.copy_sum};
}

}  // namespace

CensusResult heavy_subset_census(const Graph& g, const Graph& h, int m,
                                 const Rational& threshold) {
    int n = g.order();
    if (n > 20) throw TooLarge("census host capped at 20 vertices");
    if (m < h.order() || m > n)
        throw Error("InvalidArgument", "need |V(h)| <= m <= |V(g)|");
    return census_sweep(g, h, m, threshold);
}

SupersaturationReport supersaturation_check(const Graph& g, const Graph& h, const Graph& f,
                                            const Rational& c, const DensityBracket& bracket,
                                            const Catalog& catalog) {
    int n = g.order(), hs = h.order(), fs = f.order();
    if (hs < 1 || fs < 1) throw Error("InvalidArgument", "nonempty pattern graphs required");
    if (c <= Rational(0)) throw Error("InvalidArgument", "c must be positive");
    if (chromatic_number(h) >= chromatic_number(f))
        throw DegeneratePair("supersaturation needs chi(h) < chi(f)");

    SupersaturationReport rep;
    rep.host_copies = count_copies(h, g);
    Rational q = bracket.upper;

    if (auto rec = catalog.get(n, h, f); rec && rec->exhaustive) {
        rep.extremal_reference = rational_from_count(rec->value);
        rep.reference_exact = true;
    } else {
        rep.extremal_reference = q * rational_from_count(binomial(n, hs));
        rep.reference_exact = false;
    }
    rep.required = rep.extremal_reference + c * Rational(n).pow(hs);
    rep.hypothesis_holds = rational_from_count(rep.host_copies) > rep.required;

    Rational pick = q + c / Rational(2);
    rep.m = -1;
    for (const ExtremalRecord& rec : catalog.entries_for(h, f)) {
        if (!rec.exhaustive || rec.n < hs || rec.n > n) continue;
        if (rational_from_count(rec.value) <= pick * rational_from_count(binomial(rec.n, hs))) {
            rep.m = rec.n;
            break;
        }
    }
    if (rep.m < 0)
        throw NoValidM("catalog holds no exhaustive m with ex(m,h,f) <= (q + c/2) C(m,|V(h)|)");

    if (binomial(n, rep.m) > kCensusBudget)
        throw TooLarge("heavy-set sweep C(" + std::to_string(n) + "," + std::to_string(rep.m) +
                       ") exceeds the census budget");
    rep.threshold = pick * rational_from_count(binomial(rep.m, hs));
    CensusResult census = census_sweep(g, h, rep.m, rep.threshold);
    rep.heavy_count = census.heavy_count;
    rep.copy_sum = census.copy_sum;

    if (rep.m >= fs && rep.heavy_count > 0)
        rep.implied_f_lower =
            rational_from_count(rep.heavy_count) / rational_from_count(binomial(n - fs, rep.m - fs));
    else
        rep.implied_f_lower = Rational(0);
    rep.f_copies = count_copies(f, g);
    return rep;
}

// ---------------------------------------------------------------------------

bool is_complete_multipartite(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && g.neighbors(u) != g.neighbors(v)) return false;
    return true;
}

SymmetrizationTrace symmetrize(const Graph& g, int r) {
    if (r < 1) throw Error("InvalidArgument", "clique order must be >= 1");
    int n = g.order();
    SymmetrizationTrace trace;
    trace.start = g;
    trace.step_cap = 10 * n * n;

    Graph cur = g;
    std::vector<CopyCount> sigma(static_cast<size_t>(n), 0);
    while (true) {
        for (int v = 0; v < n; ++v) sigma[static_cast<size_t>(v)] = count_cliques_through_vertex(r, cur, v);

        // Richer clone sources first: the non-adjacent pair with the largest
        // source count wins, ties to the smaller source index.
        int source = -1;
        for (int v = 0; v < n; ++v) {
            uint64_t non = cur.vertex_mask() & ~cur.neighbors(v) & ~bit(v);
            bool poorer = false;
            while (non && !poorer) {
                int u = std::countr_zero(non);
                non &= non - 1;
                if (sigma[static_cast<size_t>(u)] < sigma[static_cast<size_t>(v)]) poorer = true;
            }
            if (poorer && (source < 0 || sigma[static_cast<size_t>(v)] > sigma[static_cast<size_t>(source)]))
                source = v;
        }

        int target = -1;
        if (source >= 0) {
            uint64_t non = cur.vertex_mask() & ~cur.neighbors(source) & ~bit(source);
            while (non) {
                int u = std::countr_zero(non);
                non &= non - 1;
                if (sigma[static_cast<size_t>(u)] < sigma[static_cast<size_t>(source)]) {
                    target = u;
                    break;
                }
            }
        } else {
            // All non-adjacent pairs tie. Break an intransitive triple: the
            // smallest-index middle vertex, cloning it over its smallest
            // non-neighbour that is adjacent to another non-neighbour.
            for (int y = 0; y < n && source < 0; ++y) {
                uint64_t non = cur.vertex_mask() & ~cur.neighbors(y) & ~bit(y);
                uint64_t it = non;
                while (it) {
                    int u = std::countr_zero(it);
                    it &= it - 1;
                    if (cur.neighbors(u) & non) {
                        source = y;
                        target = u;
                        break;
                    }
                }
            }
            if (source < 0) break;  // non-adjacency transitive: complete multipartite
        }

        if (static_cast<int>(trace.steps.size()) >= trace.step_cap)
            throw NonTermination("symmetrization exceeded the step cap of " +
                                 std::to_string(trace.step_cap));

        uint64_t new_row = cur.neighbors(source);
        uint64_t old_row = cur.neighbors(target);
        uint64_t drop = old_row & ~new_row;
        uint64_t gain = new_row & ~old_row;
        while (drop) {
            int w = std::countr_zero(drop);
            drop &= drop - 1;
            cur.remove_edge(target, w);
        }
        while (gain) {
            int w = std::countr_zero(gain);
            gain &= gain - 1;
            cur.add_edge(target, w);
        }
        trace.steps.push_back({source, target, count_cliques(r, cur)});
    }
    trace.end = cur;
    return trace;
}

// ---------------------------------------------------------------------------

const char* to_string(DeletionOutcome o) {
    switch (o) {
        case DeletionOutcome::AllAboveThreshold: return "AllAboveThreshold";
        case DeletionOutcome::DenseSubgraph: return "DenseSubgraph";
        case DeletionOutcome::HypothesisNotMet: return "HypothesisNotMet";
    }
    return "?";
}

Rational DeletionTrace::threshold_at(int order) const {
    Rational t = (Rational(1) - alpha) * q * Rational(order).pow(r - 1);
    return t / rational_from_count(factorial(r - 1));
}

DeletionTrace greedy_min_copy_deletion(const Graph& g, int r, int k, const Rational& alpha,
                                       std::optional<Rational> q_override) {
    if (r < 1 || r >= k) throw Error("InvalidArgument", "need 1 <= r < k");
    if (alpha <= Rational(0) || alpha >= Rational(1))
        throw Error("InvalidArgument", "alpha must lie in (0, 1)");

    DeletionTrace trace;
    trace.r = r;
    trace.k = k;
    trace.alpha = alpha;
    trace.q = q_override ? *q_override : clique_turan_density(r, k);
    if (trace.q <= Rational(0)) throw Error("InvalidArgument", "q must be positive");
    trace.start = g;

    int n = g.order();
    CopyCount start_copies = count_cliques(r, g);
    if (n > 0) {
        Rational cap = trace.q * Rational(n).pow(r) / rational_from_count(factorial(r));
        Rational slack = Rational(1) - rational_from_count(start_copies) / cap;
        trace.beta = std::max(Rational(0), std::min(Rational(1), slack));
    } else {
        trace.beta = Rational(0);
    }

    int64_t deletions = rational_ceil(alpha * Rational(n));
    Graph cur = g;
    std::vector<int> orig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) orig[static_cast<size_t>(v)] = v;

    for (int64_t step = 0; step < deletions; ++step) {
        int order = cur.order();
        Rational thr = trace.threshold_at(order);
        std::vector<CopyCount> sigma(static_cast<size_t>(order));
        bool all_above = true;
        for (int v = 0; v < order; ++v) {
            sigma[static_cast<size_t>(v)] = count_cliques_through_vertex(r, cur, v);
            if (rational_from_count(sigma[static_cast<size_t>(v)]) <= thr) all_above = false;
        }
        if (all_above) {
            trace.outcome = DeletionOutcome::AllAboveThreshold;
            trace.end = cur;
            return trace;
        }
        int victim = 0;
        for (int v = 1; v < order; ++v)
            if (sigma[static_cast<size_t>(v)] < sigma[static_cast<size_t>(victim)]) victim = v;
        trace.steps.push_back({orig[static_cast<size_t>(victim)], sigma[static_cast<size_t>(victim)], order});
        cur = cur.without_vertex(victim);
        orig.erase(orig.begin() + victim);
    }

    int order = cur.order();
    CopyCount end_copies = count_cliques(r, cur);
    Rational dense_line = trace.q * Rational(order).pow(r) / rational_from_count(factorial(r));
    trace.outcome = rational_from_count(end_copies) > dense_line
                        ? DeletionOutcome::DenseSubgraph
                        : DeletionOutcome::HypothesisNotMet;
    trace.end = cur;
    return trace;
}

// ---------------------------------------------------------------------------

Rational degree_lower_bound(int n, int k, int r, const Rational& alpha) {
    if (r < 2 || r >= k) throw Error("InvalidArgument", "need 2 <= r < k");
    if (alpha < Rational(0) || alpha >= Rational(1))
        throw Error("InvalidArgument", "alpha must lie in [0, 1)");
    if (n < 0) throw Error("InvalidArgument", "negative order");
    Rational root = root_floor(Rational(1) - alpha, r - 1);
    return root * Rational(k - 2, k - 1) * Rational(n) - Rational(k - 3);
}

DegreeLemmaReport check_degree_lemma(const Graph& g, int x, int k, int r, const Rational& alpha) {
    if (r < 2 || r >= k) throw Error("InvalidArgument", "need 2 <= r < k");
    if (alpha < Rational(0) || alpha >= Rational(1))
        throw Error("InvalidArgument", "alpha must lie in [0, 1)");
    if (x < 0 || x >= g.order()) throw Error("InvalidVertex", "vertex outside the graph");
    if (count_cliques(k, g) > 0)
        throw NotKkFree("graph contains K_" + std::to_string(k));

    int n = g.order();
    DegreeLemmaReport rep;
    rep.neighborhood_copies = count_cliques_in_mask(r - 1, g, g.neighbors(x));
    rep.hypothesis_threshold = (Rational(1) - alpha) * Rational(r) *
                               rational_from_count(binomial(k - 1, r)) *
                               Rational(1, k - 1).pow(r) * Rational(n).pow(r - 1);
    rep.hypothesis_holds =
        rational_from_count(rep.neighborhood_copies) >= rep.hypothesis_threshold;
    rep.degree = g.degree(x);
    rep.degree_bound = degree_lower_bound(n, k, r, alpha);
    rep.conclusion_holds = Rational(rep.degree) >= rep.degree_bound;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct PartitionSweep {
    const Graph& g;
    std::vector<int> sizes;  // descending

    std::vector<int> assignment;
    std::vector<int> counts;
    std::vector<uint64_t> class_masks;

    int best_intra = -1;
    std::vector<int> best_assignment;

    void rec(int v, int intra) {
        if (best_intra >= 0 && intra >= best_intra) return;
        if (v == g.order()) {
            best_intra = intra;
            best_assignment = assignment;
            return;
        }
        for (size_t c = 0; c < sizes.size(); ++c) {
            if (counts[c] == sizes[c]) continue;
            // Equal-sized classes open in index order, so each partition is
            // visited once, through its lexicographically least assignment.
            if (c > 0 && sizes[c] == sizes[c - 1] && counts[c - 1] == 0) continue;
            int added = std::popcount(g.neighbors(v) & class_masks[c]);
            assignment[static_cast<size_t>(v)] = static_cast<int>(c);
            ++counts[c];
            class_masks[c] |= bit(v);
            rec(v + 1, intra + added);
            class_masks[c] &= ~bit(v);
            --counts[c];
        }
    }
};

}  // namespace

StabilityReport turan_edit_distance(const Graph& g, int parts) {
    int n = g.order();
    if (n > 14) throw TooLarge("edit-distance sweep capped at 14 vertices");
    if (parts < 1) throw Error("InvalidArgument", "need at least one class");

    StabilityReport rep;
    if (n == 0) {
        rep.normalized = Rational(0);
        return rep;
    }

    PartSizes balanced = PartSizes::balanced(n, parts);
    std::vector<int> sizes;
    for (int64_t s : balanced.sizes()) sizes.push_back(static_cast<int>(s));

    int64_t cross_pairs = static_cast<int64_t>(n) * (n - 1) / 2;
    for (int s : sizes) cross_pairs -= static_cast<int64_t>(s) * (s - 1) / 2;

    PartitionSweep sweep{g,
                         sizes,
                         std::vector<int>(static_cast<size_t>(n), -1),
                         std::vector<int>(sizes.size(), 0),
                         std::vector<uint64_t>(sizes.size(), 0),
                         -1,
                         {}};
    sweep.rec(0, 0);

    rep.distance = 2 * sweep.best_intra + static_cast<int>(cross_pairs) - g.edge_count();
    rep.assignment = sweep.best_assignment;
    rep.normalized = Rational(rep.distance, static_cast<int64_t>(n) * n);
    return rep;
}

}  // namespace turanlab
