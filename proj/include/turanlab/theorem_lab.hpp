#pragma once

#include <optional>
#include <vector>

#include "turanlab/extremal.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

// ---------------------------------------------------------------------------
// Density brackets

// Rigorous finite-n enclosure of pi(h, f) = lim ex(n,h,f) / C(n,|V(h)|).
struct DensityBracket {
    Rational lower, upper;
    int lower_n = 0, upper_n = 0;
};

// upper  = ex(max_n,h,f)/C(max_n,h): valid since the ratio is monotone
//          non-increasing in n.
// lower  = max over n <= 64 of N(h, T_{chi(f)-1}(n)) * h! / n^h: valid because
//          blowing the multipartite construction up only raises that density,
//          so the limit dominates every finite value.
// Values of ex come from the catalog; missing ones are computed in-process
// when the built-in enumeration can reach them.
DensityBracket density_bracket(const Graph& h, const Graph& f, int max_n, const Catalog& catalog);

// pi(K_r, K_k) = r! C(k-1,r) / (k-1)^r, the exact clique density limit.
Rational clique_turan_density(int r, int k);

// ---------------------------------------------------------------------------
// Ratio monotonicity

struct RatioViolation {
    int n_lo = 0, n_hi = 0;
    Rational ratio_lo, ratio_hi;
};

// Checks value(n)/C(n,h_size) is non-increasing across consecutive table rows
// in exact rationals. Rows with n < h_size are skipped (the ratio is 0/0).
std::vector<RatioViolation> check_ratio_monotone(
    const std::vector<std::pair<int, CopyCount>>& table, int h_size);

// ---------------------------------------------------------------------------
// Supersaturation machinery

struct CensusResult {
    CopyCount heavy_count = 0;  // m-sets with more than `threshold` copies of h
    CopyCount copy_sum = 0;     // sum of N(h, g[S]) over all m-sets
};

// Exhaustive m-set sweep; copy_sum always equals C(n-h, m-h) * N(h,g).
CensusResult heavy_subset_census(const Graph& g, const Graph& h, int m, const Rational& threshold);

struct SupersaturationReport {
    CopyCount host_copies = 0;       // N(h, g)
    Rational extremal_reference;     // ex(n,h,f) if cataloged, else q*C(n,h)
    bool reference_exact = false;
    Rational required;               // reference + c*n^h
    bool hypothesis_holds = false;   // host_copies > required
    int m = 0;
    Rational threshold;              // (q + c/2) * C(m,h)
    CopyCount heavy_count = 0;
    CopyCount copy_sum = 0;
    Rational implied_f_lower;        // heavy / C(n-f, m-f)
    CopyCount f_copies = 0;          // true N(f, g)
};

// Executable form of the averaging proof: pick the smallest cataloged m with
// ex(m,h,f) <= (q + c/2) C(m,h), census the heavy m-sets at that threshold,
// and report the F-copy lower bound heavy / C(n-f, m-f) next to the true
// count. q is bracket.upper.
SupersaturationReport supersaturation_check(const Graph& g, const Graph& h, const Graph& f,
                                            const Rational& c, const DensityBracket& bracket,
                                            const Catalog& catalog);

// ---------------------------------------------------------------------------
// Symmetrization

struct SymmetrizationStep {
    int kept = 0;      // the cloned vertex
    int replaced = 0;  // the vertex whose row was overwritten
    CopyCount count_after = 0;
};

struct SymmetrizationTrace {
    Graph start, end;
    std::vector<SymmetrizationStep> steps;
    int step_cap = 0;
};

// Clones richer vertices over poorer non-neighbours until non-adjacency is an
// equivalence relation. N(K_r) never decreases along the trace and the end
// state is complete multipartite. Exceeding the 10*n^2 step cap raises
// NonTermination.
SymmetrizationTrace symmetrize(const Graph& g, int r);

bool is_complete_multipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Greedy minimum-copy deletion

enum class DeletionOutcome { AllAboveThreshold, DenseSubgraph, HypothesisNotMet };

const char* to_string(DeletionOutcome o);

struct DeletionStep {
    int vertex = 0;  // original vertex id
    CopyCount copies = 0;
    int order_before = 0;
};

struct DeletionTrace {
    int r = 0, k = 0;
    Rational alpha;
    Rational q;
    Rational beta;  // observed slack: infimum beta with N > (1-beta) q n^r / r!
    std::vector<DeletionStep> steps;
    DeletionOutcome outcome = DeletionOutcome::HypothesisNotMet;
    Graph start, end;

    // (1 - alpha) * q * order^{r-1} / (r-1)!
    Rational threshold_at(int order) const;
};

// Repeatedly deletes a vertex in the fewest K_r copies (ties: smallest index)
// until every vertex clears the per-order threshold or ceil(alpha*n) vertices
// are gone; classifies the end state per the three outcomes.
DeletionTrace greedy_min_copy_deletion(const Graph& g, int r, int k, const Rational& alpha,
                                       std::optional<Rational> q_override = std::nullopt);

// ---------------------------------------------------------------------------
// Degree bound

// (1-alpha)^{1/(r-1)} * (k-2)/(k-1) * n - (k-3); the root is exact when
// rational and otherwise a dyadic under-approximation with error <= 2^-30.
Rational degree_lower_bound(int n, int k, int r, const Rational& alpha);

struct DegreeLemmaReport {
    CopyCount neighborhood_copies = 0;  // N(K_{r-1}, g[N(x)])
    Rational hypothesis_threshold;      // (1-alpha) r C(k-1,r) (k-1)^{-r} n^{r-1}
    bool hypothesis_holds = false;
    int degree = 0;
    Rational degree_bound;
    bool conclusion_holds = false;
};

// Requires g to be K_k-free (NotKkFree otherwise) and 2 <= r < k.
DegreeLemmaReport check_degree_lemma(const Graph& g, int x, int k, int r, const Rational& alpha);

// ---------------------------------------------------------------------------
// Stability edit distance

struct StabilityReport {
    int distance = 0;
    std::vector<int> assignment;  // vertex -> class, lexicographically least optimum
    Rational normalized;          // distance / n^2
};

// Minimum symmetric difference |E(g) ^ E(M)| over complete multipartite
// graphs M on balanced `parts`-partitions of V(g). Exhaustive sweep, n <= 14.
StabilityReport turan_edit_distance(const Graph& g, int parts);

}  // namespace turanlab
