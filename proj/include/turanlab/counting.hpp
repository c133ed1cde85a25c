#pragma once

#include <cstdint>

#include "turanlab/graph.hpp"

namespace turanlab {

// Copy counts are exact unsigned integers; anything that would wrap raises
// Overflow instead.
using CopyCount = uint64_t;

namespace checked {

inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("count addition overflow");
    return r;
}

inline uint64_t mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("count multiplication overflow");
    return r;
}

}  // namespace checked

// C(n, k) with overflow detection.
uint64_t binomial(int64_t n, int64_t k);

uint64_t factorial(int n);

// Order of Aut(h).
CopyCount count_automorphisms(const Graph& h);

// Number of injective edge-preserving maps V(h) -> V(g). Backtracking over a
// greedy connected ordering of h, pruning by degree and by intersection of the
// neighbour bitsets of already-placed vertices.
CopyCount count_injective_homomorphisms(const Graph& h, const Graph& g, int threads = 1);

// Unlabeled, not-necessarily-induced copies of h in g:
// injective homomorphisms divided by |Aut(h)|.
CopyCount count_copies(const Graph& h, const Graph& g, int threads = 1);

// Copies of h whose vertex set contains v.
CopyCount count_copies_through_vertex(const Graph& h, const Graph& g, int v);

// Copies of K_r in g, by recursive neighbour-bitset intersection.
CopyCount count_cliques(int r, const Graph& g, int threads = 1);

// K_r copies through vertex v (K_{r-1} cliques inside N(v)).
CopyCount count_cliques_through_vertex(int r, const Graph& g, int v);

// Copies of K_r whose vertices all lie in `mask`.
CopyCount count_cliques_in_mask(int r, const Graph& g, uint64_t mask);

// Exact chromatic number: branch and bound between a greedy clique lower
// bound and a DSATUR upper bound.
int chromatic_number(const Graph& g);

// Is there an edge-preserving (not necessarily injective) map V(f) -> V(h)?
bool exists_homomorphism(const Graph& f, const Graph& h);

// Exact N(h, complete_multipartite(p)) without materializing: sum over proper
// class assignments of V(h) of products of falling factorials of class sizes,
// divided by |Aut(h)|. Class sizes need not fit in 64 vertices.
CopyCount count_copies_in_multipartite(const Graph& h, const PartSizes& p);

// binom(k-1, r) * ceil(n/(k-1))^r, the clique-count ceiling for n-vertex
// K_k-free graphs.
CopyCount zykov_clique_bound(int n, int r, int k);

// Early-exit existence checks used by the enumeration filters.
bool contains_copy(const Graph& g, const Graph& f);
bool copy_through_vertex_exists(const Graph& g, const Graph& f, int v);

}  // namespace turanlab
