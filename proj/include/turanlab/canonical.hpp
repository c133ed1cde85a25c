#pragma once

#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

// Canonical labeling: iterative degree refinement followed by backtracking
// minimization of the upper-triangle adjacency bit-string (graph6 bit order).
// Returns perm such that g.relabeled(perm) is the canonical representative;
// two graphs are isomorphic iff their canonical representatives are equal.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace turanlab
