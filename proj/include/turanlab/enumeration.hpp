#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

// Built-in generation cap; larger universes come in through external streams.
constexpr int kEnumerationCap = 12;

// One representative per isomorphism class of n-vertex F-free graphs, by
// canonical augmentation: each (n-1)-vertex representative is extended by one
// vertex, and a child survives iff no copy of f uses the new vertex and the
// new vertex matches the child's canonical deletion choice. Representatives
// arrive canonically labeled, sorted by their graph6 string.
void enumerate_free_graphs(int n, const Graph& f, const std::function<void(const Graph&)>& sink,
                           int threads = 1);

std::vector<Graph> enumerate_free_graphs(int n, const Graph& f, int threads = 1);

// Passes through exactly the F-free records of a graph6 line stream,
// preserving order. Lines are echoed verbatim to the sink alongside the
// decoded graph. Malformed records report their 1-based line number.
void filter_graph6_stream(std::istream& in, const Graph& f,
                          const std::function<void(const std::string&, const Graph&)>& sink);

std::vector<Graph> filter_graph6_stream(std::istream& in, const Graph& f);

}  // namespace turanlab
