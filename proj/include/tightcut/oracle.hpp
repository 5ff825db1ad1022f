#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

inline constexpr int default_enumeration_bound = 16;

// All perfect matchings, deterministic order: backtracking over the least-id
// uncovered vertex, incident edges in ascending order. Errors when the graph
// has more than bound vertices.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  int bound = default_enumeration_bound);

// Existence check by direct recursion on the least vertex; shares no code
// with the augmenting-path solver so the two can cross-check each other.
bool has_perfect_matching_bruteforce(const Graph& g);

// All shores s (canonical side: the one containing the least vertex id,
// 1 <= |s| < n) such that every perfect matching has exactly one edge
// crossing s. Requires a factorizable graph within bound.
std::vector<VertexSet> tight_cuts_bruteforce(const Graph& g,
                                             int bound = default_enumeration_bound);

// Plants the matching {(1,2),(3,4),...} on n vertices, then adds each other
// pair independently with probability p. Deterministic per seed.
Graph random_factorizable_graph(int n, double p, unsigned int seed);

// Fixed generator sweep used by the property suites: 100 graphs over
// n in {4,...,12}, three densities, seeds 1000..1099.
std::vector<Graph> random_corpus();

namespace corpus {

Graph p3();
Graph p4();
Graph paw();
Graph c6();
Graph k4();
Graph k33();
Graph prism();
Graph petersen();
Graph w5();

// Fixed order, fixed edge ids; every factorizable named graph.
std::vector<std::pair<std::string, Graph>> catalog();
// The brick members: K4, W5, PRISM, PETERSEN.
std::vector<std::pair<std::string, Graph>> catalog_bricks();

}  // namespace corpus

}  // namespace tightcut
