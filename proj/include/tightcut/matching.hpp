#pragma once

#include <map>
#include <optional>
#include <utility>

#include "tightcut/graph.hpp"

namespace tightcut {

// A matching is a set of edge ids, no two sharing a vertex.
struct Matching {
    EdgeIdSet edges;

    bool contains(int edge_id) const { return edges.count(edge_id) != 0; }
    int size() const { return static_cast<int>(edges.size()); }
    bool operator==(const Matching& o) const { return edges == o.edges; }
};

bool is_matching(const Graph& g, const Matching& m);
bool is_perfect_matching(const Graph& g, const Matching& m);

// vertex -> id of its matching edge, for covered vertices only.
std::map<int, int> cover_map(const Graph& g, const Matching& m);
// Edge id covering v, if any.
std::optional<int> matched_edge_at(const Graph& g, const Matching& m, int v);
// The matching partner of v, if covered.
std::optional<int> matched_partner(const Graph& g, const Matching& m, int v);

// Deterministic: depends only on the graph, not on allocation or hashing.
// Empty graph yields the empty matching.
std::optional<Matching> find_perfect_matching(const Graph& g);
// Perfect matching forced to use the given edge; absent if none exists.
std::optional<Matching> find_perfect_matching_containing(const Graph& g, int edge_id);

// m restricted to edges with both ends inside x.
Matching restrict_matching(const Graph& g, const Matching& m, const VertexSet& x);

bool is_factorizable(const Graph& g);    // empty graph: true
bool is_factor_critical(const Graph& g); // single vertex: true

// Edges lying in at least one perfect matching. Requires g factorizable.
EdgeIdSet allowed_edges(const Graph& g);

// |V| >= 4, |V| even, and every two-vertex deletion leaves a connected
// factorizable graph.
bool is_brick(const Graph& g);
// First vertex pair (by id order) witnessing non-brickness, if any.
std::optional<std::pair<int, int>> brick_failure_pair(const Graph& g);

}  // namespace tightcut
