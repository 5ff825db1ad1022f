#pragma once

#include <optional>
#include <vector>

#include "tightcut/decomposition.hpp"

namespace tightcut {

// One t-adjacency between the towers over two incomparable factor-components,
// localized to a witnessing pair of classes: vup(s1) meets vup(s2), or an
// edge joins vupstar(s1) and vupstar(s2). Stored with h1 < h2.
struct TAdjacency {
    int h1;
    int s1;
    int h2;
    int s2;

    friend bool operator==(const TAdjacency&, const TAdjacency&) = default;
};

// Every adjacency of the graph, ordered by (h1, h2, s1, s2).
std::vector<TAdjacency> t_adjacency(const Graph& g, const CanonicalDecomposition& d);

// True when h1 and h2 are incomparable and the classes s1, s2 witness an
// adjacency between their towers. Symmetric in the two sides.
bool t_adjacent_via(const CanonicalDecomposition& d, int h1, int s1, int h2, int s2);

// Minimal component whose tower has outgoing edges from at most one of its
// classes; that class is the port. A border without a port has a tower with
// no outgoing edges at all, so the tower covers the whole graph.
struct Border {
    int component;
    std::optional<int> port;

    friend bool operator==(const Border&, const Border&) = default;
};

std::vector<Border> borders(const Graph& g, const CanonicalDecomposition& d);

// Walk plan across minimal components. Consecutive bases must be t-adjacent
// through the exit class of the earlier element and the entry class of the
// later one; entry and exit differ inside every element. Open ends keep -1.
struct TowerSequence {
    struct Element {
        int base;
        int entry = -1;
        int exit = -1;
    };

    std::vector<Element> elements;

    int size() const { return static_cast<int>(elements.size()); }
    std::vector<int> bases() const;
};

// Rejects structurally invalid sequences with std::invalid_argument. A
// locally valid sequence that repeats a base breaks an invariant the order
// is supposed to guarantee, so that raises internal_error instead.
void validate_tower_sequence(const CanonicalDecomposition& d, const TowerSequence& seq);

// Exposed path between t-adjacent towers: ends in the port classes s1 and
// s2, every other vertex inside vup(s1) or vup(s2). The bridging edge is the
// least edge from vupstar(s1) to vupstar(s2) minus vupstar(s1).
Arc arc_from_adjacency(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                       int h1, int s1, int h2, int s2);

// Exposed path from the first base to the last base of a valid sequence of
// at least two towers, ends in the exit class of the first element and the
// entry class of the last, traversing every intermediate base. Built by
// joining per-adjacency arcs with saturated connectors inside the shared
// bases; every join is checked to reuse exactly one vertex.
Arc arc_from_sequence(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                      const TowerSequence& seq);

// Grows a valid sequence by appending or prepending minimal bases until both
// ends are borders. A single element is first extended through any available
// adjacency so that the result supports an arc whenever one exists; only a
// lone tower with no adjacency comes back unchanged. The matching is unused
// but kept so all sequence operations share one shape.
TowerSequence extend_to_spanning_sequence(const Graph& g, const Matching& m,
                                          const CanonicalDecomposition& d, TowerSequence seq);

// Spanning arc (both end bases are borders) whose vertex set meets V(h).
// Rejects graphs whose tower over h spans everything with no adjacency, as
// no arc exists there.
Arc spanning_arc_through(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                         int h);

// Shortest valid sequence from any base in from_bases to any base in
// to_bases, found by breadth first search over (base, entry class) states.
// All bases involved must be minimal. Empty result when unreachable.
std::optional<TowerSequence> find_tower_sequence(const Graph& g, const CanonicalDecomposition& d,
                                                 const std::vector<int>& from_bases,
                                                 const std::vector<int>& to_bases);

}  // namespace tightcut
