#pragma once

#include <optional>
#include <vector>

#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

enum class PathKind {
    none,
    trivial,
    saturated,
    exposed,
    balanced_forward,   // only the last vertex is uncovered within the path
    balanced_backward,  // only the first vertex is uncovered within the path
    alternating_circuit,
};

const char* to_string(PathKind k);

// A walk with explicit edge ids: edges[i] joins vertices[i] and vertices[i+1].
// All constructors of library paths keep vertices distinct.
struct AltPath {
    std::vector<int> vertices;
    std::vector<int> edges;

    static AltPath single_vertex(int v) { return AltPath{{v}, {}}; }

    int length() const { return static_cast<int>(edges.size()); }
    bool trivial() const { return vertices.size() == 1; }
    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }
    bool contains_vertex(int v) const;
    VertexSet vertex_set() const;
    EdgeIdSet edge_set() const;
};

AltPath reverse_path(const AltPath& p);

// Closed alternating walk: edges[i] joins vertices[i] and vertices[(i+1) % k],
// vertices distinct, edges.size() == vertices.size().
struct Circuit {
    std::vector<int> vertices;
    std::vector<int> edges;

    VertexSet vertex_set() const;
    EdgeIdSet edge_set() const;
};

// Exact kind of a path carrying explicit edges; none when the sequence is not
// a simple path of g or fails every alternation pattern.
PathKind classify_path(const Graph& g, const Matching& m, const AltPath& p);

// Classifies a bare vertex sequence. Consecutive pairs resolve to the matched
// parallel edge when one exists, else the least edge id. A sequence whose
// first and last entries coincide is tested as a circuit.
PathKind classify(const Graph& g, const Matching& m, const std::vector<int>& sequence);

bool is_alternating_circuit(const Graph& g, const Matching& m, const Circuit& c);

// m triangle E(c); requires c alternating and m perfect, returns a perfect matching.
Matching switch_circuit(const Graph& g, const Matching& m, const Circuit& c);

// The component of m1 triangle m2 containing edge_id (which must lie in
// exactly one of the two perfect matchings).
Circuit symmetric_difference_circuit(const Graph& g, const Matching& m1, const Matching& m2,
                                     int edge_id);

// Path between x and y whose end edges are both matched, present iff
// g - x - y is factorizable. Deterministic: built from the symmetric
// difference with a deterministically chosen perfect matching of g - x - y.
std::optional<AltPath> saturated_path(const Graph& g, const Matching& m, int x, int y);

// Path from x to y, alternating, with only y uncovered within the path and
// every vertex inside confined. x == y yields the trivial path. The matching
// restricted to confined must cover all of confined or all of confined minus y.
std::optional<AltPath> balanced_path(const Graph& g, const Matching& m, int x, int y,
                                     const VertexSet& confined);

struct Ear {
    enum class Shape { proper, circuit };

    Shape shape;
    // proper: path sequence, both ends in the anchor set, edges.size() + 1 vertices.
    // circuit: closed sequence, vertices[0] is the single anchor-set vertex,
    // edges.size() == vertices.size().
    std::vector<int> vertices;
    std::vector<int> edges;

    bool trivial() const { return shape == Shape::proper && edges.size() == 1; }
    int anchor() const { return vertices.front(); }
    VertexSet vertex_set() const;
    EdgeIdSet edge_set() const;
    VertexSet interior() const;  // vertices outside the anchor set
};

bool is_ear_relative_to(const Graph& g, const Matching& m, const Ear& e, const VertexSet& x);

// Connected components of p minus the edges with both ends in x, each
// certified as an ear relative to x. Throws internal_error when a component
// fails the invariant (caller precondition violation).
std::vector<Ear> ear_split(const Graph& g, const Matching& m, const AltPath& p,
                           const VertexSet& x);
std::vector<Ear> ear_split(const Graph& g, const Matching& m, const Circuit& c,
                           const VertexSet& x);

// Exhaustive deterministic search for an ear relative to anchor_set whose
// vertex set meets traverse (empty traverse = unconstrained). Set
// allow_trivial = false to ask for an ear with at least two edges.
std::optional<Ear> find_ear(const Graph& g, const Matching& m, const VertexSet& anchor_set,
                            const VertexSet& traverse, bool allow_trivial = true);

// Exposed path between two factor-components, interior avoiding both.
struct Arc {
    AltPath path;
    int comp_a = -1;
    int comp_b = -1;
};

// Incremental closed/open walk assembly with incidence checks; violations
// throw internal_error because assembled walks certify proof claims.
class WalkBuilder {
public:
    explicit WalkBuilder(const Graph& g) : g_(g) {}

    void start(int v);
    void add_edge(int edge_id);
    void add_path(const AltPath& p);
    bool empty() const { return vertices_.empty(); }
    int current() const;

    AltPath path() const;     // vertices must be distinct
    Circuit circuit() const;  // walk must return to its start

private:
    const Graph& g_;
    std::vector<int> vertices_;
    std::vector<int> edges_;
};

}  // namespace tightcut
