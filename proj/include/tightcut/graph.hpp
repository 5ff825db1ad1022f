#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace tightcut {

using VertexSet = std::set<int>;
using EdgeIdSet = std::set<int>;

struct Edge {
    int id;
    int u, v;  // endpoints, stored with u < v; never equal

    int other(int w) const { return w == u ? v : u; }
    bool joins(int a, int b) const { return (u == a && v == b) || (u == b && v == a); }
    bool incident_to(int w) const { return u == w || v == w; }
};

// Immutable undirected multigraph. Vertex ids and edge ids are stable:
// induced subgraphs, deletions and contractions keep the surviving ids
// unchanged, so results computed on derived graphs can be read back
// against the original. Self-loops are rejected; parallel edges are kept.
class Graph {
public:
    Graph() = default;
    Graph(VertexSet vertices, std::vector<Edge> edges);

    // Vertices 1..n; edge ids are positions in `edges` (0-based).
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const VertexSet& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    bool has_edge_id(int id) const { return edge_index_.count(id) != 0; }
    const Edge& edge(int id) const;

    // Incident (neighbor, edge id) pairs sorted by neighbor then edge id.
    const std::vector<std::pair<int, int>>& incident(int v) const;
    std::vector<int> edge_ids_between(int a, int b) const;
    VertexSet neighbors(int v) const;
    VertexSet neighbor_set(const VertexSet& x) const;  // N(X), disjoint from X
    // E[X, Y]: ids of edges with one end in x and the other in y.
    std::vector<int> edges_between_sets(const VertexSet& x, const VertexSet& y) const;
    std::vector<int> cut_edges(const VertexSet& x) const;  // delta(X)

    Graph induced_subgraph(const VertexSet& x) const;
    Graph delete_vertices(const VertexSet& x) const;
    Graph delete_vertex(int v) const;
    Graph delete_edge(int id) const;
    // Collapses x to its least vertex id; drops loops, keeps parallels.
    Graph contract(const VertexSet& x) const;

    // Sorted by least contained vertex id.
    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;  // true for the empty and one-vertex graph
    // |V| >= 4 and every two-vertex deletion leaves a connected graph.
    bool is_three_connected() const;

    int max_vertex_id() const { return vertices_.empty() ? 0 : *vertices_.rbegin(); }
    int max_edge_id() const;

private:
    VertexSet vertices_;
    std::vector<Edge> edges_;  // sorted by id
    std::map<int, int> edge_index_;
    std::map<int, std::vector<std::pair<int, int>>> adjacency_;
};

bool set_contains(const VertexSet& s, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool sets_intersect(const VertexSet& a, const VertexSet& b);

}  // namespace tightcut
