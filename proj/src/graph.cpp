#include "tightcut/graph.hpp"

#include <algorithm>
#include <queue>

#include "tightcut/errors.hpp"

namespace tightcut {

Graph::Graph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (auto& e : edges_) {
        require(e.u != e.v, "graph: self-loop on vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        require(vertices_.count(e.u) && vertices_.count(e.v),
                "graph: edge " + std::to_string(e.id) + " has unknown endpoint");
    }
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        require(edge_index_.emplace(edges_[i].id, i).second,
                "graph: duplicate edge id " + std::to_string(edges_[i].id));
    }
    for (int v : vertices_) adjacency_[v];
    for (const auto& e : edges_) {
        adjacency_[e.u].emplace_back(e.v, e.id);
        adjacency_[e.v].emplace_back(e.u, e.id);
    }
    for (auto& [v, inc] : adjacency_) std::sort(inc.begin(), inc.end());
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    require(n >= 0, "graph: negative vertex count");
    VertexSet verts;
    for (int v = 1; v <= n; ++v) verts.insert(v);
    std::vector<Edge> es;
    es.reserve(edges.size());
    int id = 0;
    for (auto [u, v] : edges) es.push_back(Edge{id++, u, v});
    return Graph(std::move(verts), std::move(es));
}

const Edge& Graph::edge(int id) const {
    auto it = edge_index_.find(id);
    require(it != edge_index_.end(), "graph: no edge with id " + std::to_string(id));
    return edges_[it->second];
}

const std::vector<std::pair<int, int>>& Graph::incident(int v) const {
    auto it = adjacency_.find(v);
    require(it != adjacency_.end(), "graph: no vertex " + std::to_string(v));
    return it->second;
}

std::vector<int> Graph::edge_ids_between(int a, int b) const {
    std::vector<int> out;
    for (auto [w, id] : incident(a))
        if (w == b) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet Graph::neighbors(int v) const {
    VertexSet out;
    for (auto [w, id] : incident(v)) out.insert(w);
    return out;
}

VertexSet Graph::neighbor_set(const VertexSet& x) const {
    VertexSet out;
    for (int v : x) {
        require(has_vertex(v), "neighbor_set: no vertex " + std::to_string(v));
        for (auto [w, id] : incident(v))
            if (!x.count(w)) out.insert(w);
    }
    return out;
}

std::vector<int> Graph::edges_between_sets(const VertexSet& x, const VertexSet& y) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
        bool fwd = x.count(e.u) && y.count(e.v);
        bool bwd = x.count(e.v) && y.count(e.u);
        if (fwd || bwd) out.push_back(e.id);
    }
    return out;
}

std::vector<int> Graph::cut_edges(const VertexSet& x) const {
    std::vector<int> out;
    for (const auto& e : edges_)
        if (x.count(e.u) != x.count(e.v)) out.push_back(e.id);
    return out;
}

Graph Graph::induced_subgraph(const VertexSet& x) const {
    for (int v : x) require(has_vertex(v), "induced_subgraph: no vertex " + std::to_string(v));
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (x.count(e.u) && x.count(e.v)) es.push_back(e);
    return Graph(x, std::move(es));
}

Graph Graph::delete_vertices(const VertexSet& x) const {
    for (int v : x) require(has_vertex(v), "delete_vertices: no vertex " + std::to_string(v));
    return induced_subgraph(set_difference(vertices_, x));
}

Graph Graph::delete_vertex(int v) const { return delete_vertices(VertexSet{v}); }

Graph Graph::delete_edge(int id) const {
    require(has_edge_id(id), "delete_edge: no edge " + std::to_string(id));
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (e.id != id) es.push_back(e);
    return Graph(vertices_, std::move(es));
}

Graph Graph::contract(const VertexSet& x) const {
    require(!x.empty(), "contract: empty vertex set");
    for (int v : x) require(has_vertex(v), "contract: no vertex " + std::to_string(v));
    int rep = *x.begin();
    VertexSet verts;
    for (int v : vertices_)
        if (!x.count(v) || v == rep) verts.insert(v);
    std::vector<Edge> es;
    for (const auto& e : edges_) {
        int u = x.count(e.u) ? rep : e.u;
        int v = x.count(e.v) ? rep : e.v;
        if (u == v) continue;
        es.push_back(Edge{e.id, u, v});
    }
    return Graph(std::move(verts), std::move(es));
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int start : vertices_) {
        if (seen.count(start)) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.insert(v);
            for (auto [w, id] : incident(v)) {
                if (!seen.count(w)) {
                    seen.insert(w);
                    q.push(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;  // already ordered by least vertex: set iteration is ascending
}

bool Graph::is_connected() const {
    if (vertices_.size() <= 1) return true;
    return connected_components().size() == 1;
}

bool Graph::is_three_connected() const {
    if (vertex_count() < 4) return false;
    std::vector<int> vs(vertices_.begin(), vertices_.end());
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!delete_vertices({vs[i], vs[j]}).is_connected()) return false;
    return true;
}

int Graph::max_edge_id() const {
    return edges_.empty() ? -1 : edges_.back().id;
}

bool set_contains(const VertexSet& s, int v) { return s.count(v) != 0; }

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

bool sets_intersect(const VertexSet& a, const VertexSet& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt) ++it;
        else if (*jt < *it) ++jt;
        else return true;
    }
    return false;
}

}  // namespace tightcut
