#include "tightcut/matching.hpp"

#include <algorithm>
#include <vector>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

// Edmonds' blossom algorithm over compact vertex indices, O(V^3).
// Parallel edges collapse into one adjacency entry; that is enough to
// decide existence, and callers map mate pairs back to least edge ids.
class BlossomSolver {
public:
    explicit BlossomSolver(const std::vector<std::vector<int>>& adj)
        : n_(static_cast<int>(adj.size())), adj_(adj), match_(n_, -1) {}

    // Returns mate indices (-1 for exposed vertices).
    const std::vector<int>& solve() {
        greedy_init();
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int w = find_augmenting_path(v);
            while (w != -1) {
                int pw = parent_[w], npw = match_[pw];
                match_[w] = pw;
                match_[pw] = w;
                w = npw;
            }
        }
        return match_;
    }

private:
    void greedy_init() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
    }

    int lowest_common_ancestor(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(n_, false);
        parent_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;

        used_[root] = true;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int b = lowest_common_ancestor(v, to);
                    std::vector<bool> in_blossom(n_, false);
                    mark_path(v, b, to, in_blossom);
                    mark_path(to, b, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_;
};

std::vector<int> maximum_matching_mates(const Graph& g, std::vector<int>& index_to_id) {
    index_to_id.assign(g.vertices().begin(), g.vertices().end());
    std::map<int, int> id_to_index;
    for (int i = 0; i < static_cast<int>(index_to_id.size()); ++i)
        id_to_index[index_to_id[i]] = i;
    std::vector<std::vector<int>> adj(index_to_id.size());
    for (int v : g.vertices()) {
        int vi = id_to_index[v];
        int last = -1;
        for (auto [w, eid] : g.incident(v)) {
            if (w == last) continue;  // collapse parallels
            last = w;
            adj[vi].push_back(id_to_index[w]);
        }
    }
    return BlossomSolver(adj).solve();
}

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
    VertexSet covered;
    for (int id : m.edges) {
        if (!g.has_edge_id(id)) return false;
        const Edge& e = g.edge(id);
        if (covered.count(e.u) || covered.count(e.v)) return false;
        covered.insert(e.u);
        covered.insert(e.v);
    }
    return true;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
    return is_matching(g, m) && 2 * m.size() == g.vertex_count();
}

std::map<int, int> cover_map(const Graph& g, const Matching& m) {
    std::map<int, int> out;
    for (int id : m.edges) {
        const Edge& e = g.edge(id);
        out[e.u] = id;
        out[e.v] = id;
    }
    return out;
}

std::optional<int> matched_edge_at(const Graph& g, const Matching& m, int v) {
    for (auto [w, eid] : g.incident(v))
        if (m.contains(eid)) return eid;
    return std::nullopt;
}

std::optional<int> matched_partner(const Graph& g, const Matching& m, int v) {
    auto e = matched_edge_at(g, m, v);
    if (!e) return std::nullopt;
    return g.edge(*e).other(v);
}

std::optional<Matching> find_perfect_matching(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    if (g.vertex_count() == 0) return Matching{};
    std::vector<int> index_to_id;
    std::vector<int> mate = maximum_matching_mates(g, index_to_id);
    Matching m;
    for (int i = 0; i < static_cast<int>(mate.size()); ++i) {
        if (mate[i] == -1) return std::nullopt;
        if (mate[i] < i) continue;
        auto ids = g.edge_ids_between(index_to_id[i], index_to_id[mate[i]]);
        m.edges.insert(ids.front());
    }
    return m;
}

std::optional<Matching> find_perfect_matching_containing(const Graph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    auto rest = find_perfect_matching(g.delete_vertices({e.u, e.v}));
    if (!rest) return std::nullopt;
    rest->edges.insert(edge_id);
    return rest;
}

Matching restrict_matching(const Graph& g, const Matching& m, const VertexSet& x) {
    Matching out;
    for (int id : m.edges) {
        const Edge& e = g.edge(id);
        if (x.count(e.u) && x.count(e.v)) out.edges.insert(id);
    }
    return out;
}

bool is_factorizable(const Graph& g) {
    return find_perfect_matching(g).has_value();
}

bool is_factor_critical(const Graph& g) {
    if (g.vertex_count() == 1) return true;
    for (int v : g.vertices())
        if (!is_factorizable(g.delete_vertex(v))) return false;
    return true;
}

EdgeIdSet allowed_edges(const Graph& g) {
    require(is_factorizable(g), "allowed_edges: graph is not factorizable");
    EdgeIdSet out;
    for (const Edge& e : g.edges())
        if (is_factorizable(g.delete_vertices({e.u, e.v}))) out.insert(e.id);
    return out;
}

std::optional<std::pair<int, int>> brick_failure_pair(const Graph& g) {
    std::vector<int> vs(g.vertices().begin(), g.vertices().end());
    for (size_t i = 0; i < vs.size(); ++i) {
        for (size_t j = i + 1; j < vs.size(); ++j) {
            Graph h = g.delete_vertices({vs[i], vs[j]});
            if (!h.is_connected() || !is_factorizable(h))
                return std::make_pair(vs[i], vs[j]);
        }
    }
    return std::nullopt;
}

bool is_brick(const Graph& g) {
    if (g.vertex_count() < 4 || g.vertex_count() % 2 != 0) return false;
    return !brick_failure_pair(g).has_value();
}

}  // namespace tightcut
