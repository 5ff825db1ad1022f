#include "tightcut/altpath.hpp"

#include <algorithm>
#include <map>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

// Matched parallel edge when present, else least id; at most one parallel
// edge between u and v can be matched.
std::optional<int> resolve_edge(const Graph& g, const Matching& m, int u, int v) {
    auto ids = g.edge_ids_between(u, v);
    if (ids.empty()) return std::nullopt;
    for (int id : ids)
        if (m.contains(id)) return id;
    return ids.front();
}

bool vertices_distinct(const std::vector<int>& vs) {
    VertexSet seen(vs.begin(), vs.end());
    return seen.size() == vs.size();
}

bool edges_well_formed(const Graph& g, const std::vector<int>& vertices,
                       const std::vector<int>& edges, bool closed) {
    size_t k = edges.size();
    if (closed) {
        if (vertices.size() != k || k < 2) return false;
    } else {
        if (vertices.size() != k + 1) return false;
    }
    EdgeIdSet used;
    for (size_t i = 0; i < k; ++i) {
        int id = edges[i];
        if (!g.has_edge_id(id)) return false;
        int a = vertices[i];
        int b = vertices[closed ? (i + 1) % vertices.size() : i + 1];
        if (!g.edge(id).joins(a, b)) return false;
        if (!used.insert(id).second) return false;
    }
    return true;
}

PathKind classify_open(const Graph& g, const Matching& m, const std::vector<int>& vertices,
                       const std::vector<int>& edges) {
    if (!vertices_distinct(vertices)) return PathKind::none;
    for (int v : vertices)
        if (!g.has_vertex(v)) return PathKind::none;
    if (!edges_well_formed(g, vertices, edges, false)) return PathKind::none;
    size_t k = edges.size();
    if (k == 0) return PathKind::trivial;
    std::vector<bool> in_m(k);
    for (size_t i = 0; i < k; ++i) in_m[i] = m.contains(edges[i]);
    for (size_t i = 0; i + 1 < k; ++i)
        if (in_m[i] == in_m[i + 1]) return PathKind::none;
    if (k % 2 == 1) return in_m[0] ? PathKind::saturated : PathKind::exposed;
    return in_m[0] ? PathKind::balanced_forward : PathKind::balanced_backward;
}

}  // namespace

const char* to_string(PathKind k) {
    switch (k) {
        case PathKind::none: return "none";
        case PathKind::trivial: return "trivial";
        case PathKind::saturated: return "saturated";
        case PathKind::exposed: return "exposed";
        case PathKind::balanced_forward: return "balanced-forward";
        case PathKind::balanced_backward: return "balanced-backward";
        case PathKind::alternating_circuit: return "alternating-circuit";
    }
    return "none";
}

bool AltPath::contains_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

VertexSet AltPath::vertex_set() const { return VertexSet(vertices.begin(), vertices.end()); }

EdgeIdSet AltPath::edge_set() const { return EdgeIdSet(edges.begin(), edges.end()); }

AltPath reverse_path(const AltPath& p) {
    AltPath r = p;
    std::reverse(r.vertices.begin(), r.vertices.end());
    std::reverse(r.edges.begin(), r.edges.end());
    return r;
}

VertexSet Circuit::vertex_set() const { return VertexSet(vertices.begin(), vertices.end()); }

EdgeIdSet Circuit::edge_set() const { return EdgeIdSet(edges.begin(), edges.end()); }

PathKind classify_path(const Graph& g, const Matching& m, const AltPath& p) {
    return classify_open(g, m, p.vertices, p.edges);
}

PathKind classify(const Graph& g, const Matching& m, const std::vector<int>& sequence) {
    if (sequence.empty()) return PathKind::none;
    for (int v : sequence)
        require(g.has_vertex(v), "classify: unknown vertex id");
    bool closed = sequence.size() >= 3 && sequence.front() == sequence.back();
    std::vector<int> vertices = sequence;
    if (closed) vertices.pop_back();
    std::vector<int> edges;
    size_t k = closed ? vertices.size() : vertices.size() - 1;
    for (size_t i = 0; i < k; ++i) {
        auto e = resolve_edge(g, m, vertices[i], vertices[(i + 1) % vertices.size()]);
        if (!e) return PathKind::none;
        edges.push_back(*e);
    }
    if (closed) {
        Circuit c{vertices, edges};
        return is_alternating_circuit(g, m, c) ? PathKind::alternating_circuit : PathKind::none;
    }
    return classify_open(g, m, vertices, edges);
}

bool is_alternating_circuit(const Graph& g, const Matching& m, const Circuit& c) {
    if (!vertices_distinct(c.vertices)) return false;
    for (int v : c.vertices)
        if (!g.has_vertex(v)) return false;
    if (!edges_well_formed(g, c.vertices, c.edges, true)) return false;
    size_t k = c.edges.size();
    for (size_t i = 0; i < k; ++i)
        if (m.contains(c.edges[i]) == m.contains(c.edges[(i + 1) % k])) return false;
    return true;
}

Matching switch_circuit(const Graph& g, const Matching& m, const Circuit& c) {
    require(is_perfect_matching(g, m), "switch_circuit: matching is not perfect");
    require(is_alternating_circuit(g, m, c), "switch_circuit: circuit does not alternate");
    Matching out = m;
    for (int id : c.edges) {
        if (out.contains(id))
            out.edges.erase(id);
        else
            out.edges.insert(id);
    }
    ensure(is_perfect_matching(g, out), "switch_circuit: switched matching not perfect");
    return out;
}

Circuit symmetric_difference_circuit(const Graph& g, const Matching& m1, const Matching& m2,
                                     int edge_id) {
    require(is_perfect_matching(g, m1) && is_perfect_matching(g, m2),
            "symmetric_difference_circuit: both matchings must be perfect");
    require(m1.contains(edge_id) != m2.contains(edge_id),
            "symmetric_difference_circuit: edge must lie in exactly one matching");
    std::map<int, int> cm1 = cover_map(g, m1);
    std::map<int, int> cm2 = cover_map(g, m2);
    const Edge& e0 = g.edge(edge_id);
    Circuit c;
    c.vertices.push_back(e0.u);
    c.edges.push_back(edge_id);
    int current = e0.v;
    bool last_in_m1 = m1.contains(edge_id);
    while (current != e0.u) {
        c.vertices.push_back(current);
        int next = last_in_m1 ? cm2.at(current) : cm1.at(current);
        c.edges.push_back(next);
        current = g.edge(next).other(current);
        last_in_m1 = !last_in_m1;
    }
    ensure(is_alternating_circuit(g, m1, c) && is_alternating_circuit(g, m2, c),
           "symmetric_difference_circuit: walk is not an alternating circuit");
    return c;
}

std::optional<AltPath> saturated_path(const Graph& g, const Matching& m, int x, int y) {
    require(is_perfect_matching(g, m), "saturated_path: matching is not perfect");
    require(g.has_vertex(x) && g.has_vertex(y), "saturated_path: unknown endpoint");
    require(x != y, "saturated_path: endpoints coincide");
    auto rest = find_perfect_matching(g.delete_vertices({x, y}));
    if (!rest) return std::nullopt;
    std::map<int, int> cm = cover_map(g, m);
    std::map<int, int> cm2;
    for (int id : rest->edges) {
        const Edge& e = g.edge(id);
        cm2[e.u] = id;
        cm2[e.v] = id;
    }
    AltPath p;
    p.vertices.push_back(x);
    int current = x;
    bool take_m = true;
    while (current != y) {
        int eid = take_m ? cm.at(current) : cm2.at(current);
        p.edges.push_back(eid);
        current = g.edge(eid).other(current);
        p.vertices.push_back(current);
        take_m = !take_m;
    }
    ensure(classify_path(g, m, p) == PathKind::saturated,
           "saturated_path: symmetric-difference walk is not saturated");
    return p;
}

std::optional<AltPath> balanced_path(const Graph& g, const Matching& m, int x, int y,
                                     const VertexSet& confined) {
    require(confined.count(x) && confined.count(y), "balanced_path: endpoint outside confined set");
    require(is_subset(confined, g.vertices()), "balanced_path: confined set leaves the graph");
    if (x == y) return AltPath::single_vertex(x);

    Graph h = g.induced_subgraph(confined);
    Matching mr = restrict_matching(g, m, confined);
    std::map<int, int> cm = cover_map(h, mr);
    VertexSet uncovered;
    for (int v : confined)
        if (!cm.count(v)) uncovered.insert(v);
    require(uncovered.empty() || uncovered == VertexSet{y},
            "balanced_path: restricted matching must cover confined or confined minus y");

    // Reduce to a saturated search: pendant y' matched to y. When y is covered
    // inside the restriction, its matched edge can never lie on a balanced
    // path ending at y, so that edge is removed and y's partner keeps a
    // pendant of its own to stay covered.
    int aux_y = g.max_vertex_id() + 1;
    int aux_p = g.max_vertex_id() + 2;
    int next_edge = g.max_edge_id() + 1;

    VertexSet vs = h.vertices();
    std::vector<Edge> es = h.edges();
    Matching maux = mr;
    vs.insert(aux_y);
    if (uncovered.empty()) {
        int fy = cm.at(y);
        int partner = h.edge(fy).other(y);
        if (partner == x) return std::nullopt;  // x's only matched edge is unusable
        maux.edges.erase(fy);
        es.erase(std::remove_if(es.begin(), es.end(), [&](const Edge& e) { return e.id == fy; }),
                 es.end());
        vs.insert(aux_p);
        es.push_back(Edge{next_edge + 1, partner, aux_p});
        maux.edges.insert(next_edge + 1);
    }
    es.push_back(Edge{next_edge, y, aux_y});
    maux.edges.insert(next_edge);

    Graph gadget(vs, es);
    auto sp = saturated_path(gadget, maux, x, aux_y);
    if (!sp) return std::nullopt;
    AltPath p = *sp;
    ensure(p.vertices.back() == aux_y && p.edges.back() == next_edge,
           "balanced_path: gadget path must end at the pendant");
    p.vertices.pop_back();
    p.edges.pop_back();
    ensure(classify_path(g, m, p) == PathKind::balanced_forward,
           "balanced_path: stripped path fails the balanced pattern");
    ensure(is_subset(p.vertex_set(), confined), "balanced_path: path escapes the confined set");
    return p;
}

VertexSet Ear::vertex_set() const { return VertexSet(vertices.begin(), vertices.end()); }

EdgeIdSet Ear::edge_set() const { return EdgeIdSet(edges.begin(), edges.end()); }

VertexSet Ear::interior() const {
    if (shape == Shape::circuit) return VertexSet(vertices.begin() + 1, vertices.end());
    if (vertices.size() <= 2) return {};
    return VertexSet(vertices.begin() + 1, vertices.end() - 1);
}

bool is_ear_relative_to(const Graph& g, const Matching& m, const Ear& e, const VertexSet& x) {
    if (e.vertices.empty()) return false;
    if (e.shape == Ear::Shape::proper) {
        AltPath p{e.vertices, e.edges};
        if (classify_path(g, m, p) != PathKind::exposed) return false;
        if (!x.count(p.first()) || !x.count(p.last())) return false;
        for (size_t i = 1; i + 1 < e.vertices.size(); ++i)
            if (x.count(e.vertices[i])) return false;
        return true;
    }
    if (!vertices_distinct(e.vertices)) return false;
    if (!edges_well_formed(g, e.vertices, e.edges, true)) return false;
    if (!x.count(e.vertices.front())) return false;
    for (size_t i = 1; i < e.vertices.size(); ++i)
        if (x.count(e.vertices[i])) return false;
    if (m.contains(e.edges.front()) || m.contains(e.edges.back())) return false;
    AltPath tail{std::vector<int>(e.vertices.begin() + 1, e.vertices.end()),
                 std::vector<int>(e.edges.begin() + 1, e.edges.end() - 1)};
    return classify_path(g, m, tail) == PathKind::saturated;
}

namespace {

Ear certify_proper(const Graph& g, const Matching& m, std::vector<int> vertices,
                   std::vector<int> edges, const VertexSet& x) {
    Ear e{Ear::Shape::proper, std::move(vertices), std::move(edges)};
    ensure(is_ear_relative_to(g, m, e, x), "ear_split: component fails the ear invariant");
    return e;
}

}  // namespace

std::vector<Ear> ear_split(const Graph& g, const Matching& m, const AltPath& p,
                           const VertexSet& x) {
    require(classify_path(g, m, p) != PathKind::none, "ear_split: input does not alternate");
    require(p.trivial() || (x.count(p.first()) && x.count(p.last())),
            "ear_split: path ends must lie in the split set");
    std::vector<Ear> out;
    size_t i = 0;
    while (i < p.edges.size()) {
        const Edge& e = g.edge(p.edges[i]);
        if (x.count(e.u) && x.count(e.v)) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < p.edges.size()) {
            const Edge& f = g.edge(p.edges[j]);
            if (x.count(f.u) && x.count(f.v)) break;
            ++j;
        }
        out.push_back(certify_proper(
            g, m, std::vector<int>(p.vertices.begin() + i, p.vertices.begin() + j + 1),
            std::vector<int>(p.edges.begin() + i, p.edges.begin() + j), x));
        i = j;
    }
    return out;
}

std::vector<Ear> ear_split(const Graph& g, const Matching& m, const Circuit& c,
                           const VertexSet& x) {
    size_t k = c.edges.size();
    std::vector<size_t> internal;
    for (size_t i = 0; i < k; ++i) {
        const Edge& e = g.edge(c.edges[i]);
        if (x.count(e.u) && x.count(e.v)) internal.push_back(i);
    }
    if (internal.empty()) {
        std::vector<int> anchors;
        for (size_t i = 0; i < c.vertices.size(); ++i)
            if (x.count(c.vertices[i])) anchors.push_back(static_cast<int>(i));
        ensure(anchors.size() == 1, "ear_split: uncut circuit must meet the set in one vertex");
        size_t a = static_cast<size_t>(anchors.front());
        Ear e{Ear::Shape::circuit, {}, {}};
        for (size_t i = 0; i < k; ++i) {
            e.vertices.push_back(c.vertices[(a + i) % k]);
            e.edges.push_back(c.edges[(a + i) % k]);
        }
        ensure(is_ear_relative_to(g, m, e, x), "ear_split: circuit fails the one-point invariant");
        return {e};
    }
    std::vector<Ear> out;
    for (size_t t = 0; t < internal.size(); ++t) {
        size_t from = internal[t];
        size_t to = internal[(t + 1) % internal.size()];
        // run of edges strictly between the two internal edges, cyclically
        std::vector<int> vertices, edges;
        size_t i = (from + 1) % k;
        vertices.push_back(c.vertices[i]);
        while (i != to) {
            edges.push_back(c.edges[i]);
            i = (i + 1) % k;
            vertices.push_back(c.vertices[i]);
        }
        if (edges.empty()) continue;
        out.push_back(certify_proper(g, m, std::move(vertices), std::move(edges), x));
    }
    return out;
}

namespace {

struct EarSearch {
    const Graph& g;
    const Matching& m;
    const VertexSet& anchor;
    const VertexSet& traverse;
    int start = -1;
    std::vector<int> vertices, edges;
    VertexSet visited;

    bool traverse_ok(int extra) const {
        if (traverse.empty()) return true;
        for (int v : vertices)
            if (traverse.count(v)) return true;
        return traverse.count(extra) > 0;
    }

    // current = last vertex, reached through an unmatched edge; take the
    // forced matched step, then close or extend.
    std::optional<Ear> dfs(int current) {
        auto em = matched_edge_at(g, m, current);
        if (!em) return std::nullopt;
        int w = g.edge(*em).other(current);
        if (anchor.count(w) || visited.count(w)) return std::nullopt;
        vertices.push_back(w);
        edges.push_back(*em);
        visited.insert(w);
        for (auto [t, eid] : g.incident(w)) {
            if (m.contains(eid)) continue;
            if (t == start) {
                if (vertices.size() >= 3 && traverse_ok(t)) {
                    Ear e{Ear::Shape::circuit, vertices, edges};
                    e.edges.push_back(eid);
                    if (is_ear_relative_to(g, m, e, anchor)) return e;
                }
                continue;
            }
            if (anchor.count(t)) {
                if (!traverse_ok(t)) continue;
                Ear e{Ear::Shape::proper, vertices, edges};
                e.vertices.push_back(t);
                e.edges.push_back(eid);
                if (is_ear_relative_to(g, m, e, anchor)) return e;
                continue;
            }
            if (visited.count(t)) continue;
            visited.insert(t);
            vertices.push_back(t);
            edges.push_back(eid);
            if (auto found = dfs(t)) return found;
            vertices.pop_back();
            edges.pop_back();
            visited.erase(t);
        }
        vertices.pop_back();
        edges.pop_back();
        visited.erase(w);
        return std::nullopt;
    }
};

}  // namespace

std::optional<Ear> find_ear(const Graph& g, const Matching& m, const VertexSet& anchor_set,
                            const VertexSet& traverse, bool allow_trivial) {
    require(is_subset(anchor_set, g.vertices()), "find_ear: anchor set leaves the graph");
    for (int x0 : anchor_set) {
        for (auto [w, eid] : g.incident(x0)) {
            if (m.contains(eid)) continue;
            if (anchor_set.count(w)) {
                if (!allow_trivial) continue;
                Ear e{Ear::Shape::proper, {x0, w}, {eid}};
                if (!traverse.empty() && !traverse.count(x0) && !traverse.count(w)) continue;
                if (is_ear_relative_to(g, m, e, anchor_set)) return e;
                continue;
            }
            EarSearch search{g, m, anchor_set, traverse, x0, {x0, w}, {eid}, {w}};
            if (auto found = search.dfs(w)) return found;
        }
    }
    return std::nullopt;
}

void WalkBuilder::start(int v) {
    ensure(vertices_.empty(), "walk: start called twice");
    ensure(g_.has_vertex(v), "walk: unknown start vertex");
    vertices_.push_back(v);
}

int WalkBuilder::current() const {
    ensure(!vertices_.empty(), "walk: empty");
    return vertices_.back();
}

void WalkBuilder::add_edge(int edge_id) {
    ensure(!vertices_.empty(), "walk: add_edge before start");
    ensure(g_.has_edge_id(edge_id), "walk: unknown edge id");
    const Edge& e = g_.edge(edge_id);
    ensure(e.incident_to(vertices_.back()), "walk: edge does not continue the walk");
    edges_.push_back(edge_id);
    vertices_.push_back(e.other(vertices_.back()));
}

void WalkBuilder::add_path(const AltPath& p) {
    ensure(!p.vertices.empty(), "walk: empty path segment");
    if (vertices_.empty()) {
        start(p.first());
    } else {
        ensure(vertices_.back() == p.first(), "walk: path segment does not continue the walk");
    }
    for (size_t i = 0; i < p.edges.size(); ++i) add_edge(p.edges[i]);
}

AltPath WalkBuilder::path() const {
    AltPath p{vertices_, edges_};
    ensure(vertices_distinct(p.vertices), "walk: open walk repeats a vertex");
    return p;
}

Circuit WalkBuilder::circuit() const {
    ensure(vertices_.size() >= 3 && vertices_.front() == vertices_.back(),
           "walk: circuit must return to its start");
    Circuit c{std::vector<int>(vertices_.begin(), vertices_.end() - 1), edges_};
    ensure(vertices_distinct(c.vertices), "walk: circuit repeats a vertex");
    ensure(c.vertices.size() == c.edges.size(), "walk: circuit edge count mismatch");
    EdgeIdSet distinct(c.edges.begin(), c.edges.end());
    ensure(distinct.size() == c.edges.size(), "walk: circuit repeats an edge");
    return c;
}

}  // namespace tightcut
