#include "tightcut/engine.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

int crossing_count(const Graph& g, const Matching& m, const VertexSet& shore) {
    int c = 0;
    for (int id : g.cut_edges(shore))
        if (m.contains(id)) ++c;
    return c;
}

// Shared entry contract of the two case branches: uv is the matched pair
// deleted from the host, g the remainder, s separating in g. Returns the
// matched edge id joining u and v.
int check_reduction(const Graph& host, const Matching& host_m, const Graph& g, const VertexSet& s,
                    int u, int v, const Matching& m, const CanonicalDecomposition& d) {
    require(host.has_vertex(u) && host.has_vertex(v), "deleted pair outside the host");
    require(is_perfect_matching(host, host_m), "host matching is not perfect");
    std::optional<int> uv = matched_edge_at(host, host_m, u);
    require(uv.has_value() && host.edge(*uv).joins(u, v), "u and v are not a matched pair");
    require(!g.has_vertex(u) && !g.has_vertex(v) && g.vertex_count() == host.vertex_count() - 2,
            "graph is not the host minus the deleted pair");
    require(d.graph().vertices() == g.vertices(), "decomposition built over another graph");
    require(is_perfect_matching(g, m), "reduced matching is not perfect");
    require(is_subset(s, g.vertices()), "side leaves the reduced graph");
    require(is_separating(d, s), "side is not separating");
    return *uv;
}

// Closes a proper ear relative to a subset of the shore side with a
// saturated host path between its ends; the path must run through the
// deleted pair, and meets the ear only at the ends.
Circuit close_proper_ear(const Graph& host, const Matching& host_m, int u, int v,
                         const Ear& ear) {
    ensure(ear.shape == Ear::Shape::proper, "closing a one-point ear");
    int x = ear.vertices.front();
    int y = ear.vertices.back();
    ensure(x != y, "proper ear with coinciding ends");
    std::optional<AltPath> q = saturated_path(host, host_m, x, y);
    ensure(q.has_value(), "ear ends lost saturation in the host");
    const std::vector<int>& qv = q->vertices;
    int pu = -1, pv = -1;
    for (int i = 0; i < static_cast<int>(qv.size()); ++i) {
        if (qv[i] == u) pu = i;
        if (qv[i] == v) pv = i;
    }
    ensure(pu >= 0 && pv >= 0, "saturated closure avoided the deleted pair");
    int lo = std::min(pu, pv);
    ensure(std::max(pu, pv) == lo + 1, "deleted pair split along the closure");
    ensure(host_m.contains(q->edges[lo]), "closure crossed the deleted pair off the matching");
    VertexSet ev = ear.vertex_set();
    VertexSet half1(qv.begin(), qv.begin() + lo);
    VertexSet half2(qv.begin() + lo + 2, qv.end());
    ensure(set_intersection(half1, ev) == VertexSet{x}, "closure re-entered the ear");
    ensure(set_intersection(half2, ev) == VertexSet{y}, "closure re-entered the ear");

    WalkBuilder bld(host);
    bld.add_path(AltPath{ear.vertices, ear.edges});
    bld.add_path(reverse_path(*q));
    Circuit k = bld.circuit();
    ensure(is_alternating_circuit(host, host_m, k), "ear closure does not alternate");
    return k;
}

// Attaches saturated tails from the arc ends through the deleted pair:
// s1 -> t1, t1-v, v-u, u-t2, t2 -> s2, then back along the arc.
Circuit close_arc(const Graph& host, const Matching& host_m, const Graph& g, const VertexSet& s,
                  int u, int v, const Matching& m, const CanonicalDecomposition& d, int uv_edge,
                  const std::vector<Border>& border_list, Arc arc) {
    ensure(!arc.path.trivial(), "spanning arc degenerated");
    if (!is_subset(d.component(arc.comp_a).vertices, s)) {
        std::swap(arc.comp_a, arc.comp_b);
        arc.path = reverse_path(arc.path);
    }
    ensure(is_subset(d.component(arc.comp_a).vertices, s), "no arc end inside the side");
    int h1 = arc.comp_a;
    int h2 = arc.comp_b;
    ensure(h1 != h2, "spanning arc over a single base");
    int s1 = arc.path.first();
    int s2 = arc.path.last();
    // spanning sequences leave a border only through its port
    auto port_of = [&](int h) {
        for (const Border& b : border_list)
            if (b.component == h) {
                ensure(b.port.has_value(), "spanning arc ends at a portless border");
                return *b.port;
            }
        ensure(false, "spanning arc end is not a border");
        return -1;
    };
    int c1 = d.class_index_of(s1);
    int c2 = d.class_index_of(s2);
    ensure(port_of(h1) == c1 && port_of(h2) == c2, "arc left a border off its port");

    // the deleted pair keeps neighbors beyond each port tower
    VertexSet n1 = set_intersection(host.neighbors(v), d.vcoup_class(h1, c1));
    VertexSet n2 = set_intersection(host.neighbors(u), d.vcoup_class(h2, c2));
    ensure(!n1.empty() && !n2.empty(), "deleted pair misses a port co-tower");
    int t1 = *n1.begin();
    int t2 = *n2.begin();
    AltPath q1 = saturated_to_coup(g, m, d, h1, s1, t1);
    AltPath q2 = saturated_to_coup(g, m, d, h2, s2, t2);
    VertexSet pset = arc.path.vertex_set();
    ensure(!sets_intersect(q1.vertex_set(), q2.vertex_set()), "co-tower tails collide");
    ensure(set_intersection(q1.vertex_set(), pset) == VertexSet{s1}, "tail re-entered the arc");
    ensure(set_intersection(q2.vertex_set(), pset) == VertexSet{s2}, "tail re-entered the arc");

    WalkBuilder bld(host);
    bld.add_path(q1);
    bld.add_edge(host.edge_ids_between(t1, v).front());
    bld.add_edge(uv_edge);
    bld.add_edge(host.edge_ids_between(u, t2).front());
    bld.add_path(reverse_path(q2));
    bld.add_path(reverse_path(arc.path));
    Circuit k = bld.circuit();
    ensure(is_alternating_circuit(host, host_m, k), "arc closure does not alternate");
    return k;
}

}  // namespace

Circuit case_mixed(const Graph& host, const Matching& host_m, const Graph& g, const VertexSet& s,
                   int u, int v, const Matching& m, const CanonicalDecomposition& d,
                   std::vector<std::string>& trace) {
    int uv_edge = check_reduction(host, host_m, g, s, u, v, m, d);
    VertexSet sbar = set_difference(g.vertices(), s);

    int far_min = -1;
    for (int h : d.minimal_components())
        if (is_subset(d.component(h).vertices, sbar)) {
            far_min = h;
            break;
        }
    require(far_min >= 0, "no minimal component beyond the side");

    std::vector<Border> border_list = borders(g, d);
    std::vector<int> near_borders, far_borders;
    for (const Border& b : border_list) {
        const VertexSet& hv = d.component(b.component).vertices;
        if (is_subset(hv, s))
            near_borders.push_back(b.component);
        else if (is_subset(hv, sbar))
            far_borders.push_back(b.component);
        else
            ensure(false, "border crosses a separating side");
    }
    require(!near_borders.empty(), "no border inside the side");

    Arc arc;
    if (!far_borders.empty()) {
        std::optional<TowerSequence> seq = find_tower_sequence(g, d, near_borders, far_borders);
        ensure(seq.has_value(), "borders on both sides but no tower route between them");
        arc = arc_from_sequence(g, m, d, *seq);
        trace.push_back("mixed/far-border");
    } else {
        arc = spanning_arc_through(g, m, d, far_min);
        trace.push_back("mixed/enclosed-minimal");
    }
    return close_arc(host, host_m, g, s, u, v, m, d, uv_edge, border_list, std::move(arc));
}

VertexSet compute_s0(const CanonicalDecomposition& d, const VertexSet& s) {
    for (int h : d.minimal_components())
        require(is_subset(d.component(h).vertices, s), "a minimal component escapes the side");
    VertexSet s0;
    for (int h = 0; h < d.component_count(); ++h) {
        bool ideal = true;
        for (int below : d.lower_set(h))
            if (!is_subset(d.component(below).vertices, s)) {
                ideal = false;
                break;
            }
        if (ideal) s0 = set_union(s0, d.component(h).vertices);
    }
    ensure(!s0.empty(), "ideal below the side came out empty");
    return s0;
}

Ear ear_for_min_component(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                          const VertexSet& s0, const CanonicalDecomposition& dc, int h) {
    require(h >= 0 && h < dc.component_count(), "no such piece component");
    require(dc.is_minimal(h), "component is not minimal in its piece");
    const VertexSet& hv = dc.component(h).vertices;
    int hg = -1;
    for (int i = 0; i < d.component_count(); ++i)
        if (d.component(i).vertices == hv) {
            hg = i;
            break;
        }
    ensure(hg >= 0, "piece component missing from the host decomposition");
    ensure(!d.is_minimal(hg), "piece-minimal component is minimal in the host");
    std::vector<int> lbs = d.immediate_lower_bounds(hg);
    ensure(!lbs.empty(), "non-minimal component with no immediate lower bound");
    for (int i : lbs)
        ensure(is_subset(d.component(i).vertices, s0), "immediate lower bound beyond the ideal");

    const VertexSet& anchor = d.component(lbs.front()).vertices;
    std::optional<Ear> ear0 = find_ear(g, m, anchor, hv);
    ensure(ear0.has_value(), "no alternating ear reaches the component from below");
    std::vector<Ear> pieces;
    if (ear0->shape == Ear::Shape::proper)
        pieces = ear_split(g, m, AltPath{ear0->vertices, ear0->edges}, s0);
    else
        pieces = ear_split(g, m, Circuit{ear0->vertices, ear0->edges}, s0);
    for (const Ear& piece : pieces)
        if (sets_intersect(piece.vertex_set(), hv)) return piece;
    ensure(false, "splitting lost the traversed component");
    return pieces.front();
}

AltPath balanced_to_ear_end(const Graph& g, const Matching& m, const CanonicalDecomposition& dc,
                            int h, int y, const Ear& p_h) {
    const Graph& c = dc.graph();
    require(h >= 0 && h < dc.component_count(), "no such piece component");
    const VertexSet& up = dc.vupstar_component(h);
    require(set_contains(up, y), "start vertex outside the tower");

    const std::vector<int>& vs = p_h.vertices;
    const std::vector<int>& es = p_h.edges;
    int k = static_cast<int>(es.size());
    auto inside = [&](int eid) {
        const Edge& e = g.edge(eid);
        return set_contains(up, e.u) && set_contains(up, e.v);
    };
    int a = -1, b = -1;
    for (int i = 0; i < k; ++i) {
        if (!inside(es[i])) continue;
        if (a < 0) a = i;
        b = i;
    }
    ensure(a >= 0, "ear carries no tower edge");
    for (int i = a; i <= b; ++i) ensure(inside(es[i]), "tower edges of the ear split apart");
    ensure(a >= 1 && b <= k - 2, "ear end edge lies inside the tower");

    // arms from the block boundary out to the ear ends; an arm vertex back
    // inside the tower would pull its matched edge into the block
    AltPath arm1 = reverse_path(AltPath{std::vector<int>(vs.begin(), vs.begin() + a + 1),
                                        std::vector<int>(es.begin(), es.begin() + a)});
    AltPath arm2;
    if (p_h.shape == Ear::Shape::proper) {
        arm2 = AltPath{std::vector<int>(vs.begin() + b + 1, vs.end()),
                       std::vector<int>(es.begin() + b + 1, es.end())};
    } else {
        std::vector<int> rv(vs.begin() + b + 1, vs.end());
        rv.push_back(vs.front());
        arm2 = AltPath{std::move(rv), std::vector<int>(es.begin() + b + 1, es.end())};
    }

    auto class_within = [&](int w) {
        int ncls = static_cast<int>(dc.classes(h).size());
        for (int sidx = 0; sidx < ncls; ++sidx)
            if (set_contains(dc.vupstar_class(h, sidx), w)) return sidx;
        ensure(false, "tower vertex outside every class column");
        return -1;
    };
    int t1 = class_within(arm1.first());
    int t2 = class_within(arm2.first());
    ensure(t1 != t2, "ear arms lean on one class column");
    int t3 = class_within(y);
    const AltPath& arm = (t1 != t3) ? arm1 : arm2;

    Matching mc = restrict_matching(g, m, c.vertices());
    AltPath l = saturated_within_upstar(c, mc, dc, h, y, arm.first());

    WalkBuilder bld(g);
    bld.add_path(l);
    bld.add_path(arm);
    AltPath q = bld.path();
    ensure(classify_path(g, m, q) == PathKind::balanced_forward, "tower exit path is not balanced");
    for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i)
        ensure(c.has_vertex(q.vertices[i]), "tower exit path left the piece early");
    ensure(sets_intersect(q.vertex_set(), dc.component(h).vertices),
           "tower exit path avoided the component");
    return q;
}

Circuit case_contained(const Graph& host, const Matching& host_m, const Graph& g,
                       const VertexSet& s, int u, int v, const Matching& m,
                       const CanonicalDecomposition& d, std::vector<std::string>& trace) {
    int uv_edge = check_reduction(host, host_m, g, s, u, v, m, d);
    VertexSet sbar = set_difference(g.vertices(), s);
    VertexSet s0 = compute_s0(d, s);

    Graph rest = g.delete_vertices(s0);
    ensure(rest.vertex_count() > 0, "ideal swallowed the whole graph");
    VertexSet cset = rest.connected_components().front();
    Graph c = g.induced_subgraph(cset);
    ensure(is_factorizable(c), "piece beyond the ideal is not factorizable");
    Matching mc = restrict_matching(g, m, cset);
    CanonicalDecomposition dc = CanonicalDecomposition::analyze(c);
    std::vector<int> piece_min = dc.minimal_components();
    for (int h : piece_min)
        ensure(is_subset(dc.component(h).vertices, sbar), "piece-minimal component inside the side");

    VertexSet doors = set_intersection(g.neighbor_set(cset), s0);
    ensure(!doors.empty(), "piece with no door into the ideal");

    if (doors.size() == 1) {
        // single door: every split ear is a one-point circuit around it
        int x0 = *doors.begin();
        VertexSet uside = set_intersection(host.neighbors(u), cset);
        ensure(!uside.empty(), "deleted vertex misses the piece");
        int y = *uside.begin();
        int h = -1;
        for (int hh : piece_min)
            if (set_contains(dc.vupstar_component(hh), y)) {
                h = hh;
                break;
            }
        ensure(h >= 0, "piece vertex beyond every minimal tower");
        Ear ph = ear_for_min_component(g, m, d, s0, dc, h);
        ensure(ph.shape == Ear::Shape::circuit && ph.anchor() == x0,
               "single door yet a stray ear end");
        AltPath q = balanced_to_ear_end(g, m, dc, h, y, ph);

        Graph ideal = g.induced_subgraph(s0);
        Matching mi = restrict_matching(g, m, s0);
        int z = -1;
        std::optional<AltPath> run;
        for (int zz : set_intersection(host.neighbors(v), s0)) {
            if (zz == x0) continue;
            run = saturated_path(ideal, mi, x0, zz);
            if (run.has_value()) {
                z = zz;
                break;
            }
        }
        ensure(z >= 0, "no saturated run inside the ideal reaches the deleted vertex");

        WalkBuilder bld(host);
        bld.add_path(*run);
        bld.add_edge(host.edge_ids_between(z, v).front());
        bld.add_edge(uv_edge);
        bld.add_edge(host.edge_ids_between(u, y).front());
        bld.add_path(q);
        Circuit circ = bld.circuit();
        ensure(is_alternating_circuit(host, host_m, circ), "cut-vertex closure does not alternate");
        trace.push_back("contained/cut-vertex");
        return circ;
    }

    // several doors: fix the ear of every piece-minimal component
    std::vector<std::pair<int, Ear>> ears;
    for (int h : piece_min) {
        Ear e = ear_for_min_component(g, m, d, s0, dc, h);
        if (e.shape == Ear::Shape::proper) {
            Circuit circ = close_proper_ear(host, host_m, u, v, e);
            trace.push_back("contained/proper-ear");
            return circ;
        }
        ears.emplace_back(h, e);
    }

    // all ears are one-point circuits; a second door beside some anchor
    // manufactures a proper ear
    for (const auto& [h, e] : ears) {
        const VertexSet& up = dc.vupstar_component(h);
        VertexSet second = set_intersection(g.neighbor_set(up), s0);
        second.erase(e.anchor());
        if (second.empty()) continue;
        int z = *second.begin();
        VertexSet entries = set_intersection(g.neighbors(z), up);
        ensure(!entries.empty(), "door without an edge into the tower");
        int y = *entries.begin();
        AltPath q = balanced_to_ear_end(g, m, dc, h, y, e);
        WalkBuilder bld(g);
        bld.start(z);
        bld.add_edge(g.edge_ids_between(z, y).front());
        bld.add_path(q);
        AltPath pe = bld.path();
        Ear made{Ear::Shape::proper, pe.vertices, pe.edges};
        ensure(is_ear_relative_to(g, m, made, s0), "second-door ear fails its relation");
        Circuit circ = close_proper_ear(host, host_m, u, v, made);
        trace.push_back("contained/proper-ear/second-door");
        return circ;
    }

    // one door per tower, and the doors differ somewhere; join two adjacent
    // towers with distinct doors into one proper ear
    std::map<int, Ear> ear_of(ears.begin(), ears.end());
    const TAdjacency* pick = nullptr;
    std::vector<TAdjacency> adj = t_adjacency(c, dc);
    for (const TAdjacency& t : adj) {
        if (!dc.is_minimal(t.h1) || !dc.is_minimal(t.h2)) continue;
        if (ear_of.at(t.h1).anchor() == ear_of.at(t.h2).anchor()) continue;
        pick = &t;
        break;
    }
    ensure(pick != nullptr, "several doors yet every adjacent tower pair shares one");
    Arc rc = arc_from_adjacency(c, mc, dc, pick->h1, pick->s1, pick->h2, pick->s2);
    AltPath q1 = balanced_to_ear_end(g, m, dc, pick->h1, rc.path.first(), ear_of.at(pick->h1));
    AltPath q2 = balanced_to_ear_end(g, m, dc, pick->h2, rc.path.last(), ear_of.at(pick->h2));
    VertexSet pset = rc.path.vertex_set();
    ensure(set_intersection(q1.vertex_set(), pset) == VertexSet{rc.path.first()},
           "tail re-entered the joining arc");
    ensure(set_intersection(q2.vertex_set(), pset) == VertexSet{rc.path.last()},
           "tail re-entered the joining arc");
    ensure(!sets_intersect(q1.vertex_set(), q2.vertex_set()), "joining tails collide");
    WalkBuilder bld(g);
    bld.add_path(reverse_path(q1));
    bld.add_path(rc.path);
    bld.add_path(q2);
    AltPath pe = bld.path();
    Ear made{Ear::Shape::proper, pe.vertices, pe.edges};
    ensure(is_ear_relative_to(g, m, made, s0), "joined ear fails its relation");
    Circuit circ = close_proper_ear(host, host_m, u, v, made);
    trace.push_back("contained/proper-ear/joined-arms");
    return circ;
}

CutWitness fat_witness(const Graph& g, const VertexSet& shore) {
    require(is_brick(g), "graph is not a brick");
    std::optional<Matching> m = find_perfect_matching(g);
    ensure(m.has_value(), "brick without a perfect matching");
    return fat_witness(g, shore, *m);
}

CutWitness fat_witness(const Graph& g, const VertexSet& shore, const Matching& m) {
    require(is_brick(g), "graph is not a brick");
    for (int w : shore) require(g.has_vertex(w), "shore vertex outside the graph");
    int size = static_cast<int>(shore.size());
    require(size > 1 && size < g.vertex_count() - 1, "shore size out of range");
    require(is_perfect_matching(g, m), "matching is not perfect");

    CutWitness wit;
    wit.shore = shore;
    wit.input = m;

    std::vector<int> cut = g.cut_edges(shore);
    std::vector<int> crossing;
    for (int id : cut)
        if (m.contains(id)) crossing.push_back(id);

    if (crossing.size() >= 2) {
        wit.output = m;
        wit.trace = {"already-fat"};
        return wit;
    }

    if (crossing.empty()) {
        // a perfect matching dodges the cut only over an even shore, so any
        // matching through a crossing edge crosses at least twice
        ensure(size % 2 == 0, "odd shore avoided by a perfect matching");
        ensure(!cut.empty(), "proper shore with an empty cut");
        int e = cut.front();
        std::optional<Matching> m2 = find_perfect_matching_containing(g, e);
        ensure(m2.has_value(), "brick edge outside every perfect matching");
        Circuit circ = symmetric_difference_circuit(g, m, *m2, e);
        wit.circuit = circ;
        wit.output = switch_circuit(g, m, circ);
        wit.trace = {"zero-crossing"};
        ensure(crossing_count(g, wit.output, shore) >= 2, "even shore switch came back thin");
        return wit;
    }

    wit.trace.push_back("one-crossing");
    int uv_edge = crossing.front();
    const Edge& uve = g.edge(uv_edge);
    int u = set_contains(shore, uve.u) ? uve.u : uve.v;
    int v = uve.other(u);

    Graph sub = g.delete_vertices({u, v});
    ensure(sub.is_connected(), "brick minus an adjacent pair fell apart");
    Matching msub = restrict_matching(g, m, sub.vertices());
    ensure(is_perfect_matching(sub, msub), "single crossing left an imperfect remainder");
    CanonicalDecomposition d = CanonicalDecomposition::analyze(sub);

    VertexSet s = shore;
    s.erase(u);

    if (!is_separating(d, s)) {
        // some allowed edge of the remainder crosses the side; rebuilding
        // around it keeps uv matched, giving two crossings
        EdgeIdSet allowed = allowed_edges(sub);
        int e = -1;
        for (int id : sub.cut_edges(s))
            if (allowed.count(id)) {
                e = id;
                break;
            }
        ensure(e >= 0, "non-separating side without an allowed crossing edge");
        std::optional<Matching> m2 = find_perfect_matching_containing(sub, e);
        ensure(m2.has_value(), "allowed edge outside every perfect matching");
        Circuit circ = symmetric_difference_circuit(sub, msub, *m2, e);
        wit.circuit = circ;
        wit.output = switch_circuit(g, m, circ);
        wit.trace.push_back("not-separating");
        ensure(crossing_count(g, wit.output, shore) >= 2, "crossing switch came back thin");
        return wit;
    }

    VertexSet sbar = set_difference(sub.vertices(), s);
    std::vector<Border> border_list = borders(sub, d);
    ensure(!border_list.empty(), "decomposition with no border");
    bool border_near = false;
    for (const Border& b : border_list) {
        const VertexSet& hv = d.component(b.component).vertices;
        ensure(is_subset(hv, s) || is_subset(hv, sbar), "border crosses a separating side");
        if (is_subset(hv, s)) border_near = true;
    }
    if (!border_near) {
        std::swap(s, sbar);
        std::swap(u, v);
        wit.trace.push_back("swapped-sides");
    }

    bool mixed = false;
    for (int h : d.minimal_components())
        if (is_subset(d.component(h).vertices, sbar)) {
            mixed = true;
            break;
        }
    Circuit circ = mixed ? case_mixed(g, m, sub, s, u, v, msub, d, wit.trace)
                         : case_contained(g, m, sub, s, u, v, msub, d, wit.trace);
    ensure(circ.edge_set().count(uv_edge) != 0, "circuit skipped the matched crossing edge");
    wit.circuit = circ;
    wit.output = switch_circuit(g, m, circ);
    ensure(is_perfect_matching(g, wit.output), "switched matching is not perfect");
    ensure(crossing_count(g, wit.output, shore) >= 2, "construction failed to fatten the cut");
    return wit;
}

}  // namespace tightcut
