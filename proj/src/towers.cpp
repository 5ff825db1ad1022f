#include "tightcut/towers.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

bool incomparable(const CanonicalDecomposition& d, int h1, int h2) {
    return !d.leq(h1, h2) && !d.leq(h2, h1);
}

bool joint_condition(const Graph& g, const CanonicalDecomposition& d, int h1, int s1, int h2,
                     int s2) {
    if (sets_intersect(d.vup_class(h1, s1), d.vup_class(h2, s2))) return true;
    return !g.edges_between_sets(d.vupstar_class(h1, s1), d.vupstar_class(h2, s2)).empty();
}

// Exposed, ends in the port classes, interior outside both end components,
// and no vertex in vcoup of either port class.
void certify_arc(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                 const AltPath& p, int h1, int s1, int h2, int s2) {
    ensure(classify_path(g, m, p) == PathKind::exposed, "arc is not an exposed path");
    ensure(set_contains(d.classes(h1)[static_cast<size_t>(s1)], p.first()),
           "arc start left its port class");
    ensure(set_contains(d.classes(h2)[static_cast<size_t>(s2)], p.last()),
           "arc end left its port class");
    const VertexSet& va = d.component(h1).vertices;
    const VertexSet& vb = d.component(h2).vertices;
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i) {
        ensure(!set_contains(va, p.vertices[i]) && !set_contains(vb, p.vertices[i]),
               "arc interior entered an end component");
    }
    const VertexSet forbidden = set_union(d.vcoup_class(h1, s1), d.vcoup_class(h2, s2));
    ensure(!sets_intersect(p.vertex_set(), forbidden), "arc met vcoup of an end class");
}

}  // namespace

std::vector<int> TowerSequence::bases() const {
    std::vector<int> out;
    out.reserve(elements.size());
    for (const auto& el : elements) out.push_back(el.base);
    return out;
}

bool t_adjacent_via(const CanonicalDecomposition& d, int h1, int s1, int h2, int s2) {
    if (!incomparable(d, h1, h2)) return false;
    return joint_condition(d.graph(), d, h1, s1, h2, s2);
}

std::vector<TAdjacency> t_adjacency(const Graph& g, const CanonicalDecomposition& d) {
    std::vector<TAdjacency> out;
    const int n = d.component_count();
    for (int h1 = 0; h1 < n; ++h1) {
        for (int h2 = h1 + 1; h2 < n; ++h2) {
            if (!incomparable(d, h1, h2)) continue;
            const int c1 = static_cast<int>(d.classes(h1).size());
            const int c2 = static_cast<int>(d.classes(h2).size());
            for (int s1 = 0; s1 < c1; ++s1) {
                for (int s2 = 0; s2 < c2; ++s2) {
                    if (joint_condition(g, d, h1, s1, h2, s2)) out.push_back({h1, s1, h2, s2});
                }
            }
        }
    }
    return out;
}

std::vector<Border> borders(const Graph& g, const CanonicalDecomposition& d) {
    std::vector<Border> out;
    for (int h : d.minimal_components()) {
        const VertexSet outside = set_difference(g.vertices(), d.vupstar_component(h));
        std::vector<int> open;
        const int count = static_cast<int>(d.classes(h).size());
        for (int s = 0; s < count; ++s) {
            if (!g.edges_between_sets(d.vupstar_class(h, s), outside).empty()) open.push_back(s);
        }
        if (open.empty()) {
            out.push_back({h, std::nullopt});
        } else if (open.size() == 1) {
            out.push_back({h, open.front()});
        }
    }
    return out;
}

void validate_tower_sequence(const CanonicalDecomposition& d, const TowerSequence& seq) {
    require(!seq.elements.empty(), "tower sequence: no elements");
    for (const auto& el : seq.elements) {
        require(el.base >= 0 && el.base < d.component_count(), "tower sequence: unknown base");
        require(d.is_minimal(el.base), "tower sequence: base is not a minimal component");
        const int count = static_cast<int>(d.classes(el.base).size());
        for (int port : {el.entry, el.exit}) {
            require(port >= -1 && port < count, "tower sequence: port out of range");
        }
        require(el.entry == -1 || el.exit == -1 || el.entry != el.exit,
                "tower sequence: entry and exit ports must differ");
    }
    for (size_t i = 0; i + 1 < seq.elements.size(); ++i) {
        const auto& a = seq.elements[i];
        const auto& b = seq.elements[i + 1];
        require(a.exit != -1 && b.entry != -1, "tower sequence: missing port between elements");
        require(t_adjacent_via(d, a.base, a.exit, b.base, b.entry),
                "tower sequence: consecutive towers are not adjacent through the given ports");
    }
    std::set<int> distinct;
    for (const auto& el : seq.elements) distinct.insert(el.base);
    ensure(distinct.size() == seq.elements.size(), "locally valid tower sequence repeats a base");
}

Arc arc_from_adjacency(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                       int h1, int s1, int h2, int s2) {
    require(is_perfect_matching(g, m), "arc: matching must be perfect");
    require(t_adjacent_via(d, h1, s1, h2, s2), "arc: towers are not t-adjacent via these ports");

    // A bridging edge always exists: an overlap witness in vup(s1) and
    // vup(s2) descends toward s2 and must leave vupstar(s1) on the way.
    const VertexSet& a = d.vupstar_class(h1, s1);
    const VertexSet b = set_difference(d.vupstar_class(h2, s2), a);
    const std::vector<int> candidates = g.edges_between_sets(a, b);
    ensure(!candidates.empty(), "adjacent towers with no bridging edge");
    const Edge& bridge = g.edge(candidates.front());
    const int u = set_contains(a, bridge.u) ? bridge.u : bridge.v;
    const int v = bridge.other(u);
    ensure(set_contains(b, v), "bridge edge endpoint misclassified");
    ensure(!m.contains(bridge.id), "bridge edge is matched");

    const ClassEntryPath p1 = balanced_into_class(g, m, d, h1, s1, u);
    const ClassEntryPath p2 = balanced_into_class(g, m, d, h2, s2, v);
    ensure(!sets_intersect(p1.path.vertex_set(), p2.path.vertex_set()),
           "descent paths of a bridge share a vertex");

    WalkBuilder walk(g);
    walk.add_path(reverse_path(p1.path));
    walk.add_edge(bridge.id);
    walk.add_path(p2.path);
    AltPath path = walk.path();

    const VertexSet inner_bound = set_union(d.vup_class(h1, s1), d.vup_class(h2, s2));
    for (size_t i = 1; i + 1 < path.vertices.size(); ++i) {
        ensure(set_contains(inner_bound, path.vertices[i]), "arc interior left vup of its ports");
    }
    certify_arc(g, m, d, path, h1, s1, h2, s2);
    return Arc{std::move(path), h1, h2};
}

Arc arc_from_sequence(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                      const TowerSequence& seq) {
    validate_tower_sequence(d, seq);
    require(seq.size() >= 2, "arc: sequence needs at least two towers");
    require(is_perfect_matching(g, m), "arc: matching must be perfect");
    const auto& els = seq.elements;

    Arc arc = arc_from_adjacency(g, m, d, els[0].base, els[0].exit, els[1].base, els[1].entry);
    for (size_t i = 2; i < els.size(); ++i) {
        const auto& prev = els[i - 1];
        const Arc next =
            arc_from_adjacency(g, m, d, prev.base, prev.exit, els[i].base, els[i].entry);
        const AltPath connector =
            saturated_between_classes(g, m, d, prev.base, arc.path.last(), next.path.first());

        WalkBuilder tail_walk(g);
        tail_walk.add_path(connector);
        tail_walk.add_path(next.path);
        const AltPath tail = tail_walk.path();

        const VertexSet shared = set_intersection(arc.path.vertex_set(), tail.vertex_set());
        ensure(shared == VertexSet{arc.path.last()}, "arc extension reused a vertex");

        WalkBuilder joined(g);
        joined.add_path(arc.path);
        joined.add_path(tail);
        arc.path = joined.path();
        arc.comp_b = els[i].base;
    }

    for (size_t i = 1; i + 1 < els.size(); ++i) {
        ensure(sets_intersect(arc.path.vertex_set(), d.component(els[i].base).vertices),
               "arc skipped an intermediate base");
    }
    certify_arc(g, m, d, arc.path, els.front().base, els.front().exit, els.back().base,
                els.back().entry);
    return arc;
}

TowerSequence extend_to_spanning_sequence(const Graph& g, const Matching&,
                                          const CanonicalDecomposition& d, TowerSequence seq) {
    validate_tower_sequence(d, seq);
    const std::vector<TAdjacency> adjacencies = t_adjacency(g, d);
    std::set<int> border_set;
    for (const Border& b : borders(g, d)) border_set.insert(b.component);

    // Candidate extensions from base, as (other base, own port, other port),
    // excluding the port already used on that side of the element.
    auto extensions = [&](int base, int banned_port) {
        std::vector<std::tuple<int, int, int>> out;
        for (const TAdjacency& t : adjacencies) {
            if (t.h1 == base && d.is_minimal(t.h2) && t.s1 != banned_port) {
                out.emplace_back(t.h2, t.s1, t.s2);
            }
            if (t.h2 == base && d.is_minimal(t.h1) && t.s2 != banned_port) {
                out.emplace_back(t.h1, t.s2, t.s1);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto used = [&](int base) {
        for (const auto& el : seq.elements) {
            if (el.base == base) return true;
        }
        return false;
    };
    auto append = [&](const std::tuple<int, int, int>& ext) {
        auto [other, own, theirs] = ext;
        ensure(!used(other), "spanning extension repeats a base");
        seq.elements.back().exit = own;
        seq.elements.push_back({other, theirs, -1});
    };
    auto prepend = [&](const std::tuple<int, int, int>& ext) {
        auto [other, own, theirs] = ext;
        ensure(!used(other), "spanning extension repeats a base");
        seq.elements.front().entry = own;
        seq.elements.insert(seq.elements.begin(), {other, -1, theirs});
    };

    // A single element extends once through any adjacency, border or not, so
    // callers can build an arc whenever the graph has more than one tower.
    if (seq.size() == 1) {
        const auto cand = extensions(seq.elements[0].base, seq.elements[0].entry);
        if (cand.empty()) {
            ensure(border_set.count(seq.elements[0].base) > 0,
                   "non-border tower with no adjacency");
            return seq;
        }
        append(cand.front());
    }

    int guard = d.component_count() + 1;
    while (true) {
        ensure(guard-- > 0, "spanning extension failed to terminate");
        const bool back_ok = border_set.count(seq.elements.back().base) > 0;
        const bool front_ok = border_set.count(seq.elements.front().base) > 0;
        if (back_ok && front_ok) break;
        if (!back_ok) {
            const auto cand = extensions(seq.elements.back().base, seq.elements.back().entry);
            ensure(!cand.empty(), "non-border end of a sequence has no extension");
            append(cand.front());
        } else {
            const auto cand = extensions(seq.elements.front().base, seq.elements.front().exit);
            ensure(!cand.empty(), "non-border end of a sequence has no extension");
            prepend(cand.front());
        }
    }
    validate_tower_sequence(d, seq);
    return seq;
}

Arc spanning_arc_through(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                         int h) {
    require(h >= 0 && h < d.component_count(), "spanning arc: unknown component");
    require(d.is_minimal(h), "spanning arc: component is not minimal");
    TowerSequence seed;
    seed.elements.push_back({h, -1, -1});
    const TowerSequence seq = extend_to_spanning_sequence(g, m, d, std::move(seed));
    require(seq.size() >= 2, "spanning arc: the graph is a single tower with no adjacency");
    Arc arc = arc_from_sequence(g, m, d, seq);
    ensure(sets_intersect(arc.path.vertex_set(), d.component(h).vertices),
           "spanning arc missed the requested component");
    return arc;
}

std::optional<TowerSequence> find_tower_sequence(const Graph& g, const CanonicalDecomposition& d,
                                                 const std::vector<int>& from_bases,
                                                 const std::vector<int>& to_bases) {
    for (const std::vector<int>* side : {&from_bases, &to_bases}) {
        for (int h : *side) {
            require(h >= 0 && h < d.component_count(), "sequence search: unknown component");
            require(d.is_minimal(h), "sequence search: base is not a minimal component");
        }
    }
    if (from_bases.empty() || to_bases.empty()) return std::nullopt;

    const std::vector<TAdjacency> adjacencies = t_adjacency(g, d);
    auto moves = [&](int base) {
        std::vector<std::tuple<int, int, int>> out;  // (other, own port, other port)
        for (const TAdjacency& t : adjacencies) {
            if (t.h1 == base && d.is_minimal(t.h2)) out.emplace_back(t.h2, t.s1, t.s2);
            if (t.h2 == base && d.is_minimal(t.h1)) out.emplace_back(t.h1, t.s2, t.s1);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    struct State {
        int base;
        int entry;
        int parent;
        int parent_exit;
    };
    const std::set<int> targets(to_bases.begin(), to_bases.end());
    std::vector<State> states;
    std::set<std::pair<int, int>> seen;
    std::deque<int> queue;

    auto reconstruct = [&](int index) {
        std::vector<int> chain;
        for (int at = index; at >= 0; at = states[static_cast<size_t>(at)].parent) {
            chain.push_back(at);
        }
        std::reverse(chain.begin(), chain.end());
        TowerSequence out;
        for (size_t i = 0; i < chain.size(); ++i) {
            const State& st = states[static_cast<size_t>(chain[i])];
            out.elements.push_back({st.base, st.entry, -1});
            if (i > 0) out.elements[i - 1].exit = st.parent_exit;
        }
        validate_tower_sequence(d, out);
        return out;
    };

    for (int b : from_bases) {
        if (seen.count({b, -1})) continue;
        seen.insert({b, -1});
        states.push_back({b, -1, -1, -1});
        const int index = static_cast<int>(states.size()) - 1;
        if (targets.count(b)) return reconstruct(index);
        queue.push_back(index);
    }
    while (!queue.empty()) {
        const int index = queue.front();
        queue.pop_front();
        const State current = states[static_cast<size_t>(index)];
        for (const auto& [other, own, theirs] : moves(current.base)) {
            if (own == current.entry) continue;
            if (seen.count({other, theirs})) continue;
            seen.insert({other, theirs});
            states.push_back({other, theirs, index, own});
            const int next = static_cast<int>(states.size()) - 1;
            if (targets.count(other)) return reconstruct(next);
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace tightcut
