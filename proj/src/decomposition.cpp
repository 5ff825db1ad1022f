#include "tightcut/decomposition.hpp"

#include <algorithm>

#include "tightcut/errors.hpp"

namespace tightcut {

std::vector<FactorComponent> factor_components(const Graph& g) {
    require(is_factorizable(g), "factor_components: graph is not factorizable");
    EdgeIdSet allowed = allowed_edges(g);
    std::vector<Edge> skeleton;
    for (int id : allowed) skeleton.push_back(g.edge(id));
    Graph allowed_graph(g.vertices(), skeleton);
    std::vector<FactorComponent> out;
    for (const VertexSet& part : allowed_graph.connected_components()) {
        FactorComponent c;
        c.id = static_cast<int>(out.size());
        c.vertices = part;
        c.induced = g.induced_subgraph(part);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

bool leq_components(const Graph& g, const std::vector<FactorComponent>& comps, int h1, int h2) {
    if (h1 == h2) return true;
    VertexSet base = set_union(comps[h1].vertices, comps[h2].vertices);
    std::vector<int> others;
    for (const FactorComponent& c : comps)
        if (c.id != h1 && c.id != h2) others.push_back(c.id);
    int k = static_cast<int>(others.size());
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        VertexSet x = base;
        for (int i = 0; i < k; ++i)
            if (mask & (1ul << i)) {
                const VertexSet& vs = comps[others[i]].vertices;
                x.insert(vs.begin(), vs.end());
            }
        if (is_factor_critical(g.induced_subgraph(x).contract(comps[h1].vertices))) return true;
    }
    return false;
}

}  // namespace

CanonicalDecomposition CanonicalDecomposition::analyze(const Graph& g) {
    CanonicalDecomposition d;
    d.g_ = g;
    d.components_ = factor_components(g);
    int nc = static_cast<int>(d.components_.size());
    for (const FactorComponent& c : d.components_)
        for (int v : c.vertices) d.component_of_[v] = c.id;

    d.leq_.assign(nc, std::vector<bool>(nc, false));
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) d.leq_[i][j] = leq_components(g, d.components_, i, j);
    for (int i = 0; i < nc; ++i) ensure(d.leq_[i][i], "decomposition: order not reflexive");
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            ensure(i == j || !(d.leq_[i][j] && d.leq_[j][i]),
                   "decomposition: order not antisymmetric");
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            for (int k = 0; k < nc; ++k)
                ensure(!(d.leq_[i][j] && d.leq_[j][k]) || d.leq_[i][k],
                       "decomposition: order not transitive");

    // similarity: same component and deleting the pair kills all perfect matchings
    std::vector<int> vs(g.vertices().begin(), g.vertices().end());
    int n = static_cast<int>(vs.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[vs[i]] = i;
    std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        sim[i][i] = true;
        for (int j = i + 1; j < n; ++j) {
            if (d.component_of_[vs[i]] != d.component_of_[vs[j]]) continue;
            bool s = !is_factorizable(g.delete_vertices({vs[i], vs[j]}));
            sim[i][j] = sim[j][i] = s;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                ensure(!(sim[i][j] && sim[j][k]) || sim[i][k],
                       "decomposition: similarity not transitive");

    d.classes_.assign(nc, {});
    std::vector<bool> grouped(n, false);
    for (int i = 0; i < n; ++i) {
        if (grouped[i]) continue;
        VertexSet cls;
        for (int j = i; j < n; ++j)
            if (sim[i][j]) {
                cls.insert(vs[j]);
                grouped[j] = true;
            }
        int h = d.component_of_[vs[i]];
        int idx = static_cast<int>(d.classes_[h].size());
        d.classes_[h].push_back(cls);
        for (int v : cls) d.class_index_of_[v] = idx;
    }

    // strict upper vertex sets and the tagging of their components
    d.vup_comp_.assign(nc, {});
    d.vupstar_comp_.assign(nc, {});
    d.tags_.assign(nc, {});
    d.vupstar_class_.assign(nc, {});
    d.vup_class_.assign(nc, {});
    d.vcoup_class_.assign(nc, {});
    for (int h = 0; h < nc; ++h) {
        VertexSet up;
        for (int i = 0; i < nc; ++i)
            if (i != h && d.leq_[h][i])
                up.insert(d.components_[i].vertices.begin(), d.components_[i].vertices.end());
        d.vup_comp_[h] = up;
        d.vupstar_comp_[h] = set_union(up, d.components_[h].vertices);

        int ncls = static_cast<int>(d.classes_[h].size());
        d.vupstar_class_[h].assign(ncls, {});
        if (!up.empty()) {
            for (const VertexSet& part : g.induced_subgraph(up).connected_components()) {
                VertexSet touched = set_intersection(g.neighbor_set(part),
                                                     d.components_[h].vertices);
                ensure(!touched.empty(), "decomposition: upper part sees no component vertex");
                int tag = -1;
                for (int s = 0; s < ncls; ++s)
                    if (is_subset(touched, d.classes_[h][s])) {
                        tag = s;
                        break;
                    }
                ensure(tag >= 0, "decomposition: upper part neighborhood spans classes");
                d.tags_[h].push_back(UpperTag{part, tag});
                d.vupstar_class_[h][tag].insert(part.begin(), part.end());
            }
        }
        VertexSet seen;
        for (int s = 0; s < ncls; ++s) {
            ensure(!sets_intersect(seen, d.vupstar_class_[h][s]),
                   "decomposition: class up-sets overlap");
            seen = set_union(seen, d.vupstar_class_[h][s]);
            d.vup_class_[h].push_back(d.vupstar_class_[h][s]);
            d.vupstar_class_[h][s] =
                set_union(d.vupstar_class_[h][s], d.classes_[h][s]);
        }
        ensure(set_union(seen, d.components_[h].vertices) == d.vupstar_comp_[h],
               "decomposition: class up-sets fail to cover the upper vertices");
        for (int s = 0; s < ncls; ++s)
            d.vcoup_class_[h].push_back(
                set_difference(d.vupstar_comp_[h], d.vupstar_class_[h][s]));
    }
    return d;
}

void CanonicalDecomposition::check_component(int h) const {
    require(h >= 0 && h < component_count(), "decomposition: invalid component id");
}

void CanonicalDecomposition::check_class(int h, int s) const {
    check_component(h);
    require(s >= 0 && s < static_cast<int>(classes_[h].size()),
            "decomposition: invalid class index");
}

const FactorComponent& CanonicalDecomposition::component(int h) const {
    check_component(h);
    return components_[h];
}

int CanonicalDecomposition::component_of(int v) const {
    auto it = component_of_.find(v);
    require(it != component_of_.end(), "decomposition: vertex outside the graph");
    return it->second;
}

bool CanonicalDecomposition::leq(int h1, int h2) const {
    check_component(h1);
    check_component(h2);
    return leq_[h1][h2];
}

bool CanonicalDecomposition::strictly_below(int h1, int h2) const {
    return h1 != h2 && leq(h1, h2);
}

bool CanonicalDecomposition::is_minimal(int h) const {
    check_component(h);
    for (int i = 0; i < component_count(); ++i)
        if (strictly_below(i, h)) return false;
    return true;
}

std::vector<int> CanonicalDecomposition::minimal_components() const {
    std::vector<int> out;
    for (int h = 0; h < component_count(); ++h)
        if (is_minimal(h)) out.push_back(h);
    return out;
}

std::vector<int> CanonicalDecomposition::lower_set(int h) const {
    check_component(h);
    std::vector<int> out;
    for (int i = 0; i < component_count(); ++i)
        if (leq_[i][h]) out.push_back(i);
    return out;
}

std::vector<int> CanonicalDecomposition::immediate_lower_bounds(int h) const {
    check_component(h);
    std::vector<int> out;
    for (int i = 0; i < component_count(); ++i) {
        if (!strictly_below(i, h)) continue;
        bool covered = true;
        for (int j = 0; j < component_count(); ++j)
            if (strictly_below(i, j) && strictly_below(j, h)) {
                covered = false;
                break;
            }
        if (covered) out.push_back(i);
    }
    return out;
}

const std::vector<VertexSet>& CanonicalDecomposition::classes(int h) const {
    check_component(h);
    return classes_[h];
}

int CanonicalDecomposition::class_index_of(int v) const {
    auto it = class_index_of_.find(v);
    require(it != class_index_of_.end(), "decomposition: vertex outside the graph");
    return it->second;
}

const VertexSet& CanonicalDecomposition::class_part_of(int v) const {
    return classes_[component_of(v)][class_index_of(v)];
}

const std::vector<CanonicalDecomposition::UpperTag>& CanonicalDecomposition::upper_tags(
    int h) const {
    check_component(h);
    return tags_[h];
}

const VertexSet& CanonicalDecomposition::vup_component(int h) const {
    check_component(h);
    return vup_comp_[h];
}

const VertexSet& CanonicalDecomposition::vupstar_component(int h) const {
    check_component(h);
    return vupstar_comp_[h];
}

const VertexSet& CanonicalDecomposition::vupstar_class(int h, int s) const {
    check_class(h, s);
    return vupstar_class_[h][s];
}

const VertexSet& CanonicalDecomposition::vup_class(int h, int s) const {
    check_class(h, s);
    return vup_class_[h][s];
}

const VertexSet& CanonicalDecomposition::vcoup_class(int h, int s) const {
    check_class(h, s);
    return vcoup_class_[h][s];
}

bool is_separating(const CanonicalDecomposition& d, const VertexSet& x) {
    for (const FactorComponent& c : d.components()) {
        bool inside = is_subset(c.vertices, x);
        bool outside = !sets_intersect(c.vertices, x);
        if (!inside && !outside) return false;
    }
    return true;
}

ClassEntryPath balanced_into_class(const Graph& g, const Matching& m,
                                   const CanonicalDecomposition& d, int h, int s, int x) {
    require(is_perfect_matching(g, m), "balanced_into_class: matching is not perfect");
    const VertexSet& cls = d.classes(h).at(s);
    require(d.vupstar_class(h, s).count(x), "balanced_into_class: x outside vupstar of class");
    if (cls.count(x)) return ClassEntryPath{AltPath::single_vertex(x), x};
    for (int y : cls) {
        VertexSet confined = d.vup_class(h, s);
        confined.insert(y);
        if (auto p = balanced_path(g, m, x, y, confined)) return ClassEntryPath{*p, y};
    }
    throw internal_error("balanced_into_class: no class vertex is reachable");
}

namespace {

AltPath saturated_in_confined(const Graph& g, const Matching& m, int x, int y,
                              const VertexSet& confined, const char* who) {
    Graph sub = g.induced_subgraph(confined);
    Matching mr = restrict_matching(g, m, confined);
    auto p = saturated_path(sub, mr, x, y);
    ensure(p.has_value(), std::string(who) + ": required path does not exist");
    ensure(classify_path(g, m, *p) == PathKind::saturated,
           std::string(who) + ": path kind changes outside the confinement");
    return *p;
}

}  // namespace

AltPath saturated_between_classes(const Graph& g, const Matching& m,
                                  const CanonicalDecomposition& d, int h, int x, int y) {
    require(is_perfect_matching(g, m), "saturated_between_classes: matching is not perfect");
    require(d.component_of(x) == h && d.component_of(y) == h,
            "saturated_between_classes: endpoints must lie in the component");
    int s = d.class_index_of(x);
    int t = d.class_index_of(y);
    require(s != t, "saturated_between_classes: endpoints share a class");
    VertexSet confined = set_difference(
        set_difference(d.vupstar_component(h), d.vup_class(h, s)), d.vup_class(h, t));
    return saturated_in_confined(g, m, x, y, confined, "saturated_between_classes");
}

AltPath saturated_to_coup(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                          int h, int x, int y) {
    require(is_perfect_matching(g, m), "saturated_to_coup: matching is not perfect");
    require(d.component_of(x) == h, "saturated_to_coup: x must lie in the component");
    int s = d.class_index_of(x);
    require(d.vcoup_class(h, s).count(y), "saturated_to_coup: y outside vcoup of x's class");
    VertexSet confined = set_difference(d.vupstar_component(h), d.vup_class(h, s));
    return saturated_in_confined(g, m, x, y, confined, "saturated_to_coup");
}

AltPath saturated_within_upstar(const Graph& g, const Matching& m,
                                const CanonicalDecomposition& d, int h, int x, int y) {
    require(is_perfect_matching(g, m), "saturated_within_upstar: matching is not perfect");
    int ncls = static_cast<int>(d.classes(h).size());
    int s = -1, t = -1;
    for (int i = 0; i < ncls; ++i) {
        if (d.vupstar_class(h, i).count(x)) s = i;
        if (d.vupstar_class(h, i).count(y)) t = i;
    }
    require(s >= 0 && t >= 0, "saturated_within_upstar: endpoint outside vupstar of h");
    require(s != t, "saturated_within_upstar: endpoints over the same class");

    ClassEntryPath down_x = balanced_into_class(g, m, d, h, s, x);
    ClassEntryPath down_y = balanced_into_class(g, m, d, h, t, y);
    AltPath middle = saturated_between_classes(g, m, d, h, down_x.terminal, down_y.terminal);

    WalkBuilder walk(g);
    walk.add_path(down_x.path);
    walk.add_path(middle);
    walk.add_path(reverse_path(down_y.path));
    AltPath p = walk.path();
    ensure(classify_path(g, m, p) == PathKind::saturated,
           "saturated_within_upstar: assembled path is not saturated");
    ensure(is_subset(p.vertex_set(), d.vupstar_component(h)),
           "saturated_within_upstar: path escapes vupstar");
    return p;
}

}  // namespace tightcut
