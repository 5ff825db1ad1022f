#pragma once

#include <map>
#include <vector>

#include "tightcut/altpath.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"

namespace tightcut {

// Induced subgraph on one connected component of the allowed-edge subgraph.
// The induced graph may contain non-allowed edges.
struct FactorComponent {
    int id;
    VertexSet vertices;
    Graph induced;
};

std::vector<FactorComponent> factor_components(const Graph& g);

// Full structural analysis of a factorizable graph: factor-components, the
// order between them, the similarity classes of each component, the tagging
// of upper components by classes, and the derived per-class vertex sets.
// Construction verifies the claimed axioms (partial order, equivalence,
// unique tags, partition) and throws internal_error on violation.
class CanonicalDecomposition {
public:
    struct UpperTag {
        VertexSet part;   // connected component of g[vup(h)]
        int class_index;  // the class of h its neighborhood selects
    };

    static CanonicalDecomposition analyze(const Graph& g);

    const Graph& graph() const { return g_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<FactorComponent>& components() const { return components_; }
    const FactorComponent& component(int h) const;
    int component_of(int v) const;

    // h1 is below or equal to h2: some separating superset of both vertex
    // sets contracts h1 to a factor-critical graph.
    bool leq(int h1, int h2) const;
    bool strictly_below(int h1, int h2) const;
    bool is_minimal(int h) const;
    std::vector<int> minimal_components() const;
    std::vector<int> lower_set(int h) const;  // ids i with leq(i, h), ascending
    std::vector<int> immediate_lower_bounds(int h) const;

    // Similarity classes of component h, ordered by least vertex id. Two
    // vertices are similar when they share a component and deleting both
    // leaves a non-factorizable graph.
    const std::vector<VertexSet>& classes(int h) const;
    int class_index_of(int v) const;        // index within its component
    const VertexSet& class_part_of(int v) const;

    const std::vector<UpperTag>& upper_tags(int h) const;

    // Union of vertex sets of components strictly above h / including h.
    const VertexSet& vup_component(int h) const;
    const VertexSet& vupstar_component(int h) const;

    // Per class s of h: vupstar = s plus its tagged parts; vup = vupstar
    // minus s; vcoup = vupstar(h) minus vupstar(s).
    const VertexSet& vupstar_class(int h, int s) const;
    const VertexSet& vup_class(int h, int s) const;
    const VertexSet& vcoup_class(int h, int s) const;

private:
    CanonicalDecomposition() = default;

    void check_component(int h) const;
    void check_class(int h, int s) const;

    Graph g_;
    std::vector<FactorComponent> components_;
    std::map<int, int> component_of_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<VertexSet>> classes_;
    std::map<int, int> class_index_of_;
    std::vector<std::vector<UpperTag>> tags_;
    std::vector<VertexSet> vup_comp_, vupstar_comp_;
    std::vector<std::vector<VertexSet>> vupstar_class_, vup_class_, vcoup_class_;
};

// True when x is a union of factor-component vertex sets.
bool is_separating(const CanonicalDecomposition& d, const VertexSet& x);

// Balanced path from x (anywhere in vupstar of class s of h) down to some
// vertex of s, every vertex before the terminal inside vup(s). The terminal
// is the least class vertex reachable this way.
struct ClassEntryPath {
    AltPath path;
    int terminal;
};
ClassEntryPath balanced_into_class(const Graph& g, const Matching& m,
                                   const CanonicalDecomposition& d, int h, int s, int x);

// Saturated path between x and y lying in distinct classes S, T of h,
// confined to vupstar(h) minus vup(S) minus vup(T).
AltPath saturated_between_classes(const Graph& g, const Matching& m,
                                  const CanonicalDecomposition& d, int h, int x, int y);

// Saturated path from x in class S of h to y in vcoup(S), confined to
// vupstar(h) minus vup(S).
AltPath saturated_to_coup(const Graph& g, const Matching& m, const CanonicalDecomposition& d,
                          int h, int x, int y);

// Saturated path between x in vupstar(S) and y in vupstar(T), S != T,
// confined to vupstar(h). Built from three certified segments, so it meets
// both classes on the way.
AltPath saturated_within_upstar(const Graph& g, const Matching& m,
                                const CanonicalDecomposition& d, int h, int x, int y);

}  // namespace tightcut
