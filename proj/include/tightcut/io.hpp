#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcut/decomposition.hpp"
#include "tightcut/engine.hpp"
#include "tightcut/graph.hpp"
#include "tightcut/matching.hpp"
#include "tightcut/towers.hpp"

namespace tightcut {

// Text graph format: first content line "n m", then m lines "u v" with
// 1-based vertex ids. Blank lines and lines whose first non-blank character
// is '#' are skipped; a repeated pair adds a parallel edge. Violations raise
// parse_error carrying the offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// "1,2,3" -> vertex set. Malformed tokens raise parse_error; unknown or
// repeated vertices raise std::invalid_argument.
VertexSet parse_shore(const Graph& g, const std::string& text);

// "1-2,3-6,4-5" -> matching, each pair resolved to the least edge id
// joining its endpoints. Must form a matching of g.
Matching parse_matching(const Graph& g, const std::string& text);

// Decomposition flattened for serialization. Vertex lists ascending;
// classes[i] belongs to components[i]; order holds the strict pairs.
struct DecompositionReport {
    struct Component {
        int id;
        std::vector<int> vertices;

        friend bool operator==(const Component&, const Component&) = default;
    };
    struct OrderPair {
        int below;
        int above;

        friend bool operator==(const OrderPair&, const OrderPair&) = default;
    };
    struct Tag {
        int component;
        std::vector<int> part;
        int class_index;

        friend bool operator==(const Tag&, const Tag&) = default;
    };
    struct BorderEntry {
        int component;
        std::optional<int> port;

        friend bool operator==(const BorderEntry&, const BorderEntry&) = default;
    };
    struct Tower {
        int component;
        std::vector<int> vertices;

        friend bool operator==(const Tower&, const Tower&) = default;
    };

    std::vector<Component> components;
    std::vector<OrderPair> order;
    std::vector<std::vector<std::vector<int>>> classes;
    std::vector<Tag> tags;
    std::vector<BorderEntry> borders;
    std::vector<Tower> towers;

    friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

DecompositionReport build_report(const CanonicalDecomposition& d);

// JSON with stable field names; report_from_json inverts report_to_json.
std::string report_to_json(const DecompositionReport& r);
DecompositionReport report_from_json(const std::string& text);

// Components as clusters, the order as directed inter-cluster edges.
std::string report_to_dot(const DecompositionReport& r);

std::string witness_to_json(const Graph& g, const CutWitness& w);

}  // namespace tightcut
