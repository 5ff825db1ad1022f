#include "tightcut/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::optional<int> to_int(const std::string& token) {
    std::string t = trim(token);
    if (t.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    int lineno = 0;
    auto next_content = [&](std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            out = t;
            return true;
        }
        return false;
    };

    std::string head;
    if (!next_content(head)) throw parse_error(lineno, "missing header 'n m'");
    std::istringstream hs(head);
    long long n = 0, edge_count = 0;
    std::string extra;
    if (!(hs >> n >> edge_count) || (hs >> extra))
        throw parse_error(lineno, "header must be 'n m'");
    if (n < 0 || edge_count < 0) throw parse_error(lineno, "negative count in header");

    std::vector<std::pair<int, int>> pairs;
    for (long long i = 0; i < edge_count; ++i) {
        std::string line;
        if (!next_content(line))
            throw parse_error(lineno, "expected " + std::to_string(edge_count) +
                                          " edges, found " + std::to_string(i));
        std::istringstream es(line);
        long long a = 0, b = 0;
        if (!(es >> a >> b) || (es >> extra)) throw parse_error(lineno, "edge line must be 'u v'");
        if (a < 1 || a > n || b < 1 || b > n) throw parse_error(lineno, "vertex out of range");
        if (a == b) throw parse_error(lineno, "self-loop");
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    std::string tail;
    if (next_content(tail)) throw parse_error(lineno, "content after the last edge");
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error(0, "cannot open " + path);
    return read_graph(f);
}

VertexSet parse_shore(const Graph& g, const std::string& text) {
    VertexSet out;
    for (const std::string& token : split(text, ',')) {
        std::optional<int> v = to_int(token);
        if (!v) throw parse_error(0, "shore: bad vertex '" + trim(token) + "'");
        require(g.has_vertex(*v), "shore: no vertex " + std::to_string(*v));
        require(out.insert(*v).second, "shore: repeated vertex " + std::to_string(*v));
    }
    return out;
}

Matching parse_matching(const Graph& g, const std::string& text) {
    Matching m;
    VertexSet used;
    for (const std::string& token : split(text, ',')) {
        std::vector<std::string> ends = split(token, '-');
        std::optional<int> a, b;
        if (ends.size() == 2) {
            a = to_int(ends[0]);
            b = to_int(ends[1]);
        }
        if (!a || !b) throw parse_error(0, "matching: bad pair '" + trim(token) + "'");
        require(g.has_vertex(*a) && g.has_vertex(*b),
                "matching: no vertex in '" + trim(token) + "'");
        std::vector<int> ids = g.edge_ids_between(*a, *b);
        require(!ids.empty(), "matching: no edge " + trim(token));
        require(used.insert(*a).second && used.insert(*b).second,
                "matching: edges share vertex in '" + trim(token) + "'");
        m.edges.insert(ids.front());
    }
    return m;
}

DecompositionReport build_report(const CanonicalDecomposition& d) {
    DecompositionReport r;
    int n = d.component_count();
    for (int h = 0; h < n; ++h) {
        const VertexSet& hv = d.component(h).vertices;
        r.components.push_back({h, std::vector<int>(hv.begin(), hv.end())});
        std::vector<std::vector<int>> cls;
        for (const VertexSet& c : d.classes(h)) cls.emplace_back(c.begin(), c.end());
        r.classes.push_back(std::move(cls));
        for (const CanonicalDecomposition::UpperTag& t : d.upper_tags(h))
            r.tags.push_back({h, std::vector<int>(t.part.begin(), t.part.end()), t.class_index});
        const VertexSet& tv = d.vupstar_component(h);
        r.towers.push_back({h, std::vector<int>(tv.begin(), tv.end())});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d.strictly_below(a, b)) r.order.push_back({a, b});
    for (const Border& b : borders(d.graph(), d)) r.borders.push_back({b.component, b.port});
    return r;
}

std::string report_to_json(const DecompositionReport& r) {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& c : r.components)
        j["components"].push_back({{"id", c.id}, {"vertices", c.vertices}});
    j["order"] = nlohmann::json::array();
    for (const auto& p : r.order) j["order"].push_back({{"below", p.below}, {"above", p.above}});
    j["classes"] = r.classes;
    j["tags"] = nlohmann::json::array();
    for (const auto& t : r.tags)
        j["tags"].push_back({{"component", t.component}, {"part", t.part}, {"class", t.class_index}});
    j["borders"] = nlohmann::json::array();
    for (const auto& b : r.borders) {
        nlohmann::json e = {{"component", b.component}};
        if (b.port)
            e["port"] = *b.port;
        else
            e["port"] = nullptr;
        j["borders"].push_back(std::move(e));
    }
    j["towers"] = nlohmann::json::array();
    for (const auto& t : r.towers)
        j["towers"].push_back({{"component", t.component}, {"vertices", t.vertices}});
    return j.dump(2) + "\n";
}

DecompositionReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("report: ") + e.what());
    }
    try {
        DecompositionReport r;
        for (const auto& c : j.at("components"))
            r.components.push_back(
                {c.at("id").get<int>(), c.at("vertices").get<std::vector<int>>()});
        for (const auto& p : j.at("order"))
            r.order.push_back({p.at("below").get<int>(), p.at("above").get<int>()});
        r.classes = j.at("classes").get<std::vector<std::vector<std::vector<int>>>>();
        for (const auto& t : j.at("tags"))
            r.tags.push_back({t.at("component").get<int>(), t.at("part").get<std::vector<int>>(),
                              t.at("class").get<int>()});
        for (const auto& b : j.at("borders")) {
            std::optional<int> port;
            if (!b.at("port").is_null()) port = b.at("port").get<int>();
            r.borders.push_back({b.at("component").get<int>(), port});
        }
        for (const auto& t : j.at("towers"))
            r.towers.push_back(
                {t.at("component").get<int>(), t.at("vertices").get<std::vector<int>>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("report: ") + e.what());
    }
}

std::string report_to_dot(const DecompositionReport& r) {
    std::ostringstream out;
    out << "digraph decomposition {\n";
    out << "  compound=true;\n  rankdir=BT;\n  node [shape=circle];\n";
    std::map<int, int> representative;
    for (const auto& c : r.components) {
        out << "  subgraph cluster_" << c.id << " {\n";
        out << "    label=\"C" << c.id << "\";\n   ";
        for (int v : c.vertices) out << " " << v << ";";
        out << "\n  }\n";
        if (!c.vertices.empty()) representative[c.id] = c.vertices.front();
    }
    for (const auto& p : r.order) {
        auto a = representative.find(p.below);
        auto b = representative.find(p.above);
        if (a == representative.end() || b == representative.end()) continue;
        out << "  " << a->second << " -> " << b->second << " [ltail=cluster_" << p.below
            << ", lhead=cluster_" << p.above << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string witness_to_json(const Graph& g, const CutWitness& w) {
    nlohmann::json j;
    j["shore"] = std::vector<int>(w.shore.begin(), w.shore.end());
    auto matching_json = [&](const Matching& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (int id : m.edges) {
            const Edge& e = g.edge(id);
            arr.push_back({{"id", id}, {"u", e.u}, {"v", e.v}});
        }
        return arr;
    };
    j["input"] = matching_json(w.input);
    j["output"] = matching_json(w.output);
    int crossings = 0;
    for (int id : g.cut_edges(w.shore))
        if (w.output.contains(id)) ++crossings;
    j["crossings"] = crossings;
    j["trace"] = w.trace;
    if (w.circuit)
        j["circuit"] = {{"vertices", w.circuit->vertices}, {"edges", w.circuit->edges}};
    else
        j["circuit"] = nullptr;
    return j.dump(2) + "\n";
}

}  // namespace tightcut
