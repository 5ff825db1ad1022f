#include "tightcut/oracle.hpp"

#include <random>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

void enumerate_rec(const Graph& g, VertexSet& uncovered, Matching& partial,
                   std::vector<Matching>& out) {
    if (uncovered.empty()) {
        out.push_back(partial);
        return;
    }
    int v = *uncovered.begin();
    uncovered.erase(v);
    for (auto [w, eid] : g.incident(v)) {
        if (!uncovered.count(w)) continue;
        uncovered.erase(w);
        partial.edges.insert(eid);
        enumerate_rec(g, uncovered, partial, out);
        partial.edges.erase(eid);
        uncovered.insert(w);
    }
    uncovered.insert(v);
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, int bound) {
    require(g.vertex_count() <= bound, "enumerate_perfect_matchings: graph exceeds size bound");
    if (g.vertex_count() % 2 != 0) return {};
    std::vector<Matching> out;
    VertexSet uncovered = g.vertices();
    Matching partial;
    enumerate_rec(g, uncovered, partial, out);
    return out;
}

bool has_perfect_matching_bruteforce(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    if (g.vertex_count() % 2 != 0) return false;
    int v = *g.vertices().begin();
    int last = -1;
    for (auto [w, eid] : g.incident(v)) {
        if (w == last) continue;  // parallel edges add nothing to existence
        last = w;
        if (has_perfect_matching_bruteforce(g.delete_vertices({v, w}))) return true;
    }
    return false;
}

std::vector<VertexSet> tight_cuts_bruteforce(const Graph& g, int bound) {
    require(g.vertex_count() <= bound, "tight_cuts_bruteforce: graph exceeds size bound");
    std::vector<Matching> pms = enumerate_perfect_matchings(g, bound);
    require(!pms.empty(), "tight_cuts_bruteforce: graph is not factorizable");

    std::vector<int> vs(g.vertices().begin(), g.vertices().end());
    int n = static_cast<int>(vs.size());
    std::vector<VertexSet> out;
    if (n < 2) return out;
    // canonical shore always contains the least vertex; bitmask picks the rest
    for (unsigned long mask = 0; mask + 1 < (1ul << (n - 1)); ++mask) {
        VertexSet shore{vs[0]};
        for (int i = 1; i < n; ++i)
            if (mask & (1ul << (i - 1))) shore.insert(vs[i]);
        bool tight = true;
        for (const Matching& m : pms) {
            int crossing = 0;
            for (int id : m.edges) {
                const Edge& e = g.edge(id);
                if (shore.count(e.u) != shore.count(e.v)) ++crossing;
            }
            if (crossing != 1) {
                tight = false;
                break;
            }
        }
        if (tight) out.push_back(shore);
    }
    return out;
}

Graph random_factorizable_graph(int n, double p, unsigned int seed) {
    require(n >= 2 && n % 2 == 0, "random_factorizable_graph: n must be even and positive");
    require(p >= 0.0 && p <= 1.0, "random_factorizable_graph: probability out of range");
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; v += 2) edges.emplace_back(v, v + 1);
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (v == u + 1 && u % 2 == 1) continue;  // planted pair
            // raw 32-bit draw keeps the stream identical across platforms
            double roll = static_cast<double>(rng()) / 4294967296.0;
            if (roll < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> random_corpus() {
    std::vector<Graph> out;
    const double densities[3] = {0.1, 0.3, 0.6};
    for (int i = 0; i < 100; ++i) {
        int n = 4 + 2 * ((i / 3) % 5);
        double p = densities[i % 3];
        out.push_back(random_factorizable_graph(n, p, 1000u + static_cast<unsigned int>(i)));
    }
    return out;
}

namespace corpus {

Graph p3() { return Graph::from_edge_list(3, {{1, 2}, {2, 3}}); }

Graph p4() { return Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}}); }

Graph paw() { return Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}}); }

Graph c6() {
    return Graph::from_edge_list(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
}

Graph k4() {
    return Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

Graph k33() {
    return Graph::from_edge_list(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                                     {3, 4}, {3, 5}, {3, 6}});
}

Graph prism() {
    return Graph::from_edge_list(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                     {1, 4}, {2, 5}, {3, 6}});
}

Graph petersen() {
    return Graph::from_edge_list(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                                      {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                      {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});
}

Graph w5() {
    return Graph::from_edge_list(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                                     {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}});
}

std::vector<std::pair<std::string, Graph>> catalog() {
    return {{"P4", p4()},   {"PAW", paw()},     {"C6", c6()}, {"K4", k4()},
            {"K33", k33()}, {"PRISM", prism()}, {"W5", w5()}, {"PETERSEN", petersen()}};
}

std::vector<std::pair<std::string, Graph>> catalog_bricks() {
    return {{"K4", k4()}, {"W5", w5()}, {"PRISM", prism()}, {"PETERSEN", petersen()}};
}

}  // namespace corpus

}  // namespace tightcut
