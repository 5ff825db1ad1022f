#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "tightcut/matching.hpp"
#include "tightcut/oracle.hpp"

using namespace tightcut;

namespace {

Matching mk(EdgeIdSet ids) {
    Matching m;
    m.edges = std::move(ids);
    return m;
}

std::set<VertexSet> cut_set(const Graph& g) {
    auto v = tight_cuts_bruteforce(g);
    return {v.begin(), v.end()};
}

// the six (or ten) star cuts, each written as the side holding vertex 1
std::set<VertexSet> star_cuts(const Graph& g) {
    std::set<VertexSet> out;
    for (int v : g.vertices()) {
        if (v == 1) {
            out.insert(VertexSet{1});
        } else {
            VertexSet shore = g.vertices();
            shore.erase(v);
            out.insert(shore);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("perfect matching counts on the named corpus") {
    CHECK(enumerate_perfect_matchings(corpus::p3()).empty());
    CHECK(enumerate_perfect_matchings(corpus::p4()).size() == 1);
    CHECK(enumerate_perfect_matchings(corpus::paw()).size() == 1);
    CHECK(enumerate_perfect_matchings(corpus::c6()).size() == 2);
    CHECK(enumerate_perfect_matchings(corpus::k4()).size() == 3);
    CHECK(enumerate_perfect_matchings(corpus::k33()).size() == 6);
    CHECK(enumerate_perfect_matchings(corpus::prism()).size() == 4);
    CHECK(enumerate_perfect_matchings(corpus::w5()).size() == 5);
    CHECK(enumerate_perfect_matchings(corpus::petersen()).size() == 6);
    CHECK(enumerate_perfect_matchings(corpus::p4()).front() == mk({0, 2}));
    CHECK(enumerate_perfect_matchings(corpus::paw()).front() == mk({0, 3}));
}

TEST_CASE("enumeration yields distinct perfect matchings, deterministically") {
    for (const auto& [name, g] : corpus::catalog()) {
        CAPTURE(name);
        auto pms = enumerate_perfect_matchings(g);
        std::set<EdgeIdSet> seen;
        for (const Matching& m : pms) {
            CHECK(is_perfect_matching(g, m));
            CHECK(seen.insert(m.edges).second);
        }
        auto again = enumerate_perfect_matchings(g);
        REQUIRE(again.size() == pms.size());
        for (size_t i = 0; i < pms.size(); ++i) CHECK(again[i] == pms[i]);
    }
}

TEST_CASE("enumeration refuses graphs beyond the bound") {
    CHECK_THROWS_AS(enumerate_perfect_matchings(corpus::k4(), 2), std::invalid_argument);
    std::vector<std::pair<int, int>> planted;
    for (int v = 1; v < 18; v += 2) planted.emplace_back(v, v + 1);
    CHECK_THROWS_AS(enumerate_perfect_matchings(Graph::from_edge_list(18, planted)),
                    std::invalid_argument);
}

TEST_CASE("allowed edges agree with full enumeration") {
    for (const auto& [name, g] : corpus::catalog()) {
        CAPTURE(name);
        EdgeIdSet from_enum;
        for (const Matching& m : enumerate_perfect_matchings(g))
            from_enum.insert(m.edges.begin(), m.edges.end());
        CHECK(allowed_edges(g) == from_enum);
    }
}

TEST_CASE("existence brute force agrees with the solver") {
    for (const auto& [name, g] : corpus::catalog()) {
        CAPTURE(name);
        CHECK(has_perfect_matching_bruteforce(g) == find_perfect_matching(g).has_value());
    }
    CHECK(!has_perfect_matching_bruteforce(corpus::p3()));
    for (const Graph& g : random_corpus())
        CHECK(has_perfect_matching_bruteforce(g) == find_perfect_matching(g).has_value());
}

TEST_CASE("tight cuts by brute force") {
    CHECK(cut_set(corpus::k4()) ==
          std::set<VertexSet>{{1}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    CHECK(cut_set(corpus::p4()) ==
          std::set<VertexSet>{{1}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    CHECK(cut_set(corpus::c6()) ==
          std::set<VertexSet>{{1},
                              {1, 3, 4, 5, 6},
                              {1, 2, 4, 5, 6},
                              {1, 2, 3, 5, 6},
                              {1, 2, 3, 4, 6},
                              {1, 2, 3, 4, 5},
                              {1, 2, 3},
                              {1, 5, 6},
                              {1, 2, 6}});
    CHECK(cut_set(corpus::k33()) == star_cuts(corpus::k33()));
    CHECK(cut_set(corpus::prism()) == star_cuts(corpus::prism()));
    CHECK(cut_set(corpus::w5()) == star_cuts(corpus::w5()));
    CHECK(cut_set(corpus::petersen()) == star_cuts(corpus::petersen()));
    CHECK_THROWS_AS(tight_cuts_bruteforce(corpus::p3()), std::invalid_argument);
}

TEST_CASE("random generator is deterministic and keeps its planted matching") {
    Graph a = random_factorizable_graph(8, 0.3, 7);
    Graph b = random_factorizable_graph(8, 0.3, 7);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int i = 0; i < a.edge_count(); ++i) {
        CHECK(a.edge(i).u == b.edge(i).u);
        CHECK(a.edge(i).v == b.edge(i).v);
    }
    for (int v = 1; v < 8; v += 2) CHECK(!a.edge_ids_between(v, v + 1).empty());
    CHECK(is_factorizable(a));
    CHECK_THROWS_AS(random_factorizable_graph(7, 0.3, 7), std::invalid_argument);
    CHECK_THROWS_AS(random_factorizable_graph(8, 1.5, 7), std::invalid_argument);
}

TEST_CASE("random corpus shape") {
    auto graphs = random_corpus();
    REQUIRE(graphs.size() == 100);
    for (const Graph& g : graphs) {
        CHECK(g.vertex_count() >= 4);
        CHECK(g.vertex_count() <= 12);
        CHECK(g.vertex_count() % 2 == 0);
        CHECK(find_perfect_matching(g).has_value());
    }
}

TEST_CASE("catalog order and brick subset") {
    std::vector<std::string> names;
    for (const auto& [name, g] : corpus::catalog()) {
        CHECK(is_factorizable(g));
        names.push_back(name);
    }
    CHECK(names == std::vector<std::string>{"P4", "PAW", "C6", "K4", "K33", "PRISM", "W5",
                                            "PETERSEN"});
    std::vector<std::string> brick_names;
    for (const auto& [name, g] : corpus::catalog_bricks()) {
        CHECK(is_brick(g));
        brick_names.push_back(name);
    }
    CHECK(brick_names == std::vector<std::string>{"K4", "W5", "PRISM", "PETERSEN"});
}

}  // TEST_SUITE
