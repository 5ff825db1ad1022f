#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tightcut/engine.hpp"
#include "tightcut/errors.hpp"
#include "tightcut/io.hpp"
#include "tightcut/oracle.hpp"

namespace {

int enumeration_bound() {
    const char* env = std::getenv("TIGHTCUT_ENUM_BOUND");
    if (env == nullptr) return tightcut::default_enumeration_bound;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v < 2)
        throw tightcut::parse_error(0, "TIGHTCUT_ENUM_BOUND: bad value");
    return static_cast<int>(v);
}

int run_decompose(const std::string& path, bool as_dot) {
    tightcut::Graph g = tightcut::read_graph_file(path);
    tightcut::require(tightcut::is_factorizable(g), "not factorizable");
    tightcut::CanonicalDecomposition d = tightcut::CanonicalDecomposition::analyze(g);
    tightcut::DecompositionReport report = tightcut::build_report(d);
    std::cout << (as_dot ? tightcut::report_to_dot(report) : tightcut::report_to_json(report));
    return 0;
}

int run_witness(const std::string& path, const std::string& shore_text,
                const std::string& matching_text) {
    tightcut::Graph g = tightcut::read_graph_file(path);
    tightcut::VertexSet shore = tightcut::parse_shore(g, shore_text);
    tightcut::CutWitness w =
        matching_text.empty()
            ? tightcut::fat_witness(g, shore)
            : tightcut::fat_witness(g, shore, tightcut::parse_matching(g, matching_text));
    std::cout << tightcut::witness_to_json(g, w);
    return 0;
}

void run_verify(const tightcut::Graph& g) {
    tightcut::require(tightcut::is_factorizable(g), "not factorizable");
    tightcut::CanonicalDecomposition d = tightcut::CanonicalDecomposition::analyze(g);
    std::cout << "decomposition axioms hold\n";
    int bound = enumeration_bound();
    if (g.vertex_count() <= bound) {
        std::vector<tightcut::Matching> pms = tightcut::enumerate_perfect_matchings(g, bound);
        tightcut::EdgeIdSet seen;
        for (const tightcut::Matching& m : pms) seen.insert(m.edges.begin(), m.edges.end());
        tightcut::ensure(seen == tightcut::allowed_edges(g),
                         "allowed edges disagree with enumeration");
        std::cout << "allowed edges match enumeration\n";
        for (int h = 0; h < d.component_count(); ++h) {
            std::vector<int> cut = g.cut_edges(d.component(h).vertices);
            for (const tightcut::Matching& m : pms)
                for (int id : cut)
                    tightcut::ensure(!m.contains(id), "a perfect matching crosses a component");
        }
        std::cout << "component vertex sets are separating\n";
    } else {
        std::cout << "enumeration skipped (graph beyond bound)\n";
    }
    std::cout << "all invariants hold\n";
}

int run_check(const std::string& mode, const std::string& path) {
    tightcut::Graph g = tightcut::read_graph_file(path);
    if (mode == "brick") {
        std::optional<std::pair<int, int>> pair = tightcut::brick_failure_pair(g);
        nlohmann::json j;
        j["brick"] = !pair.has_value();
        if (pair) j["failing_pair"] = {pair->first, pair->second};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (mode == "tight-cuts") {
        std::vector<tightcut::VertexSet> cuts =
            tightcut::tight_cuts_bruteforce(g, enumeration_bound());
        nlohmann::json j = nlohmann::json::array();
        for (const tightcut::VertexSet& s : cuts) j.push_back(std::vector<int>(s.begin(), s.end()));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    run_verify(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical decomposition and fat-cut witnesses for matching covered graphs"};
    app.require_subcommand(1);

    std::string dec_path;
    bool dec_dot = false;
    bool dec_json = false;
    CLI::App* dec = app.add_subcommand("decompose", "print the canonical decomposition");
    dec->add_option("file", dec_path, "graph file")->required();
    CLI::Option* jopt = dec->add_flag("--json", dec_json, "JSON output (default)");
    dec->add_flag("--dot", dec_dot, "DOT output")->excludes(jopt);

    std::string wit_path, wit_shore, wit_matching;
    CLI::App* wit = app.add_subcommand("witness", "fat perfect matching across a shore");
    wit->add_option("file", wit_path, "graph file")->required();
    wit->add_option("--shore", wit_shore, "comma-separated vertices")->required();
    wit->add_option("--matching", wit_matching, "comma-separated u-v pairs");

    std::string chk_mode, chk_path;
    CLI::App* chk = app.add_subcommand("check", "run a named check");
    chk->add_option("mode", chk_mode, "brick, tight-cuts or verify-decomp")
        ->required()
        ->check(CLI::IsMember({"brick", "tight-cuts", "verify-decomp"}));
    chk->add_option("file", chk_path, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (dec->parsed()) return run_decompose(dec_path, dec_dot);
        if (wit->parsed()) return run_witness(wit_path, wit_shore, wit_matching);
        return run_check(chk_mode, chk_path);
    } catch (const tightcut::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const tightcut::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
