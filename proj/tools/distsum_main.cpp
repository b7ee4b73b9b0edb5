#include "distsum/colorer.hpp"
#include "distsum/generators.hpp"
#include "distsum/graph.hpp"
#include "distsum/io.hpp"
#include "distsum/oracle.hpp"
#include "distsum/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace distsum;

int cmd_bounds(long long delta, long long r) {
    BoundParams p = bound_params(delta, r);
    std::cout << "delta=" << p.delta << " r=" << p.r << " moore=" << p.moore
              << " M=" << p.m_quot << " K=" << p.k_val << " palette_max=" << p.palette_max
              << "\n";
    return 0;
}

Graph make_family(const std::string& family, const std::vector<int>& sizes, double p,
                  std::uint64_t seed) {
    auto need = [&](size_t k) {
        if (sizes.size() != k)
            throw std::runtime_error(family + " expects " + std::to_string(k) + " size argument(s)");
    };
    if (family == "path") { need(1); return path_graph(sizes[0]); }
    if (family == "cycle") { need(1); return cycle_graph(sizes[0]); }
    if (family == "star") { need(1); return star_graph(sizes[0]); }
    if (family == "complete") { need(1); return complete_graph(sizes[0]); }
    if (family == "complete_bipartite") { need(2); return complete_bipartite(sizes[0], sizes[1]); }
    if (family == "de_bruijn") { need(2); return de_bruijn_undirected(sizes[0], sizes[1]); }
    if (family == "random") { need(1); return random_graph(sizes[0], p, seed); }
    throw std::runtime_error("unknown family: " + family);
}

std::string family_header(const std::string& family, const std::vector<int>& sizes, double p,
                          std::uint64_t seed) {
    std::string h = "family: " + family;
    for (int s : sizes) h += " " + std::to_string(s);
    if (family == "random")
        h += " p=" + std::to_string(p) + " seed=" + std::to_string(seed);
    return h;
}

int cmd_generate(const std::string& family, const std::vector<int>& sizes, double p,
                 std::uint64_t seed, const std::string& out_path) {
    if (family == "all_connected") {
        if (sizes.size() != 1) throw std::runtime_error("all_connected expects one size argument");
        int n = sizes[0];
        auto graphs = all_connected(n);
        std::filesystem::create_directories(out_path);
        for (size_t i = 0; i < graphs.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof(name), "graph_n%d_%05zu.txt", n, i);
            std::string header = std::string("family: all_connected ") + std::to_string(n) +
                                 "\nmode: " + kAllConnectedMode +
                                 "\nindex: " + std::to_string(i);
            write_edge_list_file((std::filesystem::path(out_path) / name).string(), graphs[i],
                                 header);
        }
        std::cout << "wrote " << graphs.size() << " graphs to " << out_path << "\n";
        std::cout << "# mode: " << kAllConnectedMode << "\n";
        return 0;
    }
    Graph g = make_family(family, sizes, p, seed);
    std::string header = family_header(family, sizes, p, seed);
    if (out_path.empty()) {
        write_edge_list(std::cout, g, header);
    } else {
        write_edge_list_file(out_path, g, header);
        std::cout << "wrote n=" << g.vertex_count() << " m=" << g.edge_count() << " to "
                  << out_path << "\n";
    }
    return 0;
}

int cmd_color(const std::string& graph_path, int r, const std::string& out_path,
              bool proper_only) {
    Graph g = read_edge_list_file(graph_path);
    EdgeColoring c;
    std::string header;
    if (proper_only) {
        c = vizing_color(g);
        header = "proper edge coloring (at most max_degree+1 colors)";
    } else {
        RunStats stats;
        c = color_distinguishing(g, r, &stats);
        int delta = std::max(2, g.max_degree());
        BoundParams p = bound_params(delta, r);
        header = "distance-" + std::to_string(r) + " sum distinguishing coloring";
        std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << " delta="
                  << g.max_degree() << " max_color=" << c.max_color() << " palette_max="
                  << p.palette_max << "\n";
    }
    if (out_path.empty())
        write_coloring(std::cout, g, c, header);
    else
        write_coloring_file(out_path, g, c, header);
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path, int r,
               const std::string& json_path) {
    Graph g = read_edge_list_file(graph_path);
    EdgeColoring c = read_coloring_file(coloring_path, g);
    VerificationReport report = verify(g, c, r);
    for (const auto& v : report.properness_violations)
        std::cout << "properness: vertex " << v.vertex << " edges (" << v.edge_a.first << ","
                  << v.edge_a.second << ") and (" << v.edge_b.first << "," << v.edge_b.second
                  << ") share a color\n";
    for (const auto& s : report.conflicts)
        std::cout << "conflict: vertices " << s.u << " and " << s.v << " at distance "
                  << s.distance << " both have sum " << s.sum << "\n";
    std::cout << (report.ok() ? "OK" : "FAIL") << " proper=" << (report.proper ? "yes" : "no")
              << " distinguishing=" << (report.distinguishing ? "yes" : "no")
              << " max_color=" << report.max_color << "\n";
    if (!json_path.empty()) {
        nlohmann::json j;
        j["proper"] = report.proper;
        j["distinguishing"] = report.distinguishing;
        j["max_color"] = report.max_color;
        j["properness_violations"] = nlohmann::json::array();
        for (const auto& v : report.properness_violations)
            j["properness_violations"].push_back(
                {{"vertex", v.vertex},
                 {"edge_a", {v.edge_a.first, v.edge_a.second}},
                 {"edge_b", {v.edge_b.first, v.edge_b.second}}});
        j["conflicts"] = nlohmann::json::array();
        for (const auto& s : report.conflicts)
            j["conflicts"].push_back(
                {{"u", s.u}, {"v", s.v}, {"distance", s.distance}, {"sum", s.sum}});
        std::ofstream out(json_path);
        out << j.dump(2) << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_exact(const std::string& graph_path, int r, long long kmax, const std::string& variant,
              const std::string& witness_path) {
    Graph g = read_edge_list_file(graph_path);
    std::optional<OracleResult> res;
    if (variant == "proper")
        res = exact_index(g, r, kmax);
    else if (variant == "nonproper")
        res = exact_sr(g, r, kmax);
    else
        throw std::runtime_error("variant must be proper or nonproper");
    if (!res) {
        std::cout << "no coloring with k <= " << kmax << "\n";
        return 0;
    }
    std::cout << "k=" << res->k << "\n";
    if (!witness_path.empty())
        write_coloring_file(witness_path, g, res->witness,
                            "witness for k=" + std::to_string(res->k) + " variant=" + variant);
    return 0;
}

int cmd_bench(int r, int nmax, long long kmax, long long node_limit, const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
        os = &file;
    }
    *os << "# bench r=" << r << " nmax=" << nmax << " kmax=" << kmax
        << " node_limit=" << node_limit << "\n";
    *os << "# corpus: connected graphs, " << kAllConnectedMode << "\n";
    *os << "# id\tn\tm\tdelta\tconstructive_max\tpalette_max\texact\n";
    RunStats total;
    for (int n = 3; n <= nmax; ++n) {
        auto graphs = all_connected(n);
        for (size_t i = 0; i < graphs.size(); ++i) {
            const Graph& g = graphs[i];
            int delta = g.max_degree();
            BoundParams p = bound_params(std::max(2, delta), r);
            RunStats stats;
            EdgeColoring c = color_distinguishing(g, r, &stats);
            total.add(stats);
            VerificationReport report = verify(g, c, r);
            if (!report.ok()) {
                std::cerr << "verification failed on corpus graph n=" << n << " index=" << i
                          << "\n";
                return 1;
            }
            SearchOptions options;
            options.proper = true;
            options.node_limit = node_limit;
            auto outcome = search_min_coloring(g, r, std::min(p.palette_max, kmax), options);
            std::string exact_txt = outcome.result ? std::to_string(outcome.result->k)
                                                   : (outcome.out_of_budget ? "timeout" : "none");
            char id[32];
            std::snprintf(id, sizeof(id), "n%d_%05zu", n, i);
            *os << id << "\t" << n << "\t" << g.edge_count() << "\t" << delta << "\t"
                << c.max_color() << "\t" << p.palette_max << "\t" << exact_txt << "\n";
        }
    }
    *os << "# final-step cases:";
    for (size_t i = 0; i < total.final_case_counts.size(); ++i)
        *os << " case" << (i + 1) << "=" << total.final_case_counts[i];
    *os << "\n";
    std::string unreached;
    for (size_t i = 0; i < total.final_case_counts.size(); ++i)
        if (total.final_case_counts[i] == 0)
            unreached += (unreached.empty() ? "case" : ", case") + std::to_string(i + 1);
    if (!unreached.empty())
        *os << "# unreachable-at-small-n: " << unreached << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-constrained sum-distinguishing edge colorings"};
    app.require_subcommand(1);

    auto* bounds = app.add_subcommand("bounds", "print bound parameters for (delta, r)");
    long long b_delta = 0, b_r = 0;
    bounds->add_option("--delta", b_delta, "maximum degree")->required();
    bounds->add_option("-r,--radius", b_r, "distance radius")->required();

    auto* gen = app.add_subcommand("generate", "write a graph family as an edge list");
    std::string g_family, g_out;
    std::vector<int> g_sizes;
    double g_p = 0.5;
    std::uint64_t g_seed = 1;
    gen->add_option("family", g_family,
                    "path|cycle|star|complete|complete_bipartite|de_bruijn|random|all_connected")
        ->required();
    gen->add_option("sizes", g_sizes, "size parameters");
    gen->add_option("-p,--probability", g_p, "edge probability (random)");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("-o,--output", g_out, "output file (directory for all_connected)");

    auto* color = app.add_subcommand("color", "color a graph");
    std::string c_graph, c_out;
    int c_r = 2;
    bool c_proper_only = false;
    color->add_option("-g,--graph", c_graph, "graph file")->required();
    color->add_option("-r,--radius", c_r, "distance radius");
    color->add_option("-o,--output", c_out, "coloring output file");
    color->add_flag("--proper-only", c_proper_only, "plain proper edge coloring");

    auto* ver = app.add_subcommand("verify", "verify a coloring");
    std::string v_graph, v_coloring, v_json;
    int v_r = 2;
    ver->add_option("-g,--graph", v_graph, "graph file")->required();
    ver->add_option("-c,--coloring", v_coloring, "coloring file")->required();
    ver->add_option("-r,--radius", v_r, "distance radius");
    ver->add_option("--json", v_json, "write a machine-readable report");

    auto* exact = app.add_subcommand("exact", "exact minimum by exhaustive search");
    std::string e_graph, e_variant = "proper", e_witness;
    int e_r = 2;
    long long e_kmax = 12;
    exact->add_option("-g,--graph", e_graph, "graph file")->required();
    exact->add_option("-r,--radius", e_r, "distance radius");
    exact->add_option("--kmax", e_kmax, "largest k to try");
    exact->add_option("--variant", e_variant, "proper|nonproper");
    exact->add_option("--witness", e_witness, "witness output file");

    auto* bench = app.add_subcommand("bench", "run the corpus and tabulate results");
    int bn_r = 2, bn_nmax = 6;
    long long bn_kmax = 12, bn_nodes = 2000000;
    std::string bn_out;
    bench->add_option("-r,--radius", bn_r, "distance radius");
    bench->add_option("--nmax", bn_nmax, "largest corpus order");
    bench->add_option("--kmax", bn_kmax, "exact search cap");
    bench->add_option("--node-limit", bn_nodes, "exact search node budget");
    bench->add_option("-o,--output", bn_out, "table output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(b_delta, b_r);
        if (gen->parsed()) return cmd_generate(g_family, g_sizes, g_p, g_seed, g_out);
        if (color->parsed()) return cmd_color(c_graph, c_r, c_out, c_proper_only);
        if (ver->parsed()) return cmd_verify(v_graph, v_coloring, v_r, v_json);
        if (exact->parsed()) return cmd_exact(e_graph, e_r, e_kmax, e_variant, e_witness);
        if (bench->parsed()) return cmd_bench(bn_r, bn_nmax, bn_kmax, bn_nodes, bn_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
