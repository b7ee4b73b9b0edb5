#include "distsum/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace distsum {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

bool data_line(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (!isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) fail(name, lineno, "expected header \"n m\"");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) fail(name, lineno, "expected edge \"u v\"");
        if (static_cast<long long>(pairs.size()) == m) fail(name, lineno, "more edges than declared");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) fail(name, lineno, "missing header \"n m\"");
    if (static_cast<long long>(pairs.size()) != m)
        fail(name, lineno, "expected " + std::to_string(m) + " edges, got " +
                               std::to_string(pairs.size()));
    try {
        return Graph::from_edge_list(static_cast<int>(n), pairs);
    } catch (const std::exception& e) {
        fail(name, lineno, e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& header_comment) {
    if (!header_comment.empty()) {
        std::istringstream hs(header_comment);
        std::string line;
        while (std::getline(hs, line)) out << "# " << line << "\n";
    }
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& header_comment) {
    auto out = open_out(path);
    write_edge_list(out, g, header_comment);
}

EdgeColoring read_coloring(std::istream& in, const Graph& g, const std::string& name) {
    EdgeColoring c(g.edge_count());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        std::istringstream ls(line);
        long long u, v, col;
        if (!(ls >> u >> v >> col)) fail(name, lineno, "expected \"u v color\"");
        if (col < 1) fail(name, lineno, "colors must be positive");
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            fail(name, lineno, "endpoint out of range");
        int eid = g.edge_id(static_cast<int>(u), static_cast<int>(v));
        if (eid < 0) fail(name, lineno, "edge not in graph");
        if (c.get(eid) != 0) fail(name, lineno, "edge colored twice");
        c.set(eid, col);
    }
    return c;
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_coloring(in, g, path);
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c,
                    const std::string& header_comment) {
    if (!header_comment.empty()) {
        std::istringstream hs(header_comment);
        std::string line;
        while (std::getline(hs, line)) out << "# " << line << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        out << u << " " << v << " " << c.get(e) << "\n";
    }
}

void write_coloring_file(const std::string& path, const Graph& g, const EdgeColoring& c,
                         const std::string& header_comment) {
    auto out = open_out(path);
    write_coloring(out, g, c, header_comment);
}

}  // namespace distsum
