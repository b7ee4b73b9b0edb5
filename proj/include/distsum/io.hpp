#ifndef DISTSUM_IO_HPP
#define DISTSUM_IO_HPP

#include "distsum/coloring.hpp"
#include "distsum/graph.hpp"

#include <iosfwd>
#include <string>

namespace distsum {

/// Edge-list text format: '#' lines are comments, the first data line is
/// "n m", followed by m lines "u v" with 0-based indices. Parse errors carry
/// the line number.
Graph read_edge_list(std::istream& in, const std::string& name = "<stream>");
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::string& header_comment = "");
void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& header_comment = "");

/// Coloring format: one line per edge, "u v color", order-insensitive,
/// '#' comments allowed. Unknown or repeated edges are errors; missing edges
/// are reported by the verifier.
EdgeColoring read_coloring(std::istream& in, const Graph& g,
                           const std::string& name = "<stream>");
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c,
                    const std::string& header_comment = "");
void write_coloring_file(const std::string& path, const Graph& g, const EdgeColoring& c,
                         const std::string& header_comment = "");

}  // namespace distsum

#endif
