#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"
#include "dqa/qdigraph.hpp"

namespace dqa {

/// edgelist: one "u v" pair per line, '#' comments and blank lines ignored.
/// flag: "dim 0", a line with the vertex count, "dim 1", then "u v" lines.
enum class InputFormat { EdgeList, Flag };

InputFormat parse_input_format(std::string_view token);

struct LoadedGraph {
  DirectedGraph graph;
  /// labels[v] is the label vertex v had in the input file.
  std::vector<std::uint64_t> labels;
  /// One message per collapsed duplicate edge.
  std::vector<std::string> warnings;
};

/// Edge-list labels may be arbitrary non-negative integers; they are mapped
/// to dense ids in ascending label order. Throws GraphError with the line
/// number for malformed lines and self-loops.
LoadedGraph load_edge_list(std::istream& in);

/// Vertex ids are taken as-is and must be below the declared count.
LoadedGraph load_flag(std::istream& in);

LoadedGraph load_graph(const std::filesystem::path& path, InputFormat format);

/// "dim 0: 5, dim 1: 10, ..."
std::string level_summary(const FlagComplex& complex);

/// "id<TAB>dim<TAB>v0 v1 ... vd" for every simplex of dimension >= min_dim.
void write_simplices(std::ostream& os, const FlagComplex& complex, int min_dim = 0);

/// "src_id<TAB>dst_id<TAB>{I|II|both}", sorted by (src, dst).
void write_q_edges(std::ostream& os, const QDigraph& g);

/// "id<TAB>label" per vertex.
void write_vertex_map(std::ostream& os, const LoadedGraph& loaded);

}  // namespace dqa
