#pragma once

#include "mis/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace mis {

enum class GraphFormat { edge_list, metis, dimacs };

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

// Parses one of the supported text formats into a simple undirected graph.
// Duplicate edges (including symmetric repeats) are deduplicated. In strict
// mode, self-loops in METIS/DIMACS input are an error; edge-list input drops
// them silently in either mode.
//
//   edge-list:  "u v" per line, 0-based; '#'/'%' comments; blank lines ok.
//               A "# nodes N" comment pre-allocates N vertices, which lets
//               graphs with trailing isolated vertices round-trip.
//   METIS:      header "n m [fmt]"; line i+1 holds the 1-based neighbors
//               of vertex i; '%' comments.
//   DIMACS:     "p edge n m" header; "e u v" 1-based edges; "c" comments.
Graph parse_graph(std::string_view text, GraphFormat format, bool strict = true);

// Canonical edge-list serialization: "# nodes N" header, then ascending
// "u v" lines with u < v, 0-based, LF endings. Expects a graph without
// tombstones (compact kernels before exporting).
std::string to_edge_list(const Graph& g);

// Maps a file extension (".el", ".graph", ".col", ...) to a format;
// defaults to edge_list for anything unrecognized.
GraphFormat format_from_path(const std::string& path);

const char* format_name(GraphFormat format);
GraphFormat format_from_name(const std::string& name);

} // namespace mis
