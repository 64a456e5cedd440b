#include "mis/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace mis {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long parse_int(std::string_view token, int line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

struct LineReader {
    explicit LineReader(std::string_view text) : text(text) {}

    bool next(std::string_view& line) {
        if (pos >= text.size())
            return false;
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        return true;
    }

    std::string_view text;
    size_t pos = 0;
    int line_no = 0;
};

void ensure_vertices(Graph& g, int id) {
    while (g.capacity() <= id)
        g.add_vertex();
}

Graph parse_edge_list(std::string_view text) {
    Graph g;
    LineReader reader(text);
    std::string_view line;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        if (tokens[0][0] == '#' || tokens[0][0] == '%') {
            // "# nodes N" records graphs whose trailing vertices are isolated
            if (tokens.size() >= 3 && tokens[0] == "#" && tokens[1] == "nodes") {
                long n = parse_int(tokens[2], reader.line_no);
                if (n > 0)
                    ensure_vertices(g, static_cast<int>(n) - 1);
            }
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(reader.line_no, "expected 'u v'");
        long u = parse_int(tokens[0], reader.line_no);
        long v = parse_int(tokens[1], reader.line_no);
        if (u < 0 || v < 0)
            throw ParseError(reader.line_no, "negative vertex id");
        ensure_vertices(g, static_cast<int>(std::max(u, v)));
        if (u != v)
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

Graph parse_metis(std::string_view text, bool strict) {
    LineReader reader(text);
    std::string_view line;

    long n = -1, m = -1;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '%')
            continue;
        if (tokens.size() < 2 || tokens.size() > 3)
            throw ParseError(reader.line_no, "expected header 'n m [fmt]'");
        n = parse_int(tokens[0], reader.line_no);
        m = parse_int(tokens[1], reader.line_no);
        if (tokens.size() == 3) {
            std::string fmt(tokens[2]);
            if (fmt.find_first_not_of('0') != std::string::npos)
                throw ParseError(reader.line_no, "weighted METIS graphs are not supported (fmt=" + fmt + ")");
        }
        break;
    }
    if (n < 0)
        throw ParseError(reader.line_no, "missing METIS header");

    Graph g(static_cast<int>(n));
    int vertex = 0;
    while (vertex < n && reader.next(line)) {
        if (!line.empty() && line[0] == '%')
            continue;
        for (auto token : split_ws(line)) {
            long w = parse_int(token, reader.line_no);
            if (w < 1 || w > n)
                throw ParseError(reader.line_no, "neighbor " + std::to_string(w) + " out of range 1.." + std::to_string(n));
            if (w - 1 == vertex) {
                if (strict)
                    throw ParseError(reader.line_no, "self-loop on vertex " + std::to_string(w));
                continue;
            }
            g.add_edge(vertex, static_cast<int>(w) - 1);
        }
        ++vertex;
    }
    if (vertex < n)
        throw ParseError(reader.line_no, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(vertex));
    (void)m; // edge count in the header is informational
    return g;
}

Graph parse_dimacs(std::string_view text, bool strict) {
    LineReader reader(text);
    std::string_view line;

    Graph g;
    long n = -1;
    while (reader.next(line)) {
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c")
            continue;
        if (tokens[0] == "p") {
            if (n >= 0)
                throw ParseError(reader.line_no, "duplicate problem line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "edges" && tokens[1] != "col"))
                throw ParseError(reader.line_no, "expected 'p edge n m'");
            n = parse_int(tokens[2], reader.line_no);
            if (n < 0)
                throw ParseError(reader.line_no, "negative vertex count");
            g = Graph(static_cast<int>(n));
        } else if (tokens[0] == "e") {
            if (n < 0)
                throw ParseError(reader.line_no, "edge before problem line");
            if (tokens.size() != 3)
                throw ParseError(reader.line_no, "expected 'e u v'");
            long u = parse_int(tokens[1], reader.line_no);
            long v = parse_int(tokens[2], reader.line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(reader.line_no, "vertex index out of range 1.." + std::to_string(n));
            if (u == v) {
                if (strict)
                    throw ParseError(reader.line_no, "self-loop on vertex " + std::to_string(u));
                continue;
            }
            g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            throw ParseError(reader.line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (n < 0)
        throw ParseError(reader.line_no, "missing problem line");
    return g;
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format, bool strict) {
    switch (format) {
    case GraphFormat::edge_list:
        return parse_edge_list(text);
    case GraphFormat::metis:
        return parse_metis(text, strict);
    case GraphFormat::dimacs:
        return parse_dimacs(text, strict);
    }
    throw std::logic_error("unreachable");
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# nodes " << g.capacity() << '\n';
    for (int u = 0; u < g.capacity(); ++u) {
        if (!g.alive(u))
            continue;
        for (int v : g.neighbors(u))
            if (v > u)
                out << u << ' ' << v << '\n';
    }
    return out.str();
}

GraphFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".graph" || ext == ".metis")
        return GraphFormat::metis;
    if (ext == ".col" || ext == ".dimacs")
        return GraphFormat::dimacs;
    return GraphFormat::edge_list;
}

const char* format_name(GraphFormat format) {
    switch (format) {
    case GraphFormat::edge_list: return "edge-list";
    case GraphFormat::metis: return "metis";
    case GraphFormat::dimacs: return "dimacs";
    }
    return "?";
}

GraphFormat format_from_name(const std::string& name) {
    if (name == "edge-list" || name == "edgelist" || name == "el")
        return GraphFormat::edge_list;
    if (name == "metis")
        return GraphFormat::metis;
    if (name == "dimacs")
        return GraphFormat::dimacs;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

} // namespace mis
