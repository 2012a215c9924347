#pragma once

#include "stab/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace stab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")")
        , line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// DIMACS edge format: "p edge n m" header, "e u v" lines, 1-indexed on the
// wire. Vertex labels ride on "c label <id> <name>" comment lines.
inline Graph parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    bool got_header = false;
    int n = 0;
    long m = 0, seen = 0;
    Graph g;
    std::vector<std::pair<int, std::string>> pending_labels;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag))
            continue;
        if (tag == "c") {
            std::string kind;
            if (iss >> kind && kind == "label") {
                int id;
                std::string name;
                if (!(iss >> id >> name))
                    throw ParseError("malformed label comment", lineno);
                pending_labels.push_back({id, name});
            }
            continue;
        }
        if (tag == "p") {
            if (got_header)
                throw ParseError("duplicate header", lineno);
            std::string fmt;
            if (!(iss >> fmt >> n >> m) || (fmt != "edge" && fmt != "col")
                || n < 0 || m < 0)
                throw ParseError("malformed header", lineno);
            g = Graph(n);
            got_header = true;
            continue;
        }
        if (tag == "e") {
            if (!got_header)
                throw ParseError("edge before header", lineno);
            int u, v;
            if (!(iss >> u >> v))
                throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of range: "
                        + std::to_string(u) + " " + std::to_string(v),
                    lineno);
            if (u == v)
                throw ParseError(
                    "self-loop at vertex " + std::to_string(u), lineno);
            if (g.has_edge(u - 1, v - 1))
                throw ParseError("duplicate edge " + std::to_string(u) + "-"
                        + std::to_string(v),
                    lineno);
            g.add_edge(u - 1, v - 1);
            ++seen;
            continue;
        }
        throw ParseError("unrecognized line type '" + tag + "'", lineno);
    }
    if (!got_header)
        throw ParseError("missing header", lineno + 1);
    if (seen != m)
        throw ParseError("header declares " + std::to_string(m)
                + " edges but " + std::to_string(seen) + " present",
            lineno + 1);
    for (auto& [id, name] : pending_labels) {
        if (id < 1 || id > n)
            throw ParseError("label for unknown vertex " + std::to_string(id),
                lineno + 1);
        g.set_label(id - 1, name);
    }
    return g;
}

inline Graph parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const auto& [v, l] : g.labels())
        out << "c label " << v + 1 << " " << l << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << " " << v + 1 << "\n";
}

inline std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

} // namespace stab
