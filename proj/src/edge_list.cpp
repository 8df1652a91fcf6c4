#include "laman/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "laman/errors.hpp"

namespace laman {

SimpleGraph parse_edge_list(const std::string& text) {
    std::vector<SimpleGraph::Edge> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        unsigned long long u, v;
        if (!(ls >> u)) {
            std::string leftover;
            if (ls.clear(), ls >> leftover)
                throw ParseError(lineno, "expected two vertex ids");
            continue; // blank or comment-only line
        }
        if (!(ls >> v)) throw ParseError(lineno, "expected two vertex ids");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
        if (u > 0xffffffffull || v > 0xffffffffull)
            throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop not allowed");
        SimpleGraph::Edge e{static_cast<VertexId>(std::min(u, v)),
                            static_cast<VertexId>(std::max(u, v))};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError(lineno, "duplicate edge");
        edges.push_back(e);
    }
    return SimpleGraph::from_edges(std::move(edges));
}

SimpleGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string write_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace laman
