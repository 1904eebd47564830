#include "ternary/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ternary {

namespace {

// next content line, skipping blanks and '#' comments
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("read_graph: missing header");
    std::istringstream hs(line);
    int n, m;
    if (!(hs >> n >> m)) throw std::runtime_error("read_graph: bad header");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw std::runtime_error("read_graph: missing edge line");
        std::istringstream es_(line);
        int u, v;
        if (!(es_ >> u >> v)) throw std::runtime_error("read_graph: bad edge line");
        if (!(0 <= u && u < v && v < n)) throw std::runtime_error("read_graph: need 0 <= u < v < n");
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw std::runtime_error("read_hypergraph: missing header");
    std::istringstream hs(line);
    int n, m;
    if (!(hs >> n >> m)) throw std::runtime_error("read_hypergraph: bad header");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw std::runtime_error("read_hypergraph: missing edge line");
        std::istringstream es(line);
        int k;
        if (!(es >> k) || k < 1) throw std::runtime_error("read_hypergraph: bad edge size");
        std::vector<int> e(k);
        for (int j = 0; j < k; ++j)
            if (!(es >> e[j])) throw std::runtime_error("read_hypergraph: bad edge line");
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        out << e.size();
        for (int v : e) out << ' ' << v;
        out << '\n';
    }
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_hypergraph(in);
}

}  // namespace ternary
