#ifndef TERNARY_IO_HPP
#define TERNARY_IO_HPP

#include <iosfwd>
#include <string>

#include "ternary/graph.hpp"
#include "ternary/hypergraph.hpp"

namespace ternary {

// Text graph format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Blank lines and '#' comment lines are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);

// Hypergraph format: "n m", then m lines "k v_1 ... v_k".
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph_file(const std::string& path);

}  // namespace ternary

#endif
