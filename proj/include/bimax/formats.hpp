#ifndef BIMAX_FORMATS_HPP
#define BIMAX_FORMATS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "bimax/graph.hpp"

namespace bimax {

enum class GraphFormat { edge_list, biadjacency, dot };

// Maps the CLI spelling ("edge-list", "biadjacency", "dot") to the enum.
GraphFormat parse_format_name(std::string_view name);
std::string format_name(GraphFormat f);

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Deterministic text form of a graph.
//
//   edge-list:   header "n=<n> m=<m> k=<x_size>", then one "u v" line per
//                edge with u < k <= v, lines sorted by (u, v). X vertices
//                are labeled 0..k-1 and Y vertices k..n-1.
//   biadjacency: the same header, then y_size lines of x_size '0'/'1'
//                characters (row y, column x).
//   dot:         an undirected graph with subgraph clusters X and Y and
//                vertex names x0.., y0...
//
// All outputs use LF line endings and round-trip through parse().
std::string serialize(const BipartiteGraph& g, GraphFormat format);

// Inverse of serialize for each format. Throws ParseError on malformed
// input, out-of-range vertices, duplicate edges, or a header edge count
// that disagrees with the edges present.
BipartiteGraph parse(std::string_view text, GraphFormat format);

}  // namespace bimax

#endif
