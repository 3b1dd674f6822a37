#ifndef PLACEMENT_TEXT_FORMAT_HPP
#define PLACEMENT_TEXT_FORMAT_HPP

#include "placement/btcl.hpp"
#include "placement/graph.hpp"

#include <string>
#include <string_view>

namespace placement {

/// Parse failure with a 1-based source location.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Graph format:
//   p <n>          vertex count (first non-comment line)
//   e <u> <v>      undirected edge, 0-based
//   c <v> L|R      pre-colored vertex
//   # ...          comment
ColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const ColoredGraph& g);

// Machine format:
//   p <n>
//   a <tail> <head> L|R 1|2    arc in initial orientation
//   g <arc-index>              goal arc
//   t <v> <kind>               optional vertex kind annotation
//
// Serializing a machine in mid-game appends `f <arc>` for flipped arcs and
// `s <passes>` for the pass counter; the parser rejects those lines.
BtclMachine parse_machine(std::string_view text);
std::string serialize_machine(const BtclMachine& m);

}  // namespace placement

#endif
