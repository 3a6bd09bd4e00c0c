#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sgkit/graph.hpp"

namespace sgkit {

// Edge-list text format:
//   # comment lines (anywhere)
//   p edge <n> <e>
//   e <u> <v>          (e lines, 1-based endpoints)

class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<std::string> warnings;
};

ParsedGraph parse_graph(const std::string& text);
ParsedGraph read_graph_file(const std::string& path);

// Canonical form: comments first, header with the deduplicated edge count, then
// edges (u < v) in lexicographic order. LF line endings.
std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace sgkit
