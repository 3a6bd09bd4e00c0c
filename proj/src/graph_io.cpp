#include "sgkit/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace sgkit {

namespace {

long long parse_int(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw GraphParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw GraphParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<Graph> graph;
  long long declared_edges = 0;
  long long seen_edges = 0;
  std::vector<std::string> comments;
  std::vector<std::string> warnings;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream fields(raw);
    std::string kind;
    if (!(fields >> kind)) continue;
    if (kind.front() == '#') {
      const auto hash = raw.find('#');
      std::string body = raw.substr(hash + 1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      comments.push_back(std::move(body));
      continue;
    }
    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);

    if (kind == "p") {
      if (graph) throw GraphParseError(line_no, "duplicate header");
      if (rest.size() != 3 || rest[0] != "edge") {
        throw GraphParseError(line_no, "header must be 'p edge <n> <e>'");
      }
      const long long n = parse_int(rest[1], line_no);
      declared_edges = parse_int(rest[2], line_no);
      if (n < 1 || n > 10'000'000) throw GraphParseError(line_no, "vertex count out of range");
      if (declared_edges < 0) throw GraphParseError(line_no, "negative edge count");
      graph.emplace(static_cast<int>(n));
    } else if (kind == "e") {
      if (!graph) throw GraphParseError(line_no, "edge before header");
      if (rest.size() != 2) throw GraphParseError(line_no, "edge line must be 'e <u> <v>'");
      const long long u = parse_int(rest[0], line_no);
      const long long v = parse_int(rest[1], line_no);
      const long long n = graph->vertex_count();
      if (u < 1 || v < 1 || u > n || v > n) {
        throw GraphParseError(line_no, "vertex index out of range");
      }
      if (u == v) throw GraphParseError(line_no, "self-loop at vertex " + std::to_string(u));
      ++seen_edges;
      if (!graph->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
        warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                           std::to_string(u) + "-" + std::to_string(v) + " ignored");
      }
    } else {
      throw GraphParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!graph) throw GraphParseError(line_no, "missing 'p edge' header");
  if (seen_edges != declared_edges) {
    throw GraphParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                       " edges but " + std::to_string(seen_edges) + " were given");
  }
  return ParsedGraph{std::move(*graph), std::move(comments), std::move(warnings)};
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + '\n';
  out += "p edge " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + ' ' + std::to_string(v + 1) + '\n';
  }
  return out;
}

}  // namespace sgkit
