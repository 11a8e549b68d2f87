#include "dd2/graph_io.hpp"

#include <charconv>
#include <limits>
#include <unordered_map>
#include <vector>

#include "dd2/error.hpp"
#include "text_util.hpp"

namespace dd2 {

namespace {

struct RawDocument {
  std::size_t order = 0;
  EdgeList edges;
  std::vector<std::size_t> edge_line;
};

RawDocument parse_document(std::string_view text) {
  detail::LineReader reader(text);
  RawDocument doc;

  auto header = reader.next_nonblank();
  if (!header) throw ParseError(1, "missing header \"n m\"");
  const auto head = detail::parse_uints(*header, reader.line_number());
  if (head.size() != 2) throw ParseError(reader.line_number(), "header must be \"n m\"");
  if (head[0] > std::numeric_limits<Vertex>::max()) {
    throw ParseError(reader.line_number(), "vertex count too large");
  }
  doc.order = head[0];
  const std::size_t m = head[1];
  doc.edges.reserve(m);
  doc.edge_line.reserve(m);

  for (std::size_t i = 0; i < m; ++i) {
    auto line = reader.next_nonblank();
    if (!line) {
      throw ParseError(reader.line_number(), "expected " + std::to_string(m) + " edges, found " +
                                                 std::to_string(i));
    }
    const auto ids = detail::parse_uints(*line, reader.line_number());
    if (ids.size() != 2) throw ParseError(reader.line_number(), "edge line must be \"u v\"");
    if (ids[0] >= doc.order || ids[1] >= doc.order) {
      throw ParseError(reader.line_number(), "vertex id out of range 0.." +
                                                 std::to_string(doc.order == 0 ? 0 : doc.order - 1));
    }
    if (ids[0] == ids[1]) throw ParseError(reader.line_number(), "loop at vertex " + std::to_string(ids[0]));
    doc.edges.push_back(make_edge(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1])));
    doc.edge_line.push_back(reader.line_number());
  }
  if (reader.next_nonblank()) throw ParseError(reader.line_number(), "unexpected content after the edge list");
  return doc;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  RawDocument doc = parse_document(text);
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(doc.edges.size());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const Edge e = doc.edges[i];
    const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    if (!seen.emplace(key, i).second) {
      throw ParseError(doc.edge_line[i], "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  return Graph(doc.order, doc.edges);
}

MultiGraph parse_multigraph(std::string_view text) {
  RawDocument doc = parse_document(text);
  return MultiGraph(doc.order, std::move(doc.edges));
}

namespace {

std::string edges_to_text(std::size_t order, const EdgeList& edges) {
  std::string out = std::to_string(order) + ' ' + std::to_string(edges.size()) + '\n';
  for (const Edge& e : edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string to_text(const Graph& g) { return edges_to_text(g.order(), g.edges()); }

std::string to_text(const MultiGraph& h) { return edges_to_text(h.order(), h.edges()); }

}  // namespace dd2
