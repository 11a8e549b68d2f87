// Structured text documents: one "key values..." line per field, vertex
// sets as sorted id lists, edges one per line.

#include <string>

#include "dd2/graph_io.hpp"
#include "dd2/minimal.hpp"
#include "dd2/optimize.hpp"
#include "dd2/recognition.hpp"

namespace dd2 {

namespace {

template <class Ids>
std::string line(const std::string& key, const Ids& ids) {
  std::string out = key;
  for (auto id : ids) {
    out += ' ';
    out += std::to_string(id);
  }
  out += '\n';
  return out;
}

std::string edge_lines(const std::string& key, const EdgeList& edges) {
  std::string out;
  for (const Edge& e : edges) out += key + ' ' + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_text(const DD2Pair& pair) { return line("d", pair.d) + line("d2", pair.d2); }

std::string to_text(const DD2Verdict& verdict) {
  std::string out = std::string("is_dd2 ") + boolean(verdict.is_dd2) + '\n';
  if (verdict.blocking_witness) out += "blocking_witness " + std::to_string(*verdict.blocking_witness) + '\n';
  if (verdict.pair) out += to_text(*verdict.pair);
  return out;
}

std::string to_text(const CertifiedDomReport& report) {
  return std::string("dominating ") + boolean(report.is_dominating) + "\ncertified " +
         boolean(report.is_certified) + '\n' + line("shadowed", report.shadowed);
}

std::string to_text(const CoronaDecomposition& decomposition) {
  return line("h_vertex", decomposition.h_vertex) + line("edge_vertex", decomposition.edge_vertex) +
         "h_multigraph\n" + to_text(decomposition.h);
}

std::string to_text(const MinimalVerdict& verdict) {
  std::string out = std::string("is_minimal ") + boolean(verdict.is_minimal) + '\n';
  out += "components " + std::to_string(verdict.components.size()) + '\n';
  for (std::size_t i = 0; i < verdict.components.size(); ++i) {
    const auto& c = verdict.components[i];
    out += "component " + std::to_string(i) + '\n';
    out += line("vertices", c.vertices);
    if (const auto* star = std::get_if<shape::Star>(&c.shape)) {
      out += "shape star " + std::to_string(star->leaves) + '\n';
    } else if (std::holds_alternative<shape::Cycle4>(c.shape)) {
      out += "shape c4\n";
    } else if (const auto* sub = std::get_if<shape::SubdivisionOfCorona>(&c.shape)) {
      out += "shape subdivided-corona\n" + to_text(sub->decomposition);
    } else {
      out += "shape none\nreason " + std::get<shape::NotMinimal>(c.shape).reason + '\n';
    }
  }
  return out;
}

std::string to_text(const GammaGamma2Result& result) {
  return "value " + std::to_string(result.value) + '\n' + to_text(result.witness);
}

std::string to_text(const SubdivisionPlan& plan) {
  return "count " + std::to_string(plan.count) + '\n' + line("blocking_set", plan.blocking_set) +
         edge_lines("matching", plan.matching) + "matching_bound " + std::to_string(plan.matching_bound) + '\n' +
         line("cover", plan.cover) + edge_lines("subdivide", plan.subdivide);
}

std::string to_text(const EdgeAdditionResult& result) {
  return "k " + std::to_string(result.k) + '\n' + edge_lines("add", result.edges);
}

std::string to_text(const SpanningSearchResult& result) {
  return std::string("objective ") + (result.objective == Objective::min ? "min" : "max") + "\nsize " +
         std::to_string(result.size) + '\n' + edge_lines("edge", result.subgraph);
}

}  // namespace dd2
