#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "hurwitz/tropical/coloring.hpp"
#include "hurwitz/tropical/monodromy_graph.hpp"

namespace hurwitz {

/// {vertices, edges:[{from,to,weight,color}], in_ends, out_ends, genus}.
/// Vertices are 1-based; an end has null on its leaf side.
inline nlohmann::json graph_to_json(const MonodromyGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(v + 1);
  j["edges"] = nlohmann::json::array();
  std::vector<int> in_ends;
  std::vector<int> out_ends;
  for (const auto& e : g.edges()) {
    nlohmann::json je;
    je["from"] = e.is_in_end() ? nlohmann::json(nullptr) : nlohmann::json(e.from + 1);
    je["to"] = e.is_out_end() ? nlohmann::json(nullptr) : nlohmann::json(e.to + 1);
    je["weight"] = e.weight;
    je["color"] = color_name(e.color);
    j["edges"].push_back(je);
  }
  const Partition in = g.in_weights();
  const Partition out = g.out_weights();
  for (int w : in.parts()) in_ends.push_back(w);
  for (int w : out.parts()) out_ends.push_back(w);
  j["in_ends"] = in_ends;
  j["out_ends"] = out_ends;
  j["genus"] = g.genus();
  return j;
}

inline nlohmann::json graph_class_to_json(const GraphClass& c) {
  nlohmann::json j = graph_to_json(c.canonical);
  j["o"] = c.orderings.str();
  j["m_tilde"] = multiplicity_tilde(c.canonical).to_string();
  return j;
}

/// DOT digraph; style follows color, label is the weight.
inline std::string graph_to_dot(const MonodromyGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v + 1 << " [shape=point];\n";
  int leaf = 0;
  for (const auto& e : g.edges()) {
    std::string from = "v" + std::to_string(e.from + 1);
    std::string to = "v" + std::to_string(e.to + 1);
    if (e.is_in_end()) {
      from = "in" + std::to_string(++leaf);
      out << "  " << from << " [shape=none,label=\"\"];\n";
    }
    if (e.is_out_end()) {
      to = "out" + std::to_string(++leaf);
      out << "  " << to << " [shape=none,label=\"\"];\n";
    }
    const char* style = e.color == EdgeColor::dashed ? "dashed" : (e.color == EdgeColor::bold ? "bold" : "solid");
    out << "  " << from << " -> " << to << " [label=\"" << e.weight << "\",style=" << style << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hurwitz
