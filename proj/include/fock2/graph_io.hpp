#pragma once

#include <string>

#include "json.hpp"

#include "fock2/crystal.hpp"
#include "fock2/text.hpp"

namespace fock2 {

// DOT form: vertices carry the canonical Fock-coordinate bipartition text,
// sl_e edges are labeled "i=<residue>", sl_infinity edges "k=<index>".
inline std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  out += "  // e=" + std::to_string(g.param.e()) + " s=" + std::to_string(g.param.s()) +
         " kind=" + (g.kind == CrystalKind::sle ? "sle" : "slinf") + " coords=fock\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + format_bipartition(g.vertices[v]) + "\"];\n";
  const char* key = g.kind == CrystalKind::sle ? "i=" : "k=";
  for (const CrystalEdge& edge : g.edges)
    out += "  v" + std::to_string(edge.from) + " -> v" + std::to_string(edge.to) + " [label=\"" +
           key + std::to_string(edge.label) + "\"];\n";
  out += "}\n";
  return out;
}

inline nlohmann::json to_json(const CrystalGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Bipartition& v : g.vertices) vertices.push_back(format_bipartition(v));
  nlohmann::json edges = nlohmann::json::array();
  const char* key = g.kind == CrystalKind::sle ? "i" : "k";
  for (const CrystalEdge& edge : g.edges)
    edges.push_back({{"from", edge.from}, {"to", edge.to}, {key, edge.label}});
  return {
      {"kind", g.kind == CrystalKind::sle ? "sle" : "slinf"},
      {"e", g.param.e()},
      {"s", g.param.s()},
      {"charge", {g.param.s1(), g.param.s2()}},
      {"n_max", g.n_max},
      {"coords", "fock"},
      {"vertices", vertices},
      {"edges", edges},
  };
}

}  // namespace fock2
