#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rwg/encodings.hpp"
#include "rwg/reduced_words.hpp"
#include "rwg/word_graph.hpp"

namespace rwg {

inline std::string label(const Word& w) { return format_word(w); }
inline std::string label(const EncodedWord& w) { return format_encoded(w); }

template <typename Payload>
std::string label(const std::vector<Payload>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ',';
    out += label(members[i]);
  }
  return out + "}";
}

inline nlohmann::ordered_json to_json_value(const Word& w) { return format_word(w); }
inline nlohmann::ordered_json to_json_value(const EncodedWord& w) { return format_encoded(w); }

template <typename Payload>
nlohmann::ordered_json to_json_value(const std::vector<Payload>& members) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : members) arr.push_back(to_json_value(m));
  return arr;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// DOT text. Commutation edges are plain lines; long braid edges are drawn
/// double.
template <typename Payload>
std::string export_dot(const LabeledGraph<Payload>& g, const std::string& name = "G") {
  std::string out = "graph " + detail::dot_quote(name) + " {\n";
  for (const auto& v : g.vertices()) out += "  " + detail::dot_quote(label(v)) + ";\n";
  for (const auto& e : g.edges()) {
    out += "  " + detail::dot_quote(label(g.vertex(e.u))) + " -- " + detail::dot_quote(label(g.vertex(e.v)));
    if (e.kind == EdgeKind::LongBraid) out += " [color=\"black:invis:black\", penwidth=1.5]";
    out += ";\n";
  }
  return out + "}\n";
}

/// {"vertices":[...], "edges":[[u, v, "C"|"B"], ...]} with vertices in graph
/// order and edges sorted by endpoint ids.
template <typename Payload>
nlohmann::ordered_json export_json(const LabeledGraph<Payload>& g) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) out["vertices"].push_back(to_json_value(v));
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    out["edges"].push_back(nlohmann::ordered_json::array({e.u, e.v, std::string(1, kind_letter(e.kind))}));
  return out;
}

}  // namespace rwg
