// io.hpp -- text and JSON renderings: tableaux, column configurations,
// growth tables, automata (DOT and JSON).

#pragma once

#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psmon/monoid.hpp"
#include "psmon/nfa.hpp"
#include "psmon/tableau.hpp"
#include "psmon/words.hpp"

namespace psmon {

inline std::string format_columns(const std::vector<Column>& columns) {
  if (columns.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) {
      out += '|';
    }
    out += format_word(columns[i]);
  }
  return out;
}

inline std::string format_shape(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(s[i]);
  }
  return out + ")";
}

// Bottom-aligned grid, one box per cell.  With color enabled the bottom row
// is shown in bold.
inline std::string tableau_to_ascii(const Tableau& t, bool color = false) {
  if (t.empty()) {
    return "(empty tableau)\n";
  }
  std::size_t max_height = 0;
  std::size_t cell = 1;
  for (const Column& c : t.columns) {
    max_height = std::max(max_height, c.size());
    for (Symbol a : c) {
      cell = std::max(cell, std::to_string(a).size());
    }
  }
  std::ostringstream os;
  for (std::size_t row = max_height; row-- > 0;) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const Column& c = t.columns[i];
      std::string text;
      if (row < c.size()) {
        // row counts from the bottom; entries are stored top-to-bottom.
        text = std::to_string(c[c.size() - 1 - row]);
      }
      while (text.size() < cell) {
        text = ' ' + text;
      }
      if (i > 0) {
        os << ' ';
      }
      if (color && row == 0) {
        os << "\033[1m" << text << "\033[0m";
      } else {
        os << text;
      }
    }
    os << '\n';
  }
  return os.str();
}

inline bool ansi_enabled() { return std::getenv("NO_COLOR") == nullptr; }

inline nlohmann::json tableau_to_json(const Tableau& t) {
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : t.columns) {
    cols.push_back(c);
  }
  return nlohmann::json{{"variant", variant_name(t.variant)},
                        {"columns", cols}};
}

inline Tableau tableau_from_json(const nlohmann::json& j) {
  Tableau t;
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "left") {
    t.variant = Variant::Left;
  } else if (variant == "right") {
    t.variant = Variant::Right;
  } else {
    throw std::invalid_argument("variant must be \"left\" or \"right\"");
  }
  for (const auto& col : j.at("columns")) {
    t.columns.push_back(col.get<Column>());
  }
  if (!is_valid_tableau(t)) {
    throw std::invalid_argument("JSON does not describe a valid tableau");
  }
  return t;
}

inline nlohmann::json growth_to_json(const GrowthTable& g) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [len, count] : g.entries) {
    entries.push_back(nlohmann::json{{"max_len", len}, {"count", count}});
  }
  return nlohmann::json{{"entries", entries}};
}

inline GrowthTable growth_from_json(const nlohmann::json& j) {
  GrowthTable g;
  for (const auto& e : j.at("entries")) {
    g.entries.emplace_back(e.at("max_len").get<std::size_t>(),
                           e.at("count").get<std::size_t>());
  }
  return g;
}

inline std::string growth_to_csv(const GrowthTable& g) {
  std::string out = "max_len,count\n";
  for (const auto& [len, count] : g.entries) {
    out += std::to_string(len) + "," + std::to_string(count) + "\n";
  }
  return out;
}

inline std::string growth_to_table(const GrowthTable& g) {
  std::string out = "  N   elements\n";
  for (const auto& [len, count] : g.entries) {
    std::string n = std::to_string(len);
    std::string c = std::to_string(count);
    while (n.size() < 3) {
      n = ' ' + n;
    }
    out += n + "   " + c + "\n";
  }
  return out;
}

using SymbolLabeler = std::function<std::string(std::uint32_t)>;

inline nlohmann::json nfa_to_json(const Nfa& a, const SymbolLabeler& label) {
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto& t : a.transitions) {
    transitions.push_back(nlohmann::json{
        {"from", t.from},
        {"label", t.symbol == Nfa::kEpsilon
                      ? "eps"
                      : label(static_cast<std::uint32_t>(t.symbol))},
        {"to", t.to}});
  }
  nlohmann::json alphabet = nlohmann::json::array();
  for (std::uint32_t s = 0; s < a.alphabet_size; ++s) {
    alphabet.push_back(label(s));
  }
  return nlohmann::json{{"states", a.num_states},
                        {"alphabet", alphabet},
                        {"transitions", transitions},
                        {"initial", a.initial},
                        {"accepting", a.accepting}};
}

// Rebuilds an automaton from the JSON form; labels are resolved against the
// emitted alphabet list.
inline Nfa nfa_from_json(const nlohmann::json& j) {
  Nfa a;
  a.num_states = j.at("states").get<std::uint32_t>();
  std::map<std::string, std::uint32_t> symbol_of;
  std::uint32_t next = 0;
  for (const auto& s : j.at("alphabet")) {
    symbol_of.emplace(s.get<std::string>(), next++);
  }
  a.alphabet_size = next;
  for (const auto& t : j.at("transitions")) {
    const std::string label = t.at("label").get<std::string>();
    const std::int32_t sym =
        label == "eps" ? Nfa::kEpsilon
                       : static_cast<std::int32_t>(symbol_of.at(label));
    a.add_transition(t.at("from").get<std::uint32_t>(), sym,
                     t.at("to").get<std::uint32_t>());
  }
  a.initial = j.at("initial").get<std::vector<std::uint32_t>>();
  a.accepting = j.at("accepting").get<std::vector<std::uint32_t>>();
  return a;
}

inline std::string nfa_to_dot(const Nfa& a, const SymbolLabeler& label,
                              const std::string& name = "automaton") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::uint32_t q : a.accepting) {
    os << "  " << q << " [shape=doublecircle];\n";
  }
  for (std::size_t i = 0; i < a.initial.size(); ++i) {
    os << "  start" << i << " [shape=point];\n";
    os << "  start" << i << " -> " << a.initial[i] << ";\n";
  }
  for (const auto& t : a.transitions) {
    os << "  " << t.from << " -> " << t.to << " [label=\"";
    if (t.symbol == Nfa::kEpsilon) {
      os << "eps";
    } else {
      os << label(static_cast<std::uint32_t>(t.symbol));
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace psmon
