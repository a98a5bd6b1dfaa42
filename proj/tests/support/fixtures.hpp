#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "delp/argument.hpp"
#include "delp/knowledge_base.hpp"
#include "delp/parser.hpp"

#ifndef DELP_TEST_DATA_DIR
#error "DELP_TEST_DATA_DIR must be defined"
#endif

namespace delp::test {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DELP_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const KnowledgeBase& engine() {
  static const KnowledgeBase kb = load_knowledge_base(read_data("engine.dlp"));
  return kb;
}

inline LiteralId lit(const KnowledgeBase& kb, const std::string& text) {
  const auto id = kb.find(parse_query(text));
  if (!id) throw std::runtime_error("literal not in program: " + text);
  return *id;
}

inline LiteralSet lits(const KnowledgeBase& kb, std::initializer_list<const char*> names) {
  LiteralSet s = kb.empty_set();
  for (const char* n : names) s.set(lit(kb, n));
  return s;
}

inline std::set<std::string> names(const KnowledgeBase& kb, const LiteralSet& s) {
  std::set<std::string> out;
  for (LiteralId l : kb.members(s)) out.insert(kb.name(l));
  return out;
}

/// The argument with exactly these rules (source text without the final
/// period) and conclusion, built through arguments_for.
inline ArgumentId arg(ArgumentStore& store, std::initializer_list<const char*> rules, const std::string& conclusion) {
  const KnowledgeBase& kb = store.kb();
  std::set<std::string> want(rules.begin(), rules.end());
  for (ArgumentId a : store.arguments_for(lit(kb, conclusion))) {
    const auto texts = store.rule_texts(a);
    if (std::set<std::string>(texts.begin(), texts.end()) == want) return a;
  }
  throw std::runtime_error("no such argument for " + conclusion);
}

// The worked example's arguments.
struct Engine {
  ArgumentId A, B, C, D, E, F;
};

inline Engine engine_args(ArgumentStore& s) {
  return Engine{
      arg(s, {"pump_fuel_ok -< sw1", "pump_oil_ok -< sw2", "fuel_ok -< pump_fuel_ok", "oil_ok -< pump_oil_ok",
              "engine_ok -< fuel_ok, oil_ok"},
          "engine_ok"),
      arg(s, {"pump_fuel_ok -< sw1", "low_speed -< sw2", "pump_clogged -< pump_fuel_ok, low_speed"}, "~fuel_ok"),
      arg(s, {"~low_speed -< sw2, sw3"}, "~low_speed"),
      arg(s, {"fuel_ok -< sw3"}, "fuel_ok"),
      arg(s, {"pump_fuel_ok -< sw1", "pump_oil_ok -< sw2", "fuel_ok -< pump_fuel_ok", "oil_ok -< pump_oil_ok",
              "~engine_ok -< fuel_ok, oil_ok, heat"},
          "~engine_ok"),
      arg(s, {"~oil_ok -< heat"}, "~oil_ok"),
  };
}

}  // namespace delp::test
