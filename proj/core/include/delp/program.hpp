#pragma once

#include <set>
#include <string>
#include <vector>

#include "delp/rule.hpp"

namespace delp {

/// A defeasible logic program (Π, Δ) plus the constants it mentions.
///
/// Rules keep their first-occurrence order within each kind; that order is
/// what "textual" defeater ordering refers to (Π first, then Δ).
struct Program {
  std::vector<Rule> strict_rules;
  std::vector<Rule> defeasible_rules;
  std::set<std::string> constants;

  /// Adds `r` unless an identical rule is already present. Returns false on
  /// a duplicate. Constants occurring in `r` are recorded.
  bool add_rule(Rule r);

  bool is_ground() const;
  std::size_t size() const { return strict_rules.size() + defeasible_rules.size(); }
};

/// Pretty-prints a program in the `.dlp` syntax, Π before Δ, one rule per line.
std::string to_text(const Program& p);

}  // namespace delp
