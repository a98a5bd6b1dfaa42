#pragma once

#include <string>
#include <vector>

#include "delp/literal.hpp"

namespace delp {

enum class RuleKind { kStrict, kDefeasible };

/// `head <- body` (strict) or `head -< body` (defeasible).
/// A strict rule with an empty body is a fact, a defeasible one a presumption.
struct Rule {
  Literal head;
  std::vector<Literal> body;  // distinct literals, in source order
  RuleKind kind = RuleKind::kStrict;

  bool is_strict() const { return kind == RuleKind::kStrict; }
  bool is_defeasible() const { return kind == RuleKind::kDefeasible; }
  bool is_fact() const { return is_strict() && body.empty(); }
  bool is_presumption() const { return is_defeasible() && body.empty(); }
  bool is_ground() const;

  /// Same head, kind and body *set*; body order is irrelevant.
  bool same_as(const Rule& other) const;
};

/// Canonical text: `h.` for facts, `h -< true.` for presumptions,
/// otherwise `h <- b1, b2.` / `h -< b1, b2.`
std::string to_string(const Rule& r);

}  // namespace delp
