#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "delp/knowledge_base.hpp"
#include "delp/options.hpp"

namespace delp {

using ArgumentId = std::uint32_t;

/// ⟨A, h⟩: a minimal, Π-consistent set of ground defeasible rules deriving h.
struct Argument {
  std::vector<RuleId> rules;  // sorted ids of defeasible rules
  LiteralId conclusion = 0;
  LiteralSet co;              // heads of `rules`
  LiteralSet commitment;      // closure(Π ∪ rules), equal to closure(Π ∪ co)

  bool is_strict() const { return rules.empty(); }
};

class ArgumentationLine;

/// Interning store for arguments of one knowledge base.
///
/// Arguments are identified by (rules, conclusion); ids are stable for the
/// lifetime of the store. Not thread-safe: use one store per worker.
class ArgumentStore {
 public:
  explicit ArgumentStore(const KnowledgeBase& kb, std::size_t max_support_sets = 200000);

  const KnowledgeBase& kb() const { return *kb_; }
  const Argument& operator[](ArgumentId id) const { return args_[id]; }
  std::size_t size() const { return args_.size(); }

  /// Interns ⟨rules, conclusion⟩ without checking the argument conditions.
  ArgumentId intern(std::vector<RuleId> rules, LiteralId conclusion);
  std::optional<ArgumentId> find(const std::vector<RuleId>& rules, LiteralId conclusion) const;

  /// Every argument for `q`, ordered by rule ids. Facts yield the single
  /// argument with an empty rule set.
  const std::vector<ArgumentId>& arguments_for(LiteralId q);

  /// Minimal subset of `a`'s rules deriving `q`. Throws std::invalid_argument
  /// when Π ∪ a does not derive `q`.
  ArgumentId subargument(ArgumentId a, LiteralId q);

  /// `<{r1; r2}, h>` using the rules' source text.
  std::string describe(ArgumentId id) const;
  std::vector<std::string> rule_texts(ArgumentId id) const;

 private:
  using RuleSet = std::vector<RuleId>;
  std::vector<RuleSet> supports(LiteralId q, LiteralSet& path, bool& blocked);

  const KnowledgeBase* kb_;
  std::size_t max_support_sets_;
  std::vector<Argument> args_;
  std::map<std::pair<RuleSet, LiteralId>, ArgumentId> index_;
  std::unordered_map<LiteralId, std::vector<ArgumentId>> by_conclusion_;
  std::unordered_map<LiteralId, std::vector<RuleSet>> support_memo_;
  std::map<std::pair<ArgumentId, LiteralId>, ArgumentId> sub_memo_;
};

/// Outcome of re-checking the four conditions an argument must satisfy.
struct ArgumentCheck {
  bool derives = false;     // Π ∪ A ⊢ h
  bool consistent = false;  // Π ∪ A non-contradictory
  bool minimal = false;     // no single rule can be dropped
  bool co_exact = false;    // co == heads(A)

  bool ok() const { return derives && consistent && minimal && co_exact; }
};

ArgumentCheck verify_argument(const KnowledgeBase& kb, const Argument& a);

/// Commit(S): closure(Π ∪ ⋃ Co(a) for a in S).
LiteralSet commitment_set(const ArgumentStore& store, std::span<const ArgumentId> args);

/// Literals of `target` at which `attacker` counterargues it: conclusions q
/// of target's subarguments with Π ∪ {conclusion(attacker), q} contradictory.
/// Strict-only conclusions (closure(Π)) are never attack points.
LiteralSet counterargues(const ArgumentStore& store, ArgumentId attacker, ArgumentId target);

/// Literals a non-strict subargument of `a` can conclude:
/// closure(Π ∪ a) ∖ closure(Π).
LiteralSet attackable_points(const ArgumentStore& store, ArgumentId a);

/// Upper bound on where defeaters of `a` can attack, expressed (as usual) as
/// complemented literals:
///   commit           complement(Commit(a))
///   co               complement(Co(a))
///   co_minus_shared  complement(Co(a) ∖ SharedBasis(line, |line| - 1))
/// `line` is required for co_minus_shared (std::invalid_argument otherwise).
LiteralSet attack_bound(const ArgumentStore& store, ArgumentId a, const ArgumentationLine* line,
                        AttackBound mode);

}  // namespace delp
