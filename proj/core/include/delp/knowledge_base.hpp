#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "delp/literal.hpp"
#include "delp/program.hpp"

namespace delp {

using LiteralId = std::uint32_t;
using RuleId = std::uint32_t;

/// Dense set of literal ids, sized to KnowledgeBase::literal_count().
using LiteralSet = boost::dynamic_bitset<>;

struct GroundRule {
  LiteralId head = 0;
  std::vector<LiteralId> body;
  LiteralSet body_set;
  RuleKind kind = RuleKind::kStrict;

  bool is_strict() const { return kind == RuleKind::kStrict; }
  bool is_defeasible() const { return kind == RuleKind::kDefeasible; }
};

/// Raised when Π alone derives a literal and its complement.
class ContradictoryStrictRules : public std::runtime_error {
 public:
  ContradictoryStrictRules(std::string literal, std::string complement);

  const std::string& literal() const { return literal_; }
  const std::string& complement() const { return complement_; }

 private:
  std::string literal_;
  std::string complement_;
};

/// A ground program with literals and rules interned to dense ids.
///
/// Rule ids follow the textual order of the source program: Π first, then Δ.
/// Every literal's complement is interned as well. Instances are immutable
/// once built and may be shared across threads.
class KnowledgeBase {
 public:
  /// `ground` must be variable-free (see ground_program). Throws
  /// ContradictoryStrictRules when Π is contradictory.
  explicit KnowledgeBase(Program ground);

  const Program& program() const { return program_; }

  std::size_t literal_count() const { return literals_.size(); }
  const Literal& literal(LiteralId id) const { return literals_[id]; }
  std::string name(LiteralId id) const { return to_string(literals_[id]); }
  std::optional<LiteralId> find(const Literal& l) const;
  LiteralId complement(LiteralId id) const { return complement_[id]; }

  /// True when the atom of `l` (ignoring sign) occurs anywhere in the program.
  bool atom_occurs(const Literal& l) const;

  std::size_t rule_count() const { return rules_.size(); }
  const GroundRule& rule(RuleId id) const { return rules_[id]; }
  std::string rule_text(RuleId id) const;
  std::span<const RuleId> strict_rules() const { return strict_; }
  std::span<const RuleId> defeasible_rules() const { return defeasible_; }
  /// Π_G: strict rules with a non-empty body.
  std::span<const RuleId> strict_inference_rules() const { return strict_inference_; }
  std::span<const RuleId> rules_with_head(LiteralId l) const { return by_head_[l]; }

  /// closure(Π).
  const LiteralSet& strict_closure() const { return strict_closure_; }

  /// { s : Π ∪ {s, q} is contradictory }.
  const LiteralSet& conflicting(LiteralId q) const { return conflicting_[q]; }

  /// Position of the first rule whose head is `l`; literals that head no rule
  /// rank after all rules, in id order.
  std::size_t textual_rank(LiteralId l) const { return rank_[l]; }

  LiteralSet empty_set() const { return LiteralSet(literals_.size()); }
  LiteralSet make_set(std::span<const LiteralId> ids) const;
  /// { complement(l) : l ∈ s }
  LiteralSet complement_of(const LiteralSet& s) const;
  std::vector<LiteralId> members(const LiteralSet& s) const;
  /// `{a, ~b}` with members in textual-rank order.
  std::string set_text(const LiteralSet& s) const;

 private:
  LiteralId intern(const Literal& l);

  Program program_;
  std::vector<Literal> literals_;
  std::unordered_map<Literal, LiteralId, LiteralHash> index_;
  std::vector<LiteralId> complement_;
  std::vector<GroundRule> rules_;
  std::vector<RuleId> strict_;
  std::vector<RuleId> defeasible_;
  std::vector<RuleId> strict_inference_;
  std::vector<std::vector<RuleId>> by_head_;
  std::vector<std::size_t> rank_;
  LiteralSet strict_closure_;
  std::vector<LiteralSet> conflicting_;
};

/// Parses, grounds and interns a `.dlp` source.
KnowledgeBase load_knowledge_base(std::string_view text, std::vector<std::string>* warnings = nullptr);

}  // namespace delp
