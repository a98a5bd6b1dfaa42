#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "delp/knowledge_base.hpp"

namespace delp {

/// Least fixpoint of `rules` seeded with `facts`. `~p` is an ordinary
/// predicate here; contradiction is checked separately.
LiteralSet closure(const KnowledgeBase& kb, std::span<const RuleId> rules);
LiteralSet closure(const KnowledgeBase& kb, std::span<const RuleId> rules, const LiteralSet& facts);
LiteralSet closure(const KnowledgeBase& kb, std::initializer_list<std::span<const RuleId>> groups,
                   const LiteralSet& facts);

/// closure(Π ∪ extra ∪ facts), starting from the cached closure(Π).
LiteralSet strict_closure_with(const KnowledgeBase& kb, std::span<const RuleId> extra,
                               const LiteralSet& facts);

bool derives(const KnowledgeBase& kb, std::span<const RuleId> rules, LiteralId q);

/// True iff `s` holds some literal together with its complement.
bool has_complementary_pair(const KnowledgeBase& kb, const LiteralSet& s);
bool is_contradictory(const KnowledgeBase& kb, std::span<const RuleId> rules);

/// Π ∪ {s, q} is contradictory. Computed directly; KnowledgeBase::conflicting
/// caches the same relation.
bool conflicts(const KnowledgeBase& kb, LiteralId s, LiteralId q);

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Defeasible derivation tree: each node is a literal together with the
/// rule that concludes it, and one child per body literal.
struct DerivationTree {
  LiteralId root = 0;
  RuleId rule = 0;
  std::vector<DerivationTree> children;

  std::size_t size() const;
  /// Rules used anywhere in the tree, sorted and unique.
  std::vector<RuleId> rules() const;
};

/// All derivation trees for `q` over the program's rules. No literal repeats
/// on a root-to-leaf path, which keeps enumeration finite on cyclic programs.
std::vector<DerivationTree> derivation_trees(const KnowledgeBase& kb, LiteralId q,
                                             std::size_t max_trees = 10000);

}  // namespace delp
