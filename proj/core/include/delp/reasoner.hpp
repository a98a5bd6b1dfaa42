#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "delp/argument.hpp"
#include "delp/preference.hpp"
#include "delp/search_stats.hpp"

namespace delp {

struct Defeat {
  ArgumentId attacker = 0;
  LiteralId point = 0;
  DefeatClass kind = DefeatClass::kNone;
};

/// Per-query reasoning context: the argument store plus cached specificity
/// and defeat results. One instance per thread.
class Reasoner {
 public:
  explicit Reasoner(const KnowledgeBase& kb, PreferenceKind preference = PreferenceKind::kTopLayer,
                    std::size_t max_specificity_base = 20);

  const KnowledgeBase& kb() const { return *kb_; }
  ArgumentStore& arguments() { return store_; }
  const ArgumentStore& arguments() const { return store_; }
  PreferenceKind preference() const { return preference_; }

  bool more_specific(ArgumentId a1, ArgumentId a2);

  /// Compares `attacker` with the subargument of `target` concluding `point`.
  /// Throws std::invalid_argument when `point` is not an attack point.
  DefeatClass classify_defeat(ArgumentId attacker, ArgumentId target, LiteralId point);

  /// Defeaters of `target` attacking at `point`, in discovery order: the
  /// conflicting conclusions by textual rank, then arguments_for order.
  const std::vector<Defeat>& defeats_at(ArgumentId target, LiteralId point);

  /// Defeaters of `target` whose attack point lies in complement(bound).
  /// Each attacker appears once, at its first proper point if any, else its
  /// first blocking one; points among target's Co go before the others.
  /// Order is first discovery.
  std::vector<Defeat> find_defeaters(ArgumentId target, const LiteralSet& bound,
                                     SearchStats* stats = nullptr);
  /// find_defeaters without the copy; valid for the reasoner's lifetime.
  const std::vector<Defeat>& defeaters_within(ArgumentId target, const LiteralSet& bound,
                                              SearchStats* stats = nullptr);
  /// closure(Π ∪ facts), memoized.
  const LiteralSet& closure_with_strict(const LiteralSet& facts);
  /// closure(Π ∪ facts) holds no complementary pair; memoized.
  bool consistent_with_strict(const LiteralSet& facts);

 private:
  const KnowledgeBase* kb_;
  ArgumentStore store_;
  PreferenceKind preference_;
  std::size_t max_base_;
  std::map<ArgumentId, ActivationProfile> profiles_;
  std::map<std::pair<ArgumentId, ArgumentId>, bool> specific_;
  std::map<std::pair<ArgumentId, LiteralId>, std::vector<Defeat>> defeats_;
  struct DefeaterScan {
    std::vector<Defeat> defeaters;
    std::uint64_t points = 0;
    std::uint64_t arguments = 0;
  };
  std::map<std::pair<ArgumentId, LiteralSet>, DefeaterScan> scans_;
  std::unordered_map<LiteralSet, LiteralSet> closures_;
  std::unordered_map<LiteralSet, bool> consistent_;

  const ActivationProfile& profile(ArgumentId a);
};

}  // namespace delp
