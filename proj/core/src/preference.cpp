#include "delp/preference.hpp"

#include <algorithm>
#include <deque>

#include "delp/derivation.hpp"

namespace delp {

std::string_view to_string(DefeatClass d) {
  switch (d) {
    case DefeatClass::kProper: return "proper";
    case DefeatClass::kBlocking: return "blocking";
    case DefeatClass::kNone: return "none";
  }
  return "none";
}

namespace {

// Backward walk from the conclusion over usable rules: strict rules whose
// body holds in `reach`, plus the `active` defeasible rules.
LiteralSet walk_base(const KnowledgeBase& kb, LiteralId from, const LiteralSet& reach,
                     const std::vector<RuleId>& active) {
  LiteralSet base = kb.empty_set();
  std::deque<LiteralId> todo{from};
  base.set(from);
  while (!todo.empty()) {
    const LiteralId x = todo.front();
    todo.pop_front();
    for (RuleId rid : kb.rules_with_head(x)) {
      const GroundRule& r = kb.rule(rid);
      const bool usable = r.is_strict() ? r.body_set.is_subset_of(reach)
                                        : std::binary_search(active.begin(), active.end(), rid);
      if (!usable) continue;
      for (LiteralId b : r.body) {
        if (!base.test(b)) {
          base.set(b);
          todo.push_back(b);
        }
      }
    }
  }
  return base;
}

}  // namespace

ActivationProfile activation_profile(const ArgumentStore& store, ArgumentId id, PreferenceKind kind) {
  const KnowledgeBase& kb = store.kb();
  const Argument& a = store[id];
  ActivationProfile p;
  p.conclusion = a.conclusion;

  if (kind == PreferenceKind::kGeneralized) {
    p.rules = a.rules;
  } else {
    for (RuleId r : a.rules) {
      LiteralSet others = a.co;
      others.reset(kb.rule(r).head);
      if (!strict_closure_with(kb, {}, others).test(a.conclusion)) p.rules.push_back(r);
    }
  }
  p.base = walk_base(kb, a.conclusion, a.commitment, p.rules);
  return p;
}

bool strictly_more_specific(const KnowledgeBase& kb, const ActivationProfile& a1,
                            const ActivationProfile& a2, std::size_t max_base) {
  const auto lits = kb.members(a1.base | a2.base);
  if (lits.size() > max_base) {
    throw ResourceLimitExceeded("specificity literal base has " + std::to_string(lits.size()) +
                                " literals, cap is " + std::to_string(max_base));
  }
  const auto pi_g = kb.strict_inference_rules();
  bool witness = false;
  LiteralSet h = kb.empty_set();
  const std::uint64_t subsets = std::uint64_t{1} << lits.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    h.reset();
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (mask >> i & 1U) h.set(lits[i]);
    }
    const LiteralSet trivial = closure(kb, pi_g, h);
    const bool act1 = closure(kb, {pi_g, std::span<const RuleId>(a1.rules)}, h).test(a1.conclusion);
    const bool act2 = closure(kb, {pi_g, std::span<const RuleId>(a2.rules)}, h).test(a2.conclusion);
    if (act1 && !trivial.test(a1.conclusion) && !act2) return false;
    if (act2 && !trivial.test(a2.conclusion) && !act1) witness = true;
  }
  return witness;
}

}  // namespace delp
