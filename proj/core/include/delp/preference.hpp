#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "delp/argument.hpp"
#include "delp/options.hpp"

namespace delp {

enum class DefeatClass { kProper, kBlocking, kNone };

std::string_view to_string(DefeatClass d);

/// The side of a specificity comparison: which rules are activated and which
/// literals may form activation sets.
struct ActivationProfile {
  std::vector<RuleId> rules;
  LiteralId conclusion = 0;
  LiteralSet base;
};

/// Literal base and activated rules for `a` under the given comparator.
///
/// generalized: all of `a`'s rules; base = every literal of a derivation of
///   the conclusion from Π ∪ a.
/// top-layer: only rules whose head is needed, next to the other heads of
///   the argument taken as facts, to reach the conclusion through Π; base = conclusion, the bodies of those rules
///   and the strict-rule support above them.
ActivationProfile activation_profile(const ArgumentStore& store, ArgumentId a, PreferenceKind kind);

/// Activation-set comparison. With Π_G the strict rules with a body and H
/// ranging over subsets of both bases: every H that activates `a1`
/// non-trivially also activates `a2`, and some H activates `a2`
/// non-trivially but not `a1`. Throws ResourceLimitExceeded when the joint
/// base has more than `max_base` literals.
bool strictly_more_specific(const KnowledgeBase& kb, const ActivationProfile& a1,
                            const ActivationProfile& a2, std::size_t max_base = 20);

}  // namespace delp
