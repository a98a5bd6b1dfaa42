#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace delp {

/// Order in which sibling defeaters are expanded.
enum class Ordering { kTextual, kSharedBasis };

/// Which literal set bounds the search for attack points on an argument.
/// Each mode's point set is contained in the previous one's.
enum class AttackBound { kCommit, kCo, kCoMinusShared };

/// Score used by shared-basis ordering: Co of the attacked argument, or Co of
/// the candidate defeater.
enum class EvalMetric { kAttackedSurface, kDefeaterSurface };

/// Comparison used to decide proper vs blocking defeat.
enum class PreferenceKind { kTopLayer, kGeneralized };

struct QueryOptions {
  Ordering ordering = Ordering::kSharedBasis;
  bool alpha_beta = true;
  AttackBound bound = AttackBound::kCoMinusShared;
  EvalMetric metric = EvalMetric::kAttackedSurface;
  std::optional<std::size_t> max_depth;
};

std::string_view to_string(Ordering o);
std::string_view to_string(AttackBound b);
std::string_view to_string(EvalMetric m);
std::string_view to_string(PreferenceKind p);

// CLI spellings: textual|shared-basis, commit|co|co-minus-shared,
// attacked|defeater, top-layer|generalized. std::nullopt on anything else.
std::optional<Ordering> parse_ordering(std::string_view s);
std::optional<AttackBound> parse_bound(std::string_view s);
std::optional<EvalMetric> parse_metric(std::string_view s);
std::optional<PreferenceKind> parse_preference(std::string_view s);

}  // namespace delp
