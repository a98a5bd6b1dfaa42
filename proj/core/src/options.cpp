#include "delp/options.hpp"

namespace delp {

std::string_view to_string(Ordering o) {
  return o == Ordering::kTextual ? "textual" : "shared-basis";
}

std::string_view to_string(AttackBound b) {
  switch (b) {
    case AttackBound::kCommit: return "commit";
    case AttackBound::kCo: return "co";
    case AttackBound::kCoMinusShared: return "co-minus-shared";
  }
  return "?";
}

std::string_view to_string(EvalMetric m) {
  return m == EvalMetric::kAttackedSurface ? "attacked" : "defeater";
}

std::string_view to_string(PreferenceKind p) {
  return p == PreferenceKind::kTopLayer ? "top-layer" : "generalized";
}

std::optional<Ordering> parse_ordering(std::string_view s) {
  if (s == "textual") return Ordering::kTextual;
  if (s == "shared-basis") return Ordering::kSharedBasis;
  return std::nullopt;
}

std::optional<AttackBound> parse_bound(std::string_view s) {
  if (s == "commit") return AttackBound::kCommit;
  if (s == "co") return AttackBound::kCo;
  if (s == "co-minus-shared") return AttackBound::kCoMinusShared;
  return std::nullopt;
}

std::optional<EvalMetric> parse_metric(std::string_view s) {
  if (s == "attacked") return EvalMetric::kAttackedSurface;
  if (s == "defeater") return EvalMetric::kDefeaterSurface;
  return std::nullopt;
}

std::optional<PreferenceKind> parse_preference(std::string_view s) {
  if (s == "top-layer") return PreferenceKind::kTopLayer;
  if (s == "generalized") return PreferenceKind::kGeneralized;
  return std::nullopt;
}

}  // namespace delp
