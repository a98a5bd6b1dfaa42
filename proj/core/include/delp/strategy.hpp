#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "delp/dialectics.hpp"

namespace delp {

struct Strategy {
  Ordering ordering = Ordering::kSharedBasis;
  bool alpha_beta = true;
  AttackBound bound = AttackBound::kCoMinusShared;
  EvalMetric metric = EvalMetric::kAttackedSurface;

  QueryOptions options() const;
  /// `order:ab|noab:bound:metric`, e.g. `textual:noab:commit:attacked`.
  std::string name() const;
  bool operator==(const Strategy&) const = default;
};

std::optional<Strategy> parse_strategy(std::string_view s);

/// The 24 combinations of ordering × α-β × bound × metric.
std::vector<Strategy> all_strategies();

struct StrategyRow {
  Strategy strategy;
  Answer answer = Answer::kUnknown;
  std::size_t nodes = 0;  // nodes over every tree the query built
  SearchStats stats;
  double wall_ms = 0.0;
};

struct StrategyReport {
  std::string query;
  std::vector<StrategyRow> rows;
};

/// Raised when two strategies disagree on an answer.
class AnswerMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Runs `q` once per strategy, each with a fresh reasoning context so that
/// timings are comparable. Throws AnswerMismatch on disagreement.
StrategyReport compare_strategies(const KnowledgeBase& kb, const Literal& q, std::span<const Strategy> strategies,
                                  PreferenceKind preference = PreferenceKind::kTopLayer);

/// One CSV line per row with a header line first.
std::string to_csv(std::span<const StrategyReport> reports);

}  // namespace delp
