#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "delp/argumentation_line.hpp"
#include "delp/options.hpp"
#include "delp/reasoner.hpp"
#include "delp/search_stats.hpp"

namespace delp {

enum class NodeLabel { kUndefeated, kDefeated };

std::string_view to_string(NodeLabel l);  // "U" / "D"

struct DialecticalNode {
  ArgumentId argument = 0;
  std::optional<LiteralId> attack_point;
  DefeatClass defeat = DefeatClass::kNone;
  NodeLabel label = NodeLabel::kUndefeated;
  std::vector<DialecticalNode> children;
  std::size_t pruned_children_count = 0;

  std::size_t size() const;
};

class DepthLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Defeaters of the line's last argument within the chosen bound that keep
/// the line free of repetition and concordant.
std::vector<Defeat> acceptable_defeaters(Reasoner& r, const ArgumentationLine& line, AttackBound bound,
                                         SearchStats* stats = nullptr);

/// The literal set a candidate is ranked by (smaller ranks first):
///   attacked: complement(Co(attacked) ∖ SharedBasis(line + c, |line|))
///   defeater: complement(Co(c) ∖ SharedBasis(line + c, |line|))
LiteralSet eval_score(Reasoner& r, const ArgumentationLine& line, const Defeat& candidate, EvalMetric metric);

/// Stable sort by score size, then conclusion text, then rule count.
std::vector<Defeat> eval_order(Reasoner& r, std::vector<Defeat> candidates, const ArgumentationLine& line,
                               EvalMetric metric);

struct TreeResult {
  DialecticalNode root;
  SearchStats stats;
};

/// Depth-first construction with optional α-β cut. Throws DepthLimitExceeded
/// when a node would sit deeper than opts.max_depth.
TreeResult build_dialectical_tree(Reasoner& r, ArgumentId root, const QueryOptions& opts);

bool is_justified(Reasoner& r, ArgumentId a, const QueryOptions& opts);

enum class Answer { kYes, kNo, kUndecided, kUnknown };

std::string_view to_string(Answer a);
int exit_code(Answer a);

struct QueryResult {
  Answer answer = Answer::kUnknown;
  /// Trees built, in order: arguments for q, then for its complement. The
  /// search stops at the first justified root.
  std::vector<TreeResult> trees;
  std::optional<std::size_t> deciding_tree;
  SearchStats stats;
};

QueryResult answer_query(Reasoner& r, const Literal& q, const QueryOptions& opts);

}  // namespace delp
