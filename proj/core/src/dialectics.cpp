#include "delp/dialectics.hpp"

#include <algorithm>
#include <string>

namespace delp {

std::string_view to_string(NodeLabel l) { return l == NodeLabel::kUndefeated ? "U" : "D"; }

std::size_t DialecticalNode::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::kYes: return "YES";
    case Answer::kNo: return "NO";
    case Answer::kUndecided: return "UNDECIDED";
    case Answer::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

int exit_code(Answer a) { return static_cast<int>(a); }

namespace {

// shared_basis with the closure memoized in the reasoner.
const LiteralSet& shared_basis_cached(Reasoner& r, const ArgumentationLine& line, std::size_t k) {
  const ArgumentStore& store = r.arguments();
  return r.closure_with_strict(parity_co(store, line, k, 0) & parity_co(store, line, k, 1));
}

// `unions` holds the Co unions of the line's even and odd levels.
std::vector<Defeat> acceptable_with(Reasoner& r, const ArgumentationLine& line, const LiteralSet (&unions)[2],
                                    AttackBound bound, SearchStats* stats) {
  ArgumentStore& store = r.arguments();
  const KnowledgeBase& kb = r.kb();
  const ArgumentId last = line.back().argument;
  LiteralSet limit;
  if (bound == AttackBound::kCoMinusShared) {
    const LiteralSet shared = store[last].co & shared_basis_cached(r, line, line.size() - 1);
    limit = kb.complement_of(store[last].co - shared);
    if (stats != nullptr) stats->attack_points_skipped_shared_basis += (shared & attackable_points(store, last)).count();
  } else {
    limit = attack_bound(store, last, &line, bound);
  }

  // The new entry sits at level |line|; only its parity class changes.
  const std::size_t parity = line.size() % 2;
  std::vector<Defeat> out;
  if (!r.consistent_with_strict(unions[1 - parity])) return out;
  LiteralSet grown;
  for (const Defeat& d : r.defeaters_within(last, limit, stats)) {
    if (line.contains(d.attacker)) continue;
    grown = unions[parity];
    grown |= store[d.attacker].co;
    if (r.consistent_with_strict(grown)) out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<Defeat> acceptable_defeaters(Reasoner& r, const ArgumentationLine& line, AttackBound bound,
                                         SearchStats* stats) {
  const ArgumentStore& store = r.arguments();
  const LiteralSet unions[2] = {parity_co(store, line, line.size(), 0), parity_co(store, line, line.size(), 1)};
  return acceptable_with(r, line, unions, bound, stats);
}

LiteralSet eval_score(Reasoner& r, const ArgumentationLine& line, const Defeat& c, EvalMetric metric) {
  const ArgumentStore& store = r.arguments();
  ArgumentationLine extended = line;
  extended.push({c.attacker, c.point, c.kind});
  const ArgumentId scored = metric == EvalMetric::kAttackedSurface ? line.back().argument : c.attacker;
  return r.kb().complement_of(store[scored].co - shared_basis_cached(r, extended, line.size()));
}

std::vector<Defeat> eval_order(Reasoner& r, std::vector<Defeat> candidates, const ArgumentationLine& line,
                               EvalMetric metric) {
  struct Keyed {
    std::size_t score;
    std::string conclusion;
    std::size_t rules;
    Defeat d;
  };
  const ArgumentStore& store = r.arguments();
  std::vector<Keyed> keyed;
  keyed.reserve(candidates.size());
  for (const Defeat& d : candidates) {
    keyed.push_back({eval_score(r, line, d, metric).count(), r.kb().name(store[d.attacker].conclusion),
                     store[d.attacker].rules.size(), d});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
    return a.rules < b.rules;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) candidates[i] = keyed[i].d;
  return candidates;
}

namespace {

struct Builder {
  Reasoner& r;
  const QueryOptions& opts;
  SearchStats stats;
  LiteralSet unions[2];

  DialecticalNode expand(ArgumentationLine& line) {
    const std::size_t depth = line.size() - 1;
    if (opts.max_depth && depth > *opts.max_depth) {
      throw DepthLimitExceeded("dialectical tree deeper than " + std::to_string(*opts.max_depth));
    }
    DialecticalNode node;
    node.argument = line.back().argument;
    node.attack_point = line.back().attack_point;
    node.defeat = line.back().defeat;
    ++stats.nodes_expanded;

    auto candidates = acceptable_with(r, line, unions, opts.bound, &stats);
    if (opts.ordering == Ordering::kSharedBasis) candidates = eval_order(r, std::move(candidates), line, opts.metric);

    node.label = NodeLabel::kUndefeated;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Defeat& c = candidates[i];
      const std::size_t parity = line.size() % 2;
      LiteralSet saved = unions[parity];
      unions[parity] |= r.arguments()[c.attacker].co;
      line.push({c.attacker, c.point, c.kind});
      node.children.push_back(expand(line));
      line.pop();
      unions[parity] = std::move(saved);
      if (node.children.back().label == NodeLabel::kUndefeated) {
        node.label = NodeLabel::kDefeated;
        if (opts.alpha_beta) {
          node.pruned_children_count = candidates.size() - i - 1;
          stats.nodes_pruned_alpha_beta += node.pruned_children_count;
          break;
        }
      }
    }
    return node;
  }
};

}  // namespace

TreeResult build_dialectical_tree(Reasoner& r, ArgumentId root, const QueryOptions& opts) {
  Builder b{r, opts, {}, {r.arguments()[root].co, r.kb().empty_set()}};
  ArgumentationLine line(root);
  TreeResult out;
  out.root = b.expand(line);
  out.stats = b.stats;
  return out;
}

bool is_justified(Reasoner& r, ArgumentId a, const QueryOptions& opts) {
  return build_dialectical_tree(r, a, opts).root.label == NodeLabel::kUndefeated;
}

QueryResult answer_query(Reasoner& r, const Literal& q, const QueryOptions& opts) {
  QueryResult res;
  const KnowledgeBase& kb = r.kb();
  const auto id = kb.find(q);
  if (!id) {
    res.answer = kb.atom_occurs(q) ? Answer::kUndecided : Answer::kUnknown;
    return res;
  }
  const std::pair<LiteralId, Answer> sides[] = {{*id, Answer::kYes}, {kb.complement(*id), Answer::kNo}};
  for (const auto& [goal, verdict] : sides) {
    for (ArgumentId a : r.arguments().arguments_for(goal)) {
      res.trees.push_back(build_dialectical_tree(r, a, opts));
      res.stats += res.trees.back().stats;
      if (res.trees.back().root.label == NodeLabel::kUndefeated) {
        res.answer = verdict;
        res.deciding_tree = res.trees.size() - 1;
        return res;
      }
    }
  }
  res.answer = Answer::kUndecided;
  return res;
}

}  // namespace delp
