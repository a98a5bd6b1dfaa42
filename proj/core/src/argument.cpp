#include "delp/argument.hpp"

#include <algorithm>
#include <stdexcept>

#include "delp/argumentation_line.hpp"
#include "delp/derivation.hpp"

namespace delp {
namespace {

using RuleSet = std::vector<RuleId>;

RuleSet merge(const RuleSet& a, const RuleSet& b) {
  RuleSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Keeps the inclusion-minimal sets, deduplicated, in lexicographic order.
void minimize(std::vector<RuleSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const RuleSet& a, const RuleSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<RuleSet> kept;
  for (auto& s : sets) {
    const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const RuleSet& k) {
      return std::includes(s.begin(), s.end(), k.begin(), k.end());
    });
    if (!subsumed) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  sets = std::move(kept);
}

}  // namespace

ArgumentStore::ArgumentStore(const KnowledgeBase& kb, std::size_t max_support_sets)
    : kb_(&kb), max_support_sets_(max_support_sets) {}

ArgumentId ArgumentStore::intern(std::vector<RuleId> rules, LiteralId conclusion) {
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  auto key = std::make_pair(rules, conclusion);
  if (auto it = index_.find(key); it != index_.end()) return it->second;

  Argument a;
  a.rules = std::move(rules);
  a.conclusion = conclusion;
  a.co = kb_->empty_set();
  for (RuleId r : a.rules) a.co.set(kb_->rule(r).head);
  a.commitment = strict_closure_with(*kb_, {}, a.co);

  const auto id = static_cast<ArgumentId>(args_.size());
  args_.push_back(std::move(a));
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<ArgumentId> ArgumentStore::find(const std::vector<RuleId>& rules, LiteralId conclusion) const {
  auto sorted = rules;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = index_.find({sorted, conclusion}); it != index_.end()) return it->second;
  return std::nullopt;
}

// Defeasible-rule sets of derivation trees for q, minimized. `path` holds the
// literals above q; rules whose body meets it are skipped and `blocked` is
// raised, which makes the result path-dependent and therefore not memoized.
std::vector<RuleSet> ArgumentStore::supports(LiteralId q, LiteralSet& path, bool& blocked) {
  if (auto it = support_memo_.find(q); it != support_memo_.end()) return it->second;

  std::vector<RuleSet> result;
  bool local_blocked = false;
  path.set(q);
  for (RuleId rid : kb_->rules_with_head(q)) {
    const GroundRule& r = kb_->rule(rid);
    if (r.body_set.intersects(path)) {
      local_blocked = true;
      continue;
    }
    std::vector<RuleSet> partial{r.is_defeasible() ? RuleSet{rid} : RuleSet{}};
    for (LiteralId b : r.body) {
      const auto sub = supports(b, path, local_blocked);
      std::vector<RuleSet> next;
      for (const auto& p : partial) {
        for (const auto& s : sub) next.push_back(merge(p, s));
      }
      if (next.size() > max_support_sets_) {
        path.reset(q);
        throw ResourceLimitExceeded("too many candidate rule sets while deriving " + kb_->name(q));
      }
      minimize(next);
      partial = std::move(next);
      if (partial.empty()) break;
    }
    result.insert(result.end(), partial.begin(), partial.end());
  }
  path.reset(q);
  minimize(result);
  if (local_blocked) {
    blocked = true;
  } else {
    support_memo_.emplace(q, result);
  }
  return result;
}

const std::vector<ArgumentId>& ArgumentStore::arguments_for(LiteralId q) {
  if (auto it = by_conclusion_.find(q); it != by_conclusion_.end()) return it->second;

  LiteralSet path = kb_->empty_set();
  bool blocked = false;
  std::vector<ArgumentId> out;
  for (auto& rules : supports(q, path, blocked)) {
    if (has_complementary_pair(*kb_, strict_closure_with(*kb_, rules, kb_->empty_set()))) continue;
    out.push_back(intern(std::move(rules), q));
  }
  return by_conclusion_.emplace(q, std::move(out)).first->second;
}

ArgumentId ArgumentStore::subargument(ArgumentId a, LiteralId q) {
  const auto key = std::make_pair(a, q);
  if (auto it = sub_memo_.find(key); it != sub_memo_.end()) return it->second;

  std::vector<RuleId> rules = args_[a].rules;
  if (!args_[a].commitment.test(q)) {
    throw std::invalid_argument(kb_->name(q) + " is not derivable within " + describe(a));
  }
  for (std::size_t i = 0; i < rules.size();) {
    std::vector<RuleId> fewer = rules;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (strict_closure_with(*kb_, fewer, kb_->empty_set()).test(q)) {
      rules = std::move(fewer);
    } else {
      ++i;
    }
  }
  const ArgumentId id = intern(std::move(rules), q);
  sub_memo_.emplace(key, id);
  return id;
}

std::vector<std::string> ArgumentStore::rule_texts(ArgumentId id) const {
  std::vector<std::string> out;
  for (RuleId r : args_[id].rules) {
    std::string t = kb_->rule_text(r);
    t.pop_back();  // trailing '.'
    out.push_back(std::move(t));
  }
  return out;
}

std::string ArgumentStore::describe(ArgumentId id) const {
  std::string out = "<{";
  const auto texts = rule_texts(id);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i) out += "; ";
    out += texts[i];
  }
  return out + "}, " + kb_->name(args_[id].conclusion) + ">";
}

ArgumentCheck verify_argument(const KnowledgeBase& kb, const Argument& a) {
  ArgumentCheck c;
  const LiteralSet cl = closure(kb, {kb.strict_rules(), std::span<const RuleId>(a.rules)}, kb.empty_set());
  c.derives = cl.test(a.conclusion);
  c.consistent = !has_complementary_pair(kb, cl);
  c.minimal = true;
  for (std::size_t i = 0; i < a.rules.size() && c.minimal; ++i) {
    std::vector<RuleId> fewer = a.rules;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (closure(kb, {kb.strict_rules(), std::span<const RuleId>(fewer)}, kb.empty_set()).test(a.conclusion)) {
      c.minimal = false;
    }
  }
  LiteralSet heads = kb.empty_set();
  for (RuleId r : a.rules) heads.set(kb.rule(r).head);
  c.co_exact = heads == a.co;
  return c;
}

LiteralSet commitment_set(const ArgumentStore& store, std::span<const ArgumentId> args) {
  const KnowledgeBase& kb = store.kb();
  LiteralSet co = kb.empty_set();
  for (ArgumentId a : args) co |= store[a].co;
  return strict_closure_with(kb, {}, co);
}

LiteralSet attackable_points(const ArgumentStore& store, ArgumentId a) {
  return store[a].commitment - store.kb().strict_closure();
}

LiteralSet counterargues(const ArgumentStore& store, ArgumentId attacker, ArgumentId target) {
  const KnowledgeBase& kb = store.kb();
  const LiteralId s = store[attacker].conclusion;
  LiteralSet points = attackable_points(store, target);
  for (auto q = points.find_first(); q != LiteralSet::npos; q = points.find_next(q)) {
    if (!kb.conflicting(static_cast<LiteralId>(q)).test(s)) points.reset(q);
  }
  return points;
}

LiteralSet attack_bound(const ArgumentStore& store, ArgumentId a, const ArgumentationLine* line,
                        AttackBound mode) {
  const KnowledgeBase& kb = store.kb();
  switch (mode) {
    case AttackBound::kCommit:
      return kb.complement_of(store[a].commitment);
    case AttackBound::kCo:
      return kb.complement_of(store[a].co);
    case AttackBound::kCoMinusShared: {
      if (line == nullptr || line->size() == 0) {
        throw std::invalid_argument("co-minus-shared bound needs an argumentation line");
      }
      return kb.complement_of(store[a].co - shared_basis(store, *line, line->size() - 1));
    }
  }
  return kb.empty_set();
}

}  // namespace delp
