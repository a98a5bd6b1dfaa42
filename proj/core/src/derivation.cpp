#include "delp/derivation.hpp"

#include <algorithm>
#include <functional>

namespace delp {
namespace {

void saturate(const KnowledgeBase& kb, std::initializer_list<std::span<const RuleId>> groups,
              LiteralSet& io) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& group : groups) {
      for (RuleId id : group) {
        const GroundRule& r = kb.rule(id);
        if (!io.test(r.head) && r.body_set.is_subset_of(io)) {
          io.set(r.head);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

LiteralSet closure(const KnowledgeBase& kb, std::span<const RuleId> rules) {
  LiteralSet out = kb.empty_set();
  saturate(kb, {rules}, out);
  return out;
}

LiteralSet closure(const KnowledgeBase& kb, std::span<const RuleId> rules, const LiteralSet& facts) {
  LiteralSet out = facts;
  saturate(kb, {rules}, out);
  return out;
}

LiteralSet closure(const KnowledgeBase& kb, std::initializer_list<std::span<const RuleId>> groups,
                   const LiteralSet& facts) {
  LiteralSet out = facts;
  saturate(kb, groups, out);
  return out;
}

LiteralSet strict_closure_with(const KnowledgeBase& kb, std::span<const RuleId> extra,
                               const LiteralSet& facts) {
  LiteralSet out = kb.strict_closure() | facts;
  saturate(kb, {kb.strict_inference_rules(), extra}, out);
  return out;
}

bool derives(const KnowledgeBase& kb, std::span<const RuleId> rules, LiteralId q) {
  return closure(kb, rules).test(q);
}

bool has_complementary_pair(const KnowledgeBase& kb, const LiteralSet& s) {
  for (auto i = s.find_first(); i != LiteralSet::npos; i = s.find_next(i)) {
    if (s.test(kb.complement(static_cast<LiteralId>(i)))) return true;
  }
  return false;
}

bool is_contradictory(const KnowledgeBase& kb, std::span<const RuleId> rules) {
  return has_complementary_pair(kb, closure(kb, rules));
}

bool conflicts(const KnowledgeBase& kb, LiteralId s, LiteralId q) {
  LiteralSet seeds = kb.empty_set();
  seeds.set(s);
  seeds.set(q);
  return has_complementary_pair(kb, closure(kb, kb.strict_rules(), seeds));
}

std::size_t DerivationTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::vector<RuleId> DerivationTree::rules() const {
  std::vector<RuleId> out;
  std::function<void(const DerivationTree&)> walk = [&](const DerivationTree& t) {
    out.push_back(t.rule);
    for (const auto& c : t.children) walk(c);
  };
  walk(*this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const KnowledgeBase& kb, std::size_t cap) : kb_(kb), cap_(cap), on_path_(kb.empty_set()) {}

  std::vector<DerivationTree> trees(LiteralId q) {
    std::vector<DerivationTree> out;
    on_path_.set(q);
    for (RuleId rid : kb_.rules_with_head(q)) {
      const GroundRule& r = kb_.rule(rid);
      if (r.body_set.intersects(on_path_)) continue;
      std::vector<std::vector<DerivationTree>> per_body;
      bool dead = false;
      for (LiteralId b : r.body) {
        per_body.push_back(trees(b));
        if (per_body.back().empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      // Cartesian product of the children's alternatives.
      std::vector<std::size_t> idx(per_body.size(), 0);
      for (;;) {
        DerivationTree t{q, rid, {}};
        for (std::size_t i = 0; i < per_body.size(); ++i) t.children.push_back(per_body[i][idx[i]]);
        out.push_back(std::move(t));
        if (out.size() > cap_) {
          throw ResourceLimitExceeded("more than " + std::to_string(cap_) +
                                      " derivation trees for " + kb_.name(q));
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_body[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    on_path_.reset(q);
    return out;
  }

 private:
  const KnowledgeBase& kb_;
  std::size_t cap_;
  LiteralSet on_path_;
};

}  // namespace

std::vector<DerivationTree> derivation_trees(const KnowledgeBase& kb, LiteralId q, std::size_t max_trees) {
  return TreeEnumerator(kb, max_trees).trees(q);
}

}  // namespace delp
