#include "delp/knowledge_base.hpp"

#include <algorithm>

#include "delp/derivation.hpp"
#include "delp/grounding.hpp"
#include "delp/parser.hpp"

namespace delp {

ContradictoryStrictRules::ContradictoryStrictRules(std::string literal, std::string complement)
    : std::runtime_error("strict rules are contradictory: both " + literal + " and " + complement +
                         " are derivable"),
      literal_(std::move(literal)),
      complement_(std::move(complement)) {}

LiteralId KnowledgeBase::intern(const Literal& l) {
  auto [it, inserted] = index_.try_emplace(l, static_cast<LiteralId>(literals_.size()));
  if (inserted) literals_.push_back(l);
  return it->second;
}

KnowledgeBase::KnowledgeBase(Program ground) : program_(std::move(ground)) {
  if (!program_.is_ground()) {
    throw std::invalid_argument("KnowledgeBase requires a ground program");
  }
  std::vector<const Rule*> source;
  for (const auto& r : program_.strict_rules) source.push_back(&r);
  for (const auto& r : program_.defeasible_rules) source.push_back(&r);

  for (const Rule* r : source) {
    intern(r->head);
    for (const auto& b : r->body) intern(b);
  }
  const std::size_t named = literals_.size();
  for (std::size_t i = 0; i < named; ++i) intern(delp::complement(literals_[i]));

  const std::size_t n = literals_.size();
  complement_.resize(n);
  for (std::size_t i = 0; i < n; ++i) complement_[i] = index_.at(delp::complement(literals_[i]));

  by_head_.assign(n, {});
  rank_.assign(n, 0);
  std::vector<bool> ranked(n, false);
  for (const Rule* r : source) {
    GroundRule g;
    g.kind = r->kind;
    g.head = index_.at(r->head);
    g.body_set.resize(n);
    for (const auto& b : r->body) {
      const LiteralId id = index_.at(b);
      g.body.push_back(id);
      g.body_set.set(id);
    }
    const auto id = static_cast<RuleId>(rules_.size());
    (g.is_strict() ? strict_ : defeasible_).push_back(id);
    if (g.is_strict() && !g.body.empty()) strict_inference_.push_back(id);
    by_head_[g.head].push_back(id);
    if (!ranked[g.head]) {
      ranked[g.head] = true;
      rank_[g.head] = id;
    }
    rules_.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ranked[i]) rank_[i] = rules_.size() + i;
  }

  strict_closure_ = closure(*this, strict_);
  for (std::size_t i = 0; i < n; ++i) {
    if (strict_closure_.test(i) && strict_closure_.test(complement_[i])) {
      throw ContradictoryStrictRules(name(static_cast<LiteralId>(i)), name(complement_[i]));
    }
  }

  conflicting_.assign(n, LiteralSet(n));
  for (LiteralId q = 0; q < n; ++q) {
    for (LiteralId s = q; s < n; ++s) {
      if (conflicts(*this, s, q)) {
        conflicting_[q].set(s);
        conflicting_[s].set(q);
      }
    }
  }
}

std::optional<LiteralId> KnowledgeBase::find(const Literal& l) const {
  if (auto it = index_.find(l); it != index_.end()) return it->second;
  return std::nullopt;
}

bool KnowledgeBase::atom_occurs(const Literal& l) const {
  Literal positive = l;
  positive.negated = false;
  return index_.count(positive) > 0;
}

std::string KnowledgeBase::rule_text(RuleId id) const {
  const GroundRule& g = rules_[id];
  Rule r;
  r.kind = g.kind;
  r.head = literals_[g.head];
  for (LiteralId b : g.body) r.body.push_back(literals_[b]);
  return to_string(r);
}

LiteralSet KnowledgeBase::make_set(std::span<const LiteralId> ids) const {
  LiteralSet s(literals_.size());
  for (LiteralId id : ids) s.set(id);
  return s;
}

LiteralSet KnowledgeBase::complement_of(const LiteralSet& s) const {
  LiteralSet out(literals_.size());
  for (auto i = s.find_first(); i != LiteralSet::npos; i = s.find_next(i)) out.set(complement_[i]);
  return out;
}

std::vector<LiteralId> KnowledgeBase::members(const LiteralSet& s) const {
  std::vector<LiteralId> out;
  for (auto i = s.find_first(); i != LiteralSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<LiteralId>(i));
  }
  std::sort(out.begin(), out.end(), [&](LiteralId a, LiteralId b) {
    return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
  });
  return out;
}

std::string KnowledgeBase::set_text(const LiteralSet& s) const {
  std::string out = "{";
  bool first = true;
  for (LiteralId id : members(s)) {
    if (!first) out += ", ";
    out += name(id);
    first = false;
  }
  return out + "}";
}

KnowledgeBase load_knowledge_base(std::string_view text, std::vector<std::string>* warnings) {
  return KnowledgeBase(ground_program(parse_program(text, warnings)));
}

}  // namespace delp
