#include "delp/reasoner.hpp"

#include <algorithm>
#include <stdexcept>

#include "delp/derivation.hpp"

namespace delp {
namespace {

// Proper beats blocking; then a point among the target's own heads wins.
bool better(const Defeat& a, const Defeat& b, const LiteralSet& co) {
  if (a.kind != b.kind) return a.kind == DefeatClass::kProper;
  return co.test(a.point) && !co.test(b.point);
}

}  // namespace

Reasoner::Reasoner(const KnowledgeBase& kb, PreferenceKind preference, std::size_t max_specificity_base)
    : kb_(&kb), store_(kb), preference_(preference), max_base_(max_specificity_base) {}

const ActivationProfile& Reasoner::profile(ArgumentId a) {
  auto it = profiles_.find(a);
  if (it == profiles_.end()) it = profiles_.emplace(a, activation_profile(store_, a, preference_)).first;
  return it->second;
}

bool Reasoner::more_specific(ArgumentId a1, ArgumentId a2) {
  if (a1 == a2) return false;
  const auto key = std::make_pair(a1, a2);
  if (auto it = specific_.find(key); it != specific_.end()) return it->second;
  const bool r = strictly_more_specific(*kb_, profile(a1), profile(a2), max_base_);
  specific_.emplace(key, r);
  return r;
}

DefeatClass Reasoner::classify_defeat(ArgumentId attacker, ArgumentId target, LiteralId point) {
  if (!counterargues(store_, attacker, target).test(point)) {
    throw std::invalid_argument(kb_->name(point) + " is not an attack point of " + store_.describe(attacker) +
                                " on " + store_.describe(target));
  }
  const ArgumentId sub = store_.subargument(target, point);
  if (more_specific(attacker, sub)) return DefeatClass::kProper;
  if (more_specific(sub, attacker)) return DefeatClass::kNone;
  return DefeatClass::kBlocking;
}

const std::vector<Defeat>& Reasoner::defeats_at(ArgumentId target, LiteralId point) {
  const auto key = std::make_pair(target, point);
  if (auto it = defeats_.find(key); it != defeats_.end()) return it->second;

  std::vector<Defeat> out;
  const ArgumentId sub = store_.subargument(target, point);
  for (LiteralId s : kb_->members(kb_->conflicting(point))) {
    for (ArgumentId b : store_.arguments_for(s)) {
      if (store_[b].is_strict()) continue;  // Π is consistent, so never happens
      DefeatClass c = DefeatClass::kBlocking;
      if (more_specific(b, sub)) {
        c = DefeatClass::kProper;
      } else if (more_specific(sub, b)) {
        c = DefeatClass::kNone;
      }
      if (c != DefeatClass::kNone) out.push_back({b, point, c});
    }
  }
  return defeats_.emplace(key, std::move(out)).first->second;
}

std::vector<Defeat> Reasoner::find_defeaters(ArgumentId target, const LiteralSet& bound, SearchStats* stats) {
  return defeaters_within(target, bound, stats);
}

const std::vector<Defeat>& Reasoner::defeaters_within(ArgumentId target, const LiteralSet& bound,
                                                      SearchStats* stats) {
  auto key = std::make_pair(target, bound);
  auto it = scans_.find(key);
  if (it == scans_.end()) {
    DefeaterScan scan;
    const LiteralSet points = attackable_points(store_, target) & kb_->complement_of(bound);
    for (LiteralId q : kb_->members(points)) {
      ++scan.points;
      for (LiteralId s : kb_->members(kb_->conflicting(q))) scan.arguments += store_.arguments_for(s).size();
      for (const Defeat& d : defeats_at(target, q)) {
        auto o = std::find_if(scan.defeaters.begin(), scan.defeaters.end(),
                              [&](const Defeat& x) { return x.attacker == d.attacker; });
        if (o == scan.defeaters.end()) {
          scan.defeaters.push_back(d);
        } else if (better(d, *o, store_[target].co)) {
          *o = d;
        }
      }
    }
    it = scans_.emplace(std::move(key), std::move(scan)).first;
  }
  if (stats != nullptr) {
    stats->attack_points_considered += it->second.points;
    stats->arguments_built += it->second.arguments;
  }
  return it->second.defeaters;
}

const LiteralSet& Reasoner::closure_with_strict(const LiteralSet& facts) {
  auto it = closures_.find(facts);
  if (it == closures_.end()) it = closures_.emplace(facts, strict_closure_with(*kb_, {}, facts)).first;
  return it->second;
}

bool Reasoner::consistent_with_strict(const LiteralSet& facts) {
  auto it = consistent_.find(facts);
  if (it == consistent_.end()) {
    it = consistent_.emplace(facts, !has_complementary_pair(*kb_, strict_closure_with(*kb_, {}, facts))).first;
  }
  return it->second;
}

}  // namespace delp
