#include "delp/oracle.hpp"

#include "delp/derivation.hpp"

namespace delp {

std::vector<ArgumentId> all_arguments(Reasoner& r, std::size_t cap) {
  std::vector<ArgumentId> out;
  for (LiteralId l = 0; l < r.kb().literal_count(); ++l) {
    for (ArgumentId a : r.arguments().arguments_for(l)) {
      out.push_back(a);
      if (out.size() > cap) throw ResourceLimitExceeded("more than " + std::to_string(cap) + " arguments");
    }
  }
  return out;
}

AttackPointsReport attack_points_oracle(Reasoner& r, const ArgumentationLine& line, std::size_t cap) {
  const KnowledgeBase& kb = r.kb();
  ArgumentStore& store = r.arguments();
  const ArgumentId target = line.back().argument;
  const LiteralSet base = kb.strict_closure();

  AttackPointsReport rep{kb.empty_set(), kb.empty_set(), kb.empty_set(), {}};
  for (ArgumentId b : all_arguments(r, cap)) {
    OracleAttack att{b, kb.empty_set(), kb.empty_set(), false};
    const LiteralId s = store[b].conclusion;
    for (LiteralId q : kb.members(store[target].commitment - base)) {
      if (conflicts(kb, s, q)) att.points.set(q);
    }
    if (att.points.none()) continue;
    rep.counterarg.set(s);
    for (LiteralId q : kb.members(att.points)) {
      if (r.classify_defeat(b, target, q) != DefeatClass::kNone) att.defeat_points.set(q);
    }
    if (att.defeat_points.any()) {
      rep.defeat.set(s);
      if (!line.contains(b)) {
        ArgumentationLine ext = line;
        ext.push({b, kb.members(att.defeat_points).front(), DefeatClass::kBlocking});
        att.acceptable = is_concordant(store, ext);
      }
      if (att.acceptable) rep.attack.set(s);
    }
    rep.attacks.push_back(std::move(att));
  }
  return rep;
}

}  // namespace delp
