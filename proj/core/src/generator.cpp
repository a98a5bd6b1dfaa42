#include "delp/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "delp/derivation.hpp"
#include "delp/knowledge_base.hpp"

namespace delp {
namespace {

// Raw draws keep the output identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 rng_;
};

Literal atom_literal(std::size_t atom, bool negated) { return Literal{"a" + std::to_string(atom), {}, negated}; }

Literal random_literal(Draw& d, const GeneratorParams& p) {
  return atom_literal(d.below(p.num_atoms), d.chance(p.negation_prob / 2));
}

std::vector<Literal> random_body(Draw& d, const GeneratorParams& p, const Literal& head) {
  std::vector<Literal> body;
  const std::size_t want = d.below(p.max_body + 1);
  for (std::size_t tries = 0; body.size() < want && tries < 8 * (want + 1); ++tries) {
    Literal l = random_literal(d, p);
    if (l.atom == head.atom) continue;
    if (std::any_of(body.begin(), body.end(), [&](const Literal& b) { return b.atom == l.atom; })) continue;
    body.push_back(std::move(l));
  }
  return body;
}

}  // namespace

Program generate_program(const GeneratorParams& p) {
  if (p.num_atoms == 0) throw GeneratorError("num_atoms must be positive");
  Draw d(p.seed);

  for (std::size_t attempt = 0; attempt <= p.max_retries; ++attempt) {
    Program prog;
    std::size_t tries = 0;
    while (prog.strict_rules.size() < p.num_strict && tries++ < 50 * (p.num_strict + 1)) {
      Literal head = random_literal(d, p);
      auto body = random_body(d, p, head);
      prog.add_rule(Rule{std::move(head), std::move(body), RuleKind::kStrict});
    }
    std::vector<Literal> heads;
    tries = 0;
    while (prog.defeasible_rules.size() < p.num_defeasible && tries++ < 50 * (p.num_defeasible + 1)) {
      Literal head = !heads.empty() && d.chance(p.negation_prob) ? complement(heads[d.below(heads.size())])
                                                                  : random_literal(d, p);
      auto body = random_body(d, p, head);
      if (prog.add_rule(Rule{head, std::move(body), RuleKind::kDefeasible})) {
        heads.push_back(std::move(head));
      }
    }
    if (prog.strict_rules.size() < p.num_strict || prog.defeasible_rules.size() < p.num_defeasible) {
      throw GeneratorError("cannot fit the requested rule counts over " + std::to_string(p.num_atoms) + " atoms");
    }
    try {
      KnowledgeBase kb(prog);
      return prog;
    } catch (const ContradictoryStrictRules&) {
      continue;
    }
  }
  throw GeneratorError("no non-contradictory strict part after " + std::to_string(p.max_retries) + " retries");
}

}  // namespace delp
