#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "delp/argumentation_line.hpp"
#include "delp/dialectics.hpp"
#include "delp/oracle.hpp"
#include "delp/parser.hpp"
#include "delp/strategy.hpp"
#include "support/fixtures.hpp"

namespace delp {
namespace {

using test::engine;
using test::lit;
using test::names;

QueryOptions exhaustive() {
  QueryOptions o;
  o.ordering = Ordering::kTextual;
  o.alpha_beta = false;
  o.bound = AttackBound::kCommit;
  return o;
}

std::set<ArgumentId> attackers(const std::vector<Defeat>& ds) {
  std::set<ArgumentId> out;
  for (const auto& d : ds) out.insert(d.attacker);
  return out;
}

// U iff every child is D; α-β leaves nothing unexpanded under a U node.
void check_labels(const DialecticalNode& n, bool alpha_beta) {
  bool any_u = false;
  for (const auto& c : n.children) {
    check_labels(c, alpha_beta);
    any_u = any_u || c.label == NodeLabel::kUndefeated;
  }
  EXPECT_EQ(n.label, any_u ? NodeLabel::kDefeated : NodeLabel::kUndefeated);
  if (!alpha_beta) EXPECT_EQ(n.pruned_children_count, 0U);
  if (n.label == NodeLabel::kUndefeated) EXPECT_EQ(n.pruned_children_count, 0U);
}

void check_lines(const ArgumentStore& store, const DialecticalNode& n, ArgumentationLine& line) {
  EXPECT_TRUE(is_acceptable_line(store, line));
  for (const auto& c : n.children) {
    line.push({c.argument, c.attack_point, c.defeat});
    check_lines(store, c, line);
    line.pop();
  }
}

TEST(Line, ParityAndSharedBasis) {
  const KnowledgeBase& kb = engine();
  ArgumentStore store(kb);
  const auto e = test::engine_args(store);
  const ArgumentationLine ab{e.A, e.B};
  EXPECT_EQ(parity_co(store, ab, 1, 0), store[e.A].co);
  EXPECT_EQ(parity_co(store, ab, 1, 1), store[e.B].co);
  EXPECT_EQ(names(kb, shared_basis(store, ab, 1)),
            (std::set<std::string>{"sw1", "sw2", "sw3", "heat", "pump_fuel_ok"}));
  EXPECT_EQ(shared_basis(store, ab, 0), kb.strict_closure());
  const ArgumentationLine ae{e.A, e.E};
  EXPECT_EQ(names(kb, store[e.E].co - shared_basis(store, ae, 1)), (std::set<std::string>{"~engine_ok"}));
}

TEST(Line, SharedBasisGrowsWithDepth) {
  ArgumentStore store(engine());
  const auto e = test::engine_args(store);
  const ArgumentationLine line{e.A, e.B, e.D, e.C};
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    EXPECT_TRUE(shared_basis(store, line, k).is_subset_of(shared_basis(store, line, k + 1)));
  }
  EXPECT_TRUE(engine().strict_closure().is_subset_of(shared_basis(store, line, 0)));
}

TEST(Line, ConcordanceAndRepetition) {
  ArgumentStore store(engine());
  const auto e = test::engine_args(store);
  EXPECT_TRUE(is_acceptable_line(store, {e.A, e.B}));
  EXPECT_FALSE(is_concordant(store, {e.A, e.E, e.F}));
  EXPECT_FALSE(is_acceptable_line(store, {e.A, e.B, e.A}));
}

TEST(Acceptable, MainArgumentMatchesOracle) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const ArgumentationLine root{e.A};
  const auto got = attackers(acceptable_defeaters(r, root, AttackBound::kCommit));
  std::set<ArgumentId> want;
  for (const auto& a : attack_points_oracle(r, root).attacks) {
    if (a.acceptable) want.insert(a.attacker);
  }
  EXPECT_EQ(got, want);
  EXPECT_TRUE(got.count(e.B));
  EXPECT_TRUE(got.count(e.E));
}

TEST(Acceptable, SecondLevel) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const auto got = acceptable_defeaters(r, {e.A, e.B}, AttackBound::kCommit);
  const auto who = attackers(got);
  EXPECT_TRUE(who.count(e.C));
  EXPECT_TRUE(who.count(e.D));
  for (const auto& d : got) {
    if (d.attacker == e.C) EXPECT_EQ(d.kind, DefeatClass::kProper);
    if (d.attacker == e.D) EXPECT_EQ(d.kind, DefeatClass::kBlocking);
  }
}

TEST(Acceptable, NothingExtendsMainThenNegation) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  for (AttackBound b : {AttackBound::kCommit, AttackBound::kCo, AttackBound::kCoMinusShared}) {
    EXPECT_TRUE(acceptable_defeaters(r, {e.A, e.E}, b).empty());
  }
}

TEST(Acceptable, BoundsNest) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  for (const ArgumentationLine& line : {ArgumentationLine{e.A}, ArgumentationLine{e.A, e.B}}) {
    const auto commit = attackers(acceptable_defeaters(r, line, AttackBound::kCommit));
    const auto co = attackers(acceptable_defeaters(r, line, AttackBound::kCo));
    const auto cms = attackers(acceptable_defeaters(r, line, AttackBound::kCoMinusShared));
    EXPECT_TRUE(std::includes(commit.begin(), commit.end(), co.begin(), co.end()));
    EXPECT_TRUE(std::includes(co.begin(), co.end(), cms.begin(), cms.end()));
  }
}

TEST(EvalOrder, NegationBeforePumpClog) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const ArgumentationLine root{e.A};
  const std::vector<Defeat> cs{{e.B, lit(engine(), "fuel_ok"), DefeatClass::kProper},
                               {e.E, lit(engine(), "engine_ok"), DefeatClass::kProper}};
  for (EvalMetric m : {EvalMetric::kAttackedSurface, EvalMetric::kDefeaterSurface}) {
    const auto ordered = eval_order(r, cs, root, m);
    ASSERT_EQ(ordered.size(), 2U);
    EXPECT_EQ(ordered[0].attacker, e.E);
    EXPECT_EQ(ordered[1].attacker, e.B);
  }
}

TEST(EvalOrder, SingletonAndEmpty) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const std::vector<Defeat> one{{e.B, lit(engine(), "fuel_ok"), DefeatClass::kProper}};
  EXPECT_EQ(eval_order(r, one, {e.A}, EvalMetric::kAttackedSurface).size(), 1U);
  EXPECT_TRUE(eval_order(r, {}, {e.A}, EvalMetric::kAttackedSurface).empty());
}

TEST(EvalOrder, TiesBrokenByConclusionText) {
  const KnowledgeBase kb = load_knowledge_base("s. a -< s. ~a -< s, t. t. b <- ~a. ~b -< s, t.\n");
  Reasoner r(kb);
  const ArgumentId root = r.arguments().arguments_for(test::lit(kb, "a"))[0];
  auto cs = acceptable_defeaters(r, {root}, AttackBound::kCommit);
  std::reverse(cs.begin(), cs.end());
  const auto ordered = eval_order(r, cs, {root}, EvalMetric::kAttackedSurface);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    const auto& p = r.arguments()[ordered[i - 1].attacker];
    const auto& q = r.arguments()[ordered[i].attacker];
    EXPECT_LE(kb.name(p.conclusion), kb.name(q.conclusion));
  }
}

TEST(Tree, DefaultStrategyPrunesToTwoNodes) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const TreeResult t = build_dialectical_tree(r, e.A, QueryOptions{});
  EXPECT_EQ(t.root.label, NodeLabel::kDefeated);
  ASSERT_EQ(t.root.children.size(), 1U);
  EXPECT_EQ(t.root.children[0].argument, e.E);
  EXPECT_EQ(t.root.children[0].label, NodeLabel::kUndefeated);
  EXPECT_EQ(t.stats.nodes_expanded, 2U);
  EXPECT_GT(t.root.pruned_children_count, 0U);
}

TEST(Tree, ExhaustiveTreeIsWellFormed) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  const TreeResult t = build_dialectical_tree(r, e.A, exhaustive());
  EXPECT_EQ(t.root.label, NodeLabel::kDefeated);
  EXPECT_EQ(t.stats.nodes_expanded, t.root.size());
  EXPECT_EQ(t.stats.nodes_pruned_alpha_beta, 0U);
  check_labels(t.root, false);
  ArgumentationLine line(e.A);
  check_lines(r.arguments(), t.root, line);
  // The B branch: B is answered by C, which nothing defeats.
  bool found = false;
  for (const auto& c : t.root.children) {
    if (c.argument != e.B) continue;
    found = true;
    EXPECT_EQ(c.label, NodeLabel::kDefeated);
  }
  EXPECT_TRUE(found);
}

TEST(Tree, StrictRootIsSingleUndefeatedNode) {
  Reasoner r(engine());
  const ArgumentId sw1 = r.arguments().arguments_for(lit(engine(), "sw1"))[0];
  const TreeResult t = build_dialectical_tree(r, sw1, exhaustive());
  EXPECT_EQ(t.root.size(), 1U);
  EXPECT_EQ(t.root.label, NodeLabel::kUndefeated);
}

TEST(Tree, DepthLimit) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  QueryOptions o = exhaustive();
  o.max_depth = 1;
  EXPECT_THROW(build_dialectical_tree(r, e.A, o), DepthLimitExceeded);
  o.max_depth = 50;
  EXPECT_NO_THROW(build_dialectical_tree(r, e.A, o));
}

TEST(Tree, AlphaBetaKeepsRootLabels) {
  Reasoner r(engine());
  for (ArgumentId a : all_arguments(r)) {
    for (const Strategy& s : all_strategies()) {
      const TreeResult t = build_dialectical_tree(r, a, s.options());
      check_labels(t.root, s.alpha_beta);
      EXPECT_EQ(t.stats.nodes_expanded, t.root.size());
    }
  }
}

TEST(Justified, EngineArguments) {
  Reasoner r(engine());
  const auto e = test::engine_args(r.arguments());
  EXPECT_FALSE(is_justified(r, e.A, QueryOptions{}));
  EXPECT_TRUE(is_justified(r, e.E, QueryOptions{}));
  EXPECT_TRUE(is_justified(r, e.C, QueryOptions{}));
  EXPECT_FALSE(is_justified(r, e.B, QueryOptions{}));
}

TEST(Answer, EngineQueries) {
  Reasoner r(engine());
  const QueryOptions o;
  EXPECT_EQ(answer_query(r, parse_query("engine_ok"), o).answer, Answer::kNo);
  EXPECT_EQ(answer_query(r, parse_query("~engine_ok"), o).answer, Answer::kYes);
  EXPECT_EQ(answer_query(r, parse_query("low_speed"), o).answer, Answer::kNo);
  EXPECT_EQ(answer_query(r, parse_query("~low_speed"), o).answer, Answer::kYes);
  EXPECT_EQ(answer_query(r, parse_query("oil_ok"), o).answer, Answer::kUndecided);
  EXPECT_EQ(answer_query(r, parse_query("sw1"), o).answer, Answer::kYes);
  EXPECT_EQ(answer_query(r, parse_query("~sw1"), o).answer, Answer::kNo);
  EXPECT_EQ(answer_query(r, parse_query("nonexistent"), o).answer, Answer::kUnknown);
}

TEST(Answer, DecidingTreeIsJustified) {
  Reasoner r(engine());
  const QueryResult q = answer_query(r, parse_query("~engine_ok"), QueryOptions{});
  ASSERT_TRUE(q.deciding_tree.has_value());
  EXPECT_EQ(q.trees[*q.deciding_tree].root.label, NodeLabel::kUndefeated);
  SearchStats sum;
  for (const auto& t : q.trees) sum += t.stats;
  EXPECT_EQ(sum, q.stats);
}

TEST(Answer, ExitCodes) {
  EXPECT_EQ(exit_code(Answer::kYes), 0);
  EXPECT_EQ(exit_code(Answer::kNo), 1);
  EXPECT_EQ(exit_code(Answer::kUndecided), 2);
  EXPECT_EQ(exit_code(Answer::kUnknown), 3);
  EXPECT_EQ(to_string(Answer::kUndecided), "UNDECIDED");
}

TEST(Answer, NoDefeasibleRulesMeansEveryTreeIsALeaf) {
  const KnowledgeBase kb = load_knowledge_base("a. b <- a. ~c <- b.");
  Reasoner r(kb);
  for (const Strategy& s : all_strategies()) {
    const QueryResult q = answer_query(r, parse_query("b"), s.options());
    EXPECT_EQ(q.answer, Answer::kYes);
    EXPECT_EQ(q.stats.nodes_expanded, 1U);
    EXPECT_EQ(answer_query(r, parse_query("c"), s.options()).answer, Answer::kNo);
  }
}

}  // namespace
}  // namespace delp
