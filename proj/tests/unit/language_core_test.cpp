#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "delp/generator.hpp"
#include "delp/grounding.hpp"
#include "delp/knowledge_base.hpp"
#include "delp/parser.hpp"
#include "support/fixtures.hpp"

namespace delp {
namespace {

TEST(Parser, EngineProgramSplitsStrictAndDefeasible) {
  const Program p = parse_program(test::read_data("engine.dlp"));
  EXPECT_EQ(p.strict_rules.size(), 5U);
  EXPECT_EQ(p.defeasible_rules.size(), 11U);
  EXPECT_TRUE(p.is_ground());
}

TEST(Parser, EmptyInputIsEmptyProgram) {
  EXPECT_EQ(parse_program("").size(), 0U);
  EXPECT_EQ(parse_program("  % only a comment\n").size(), 0U);
}

TEST(Parser, MissingPeriodReportsPosition) {
  try {
    parse_program("a <- b");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1U);
    EXPECT_EQ(e.column(), 7U);
    EXPECT_NE(std::string(e.what()).find("expected '.'"), std::string::npos);
  }
}

TEST(Parser, RejectsMalformedLiterals) {
  EXPECT_THROW(parse_program("~~a."), ParseError);
  EXPECT_THROW(parse_program("p(f(x))."), ParseError);
  EXPECT_THROW(parse_program("X <- a."), ParseError);
  EXPECT_THROW(parse_program("a <- ."), ParseError);
  EXPECT_THROW(parse_program("a <- true, b."), ParseError);
}

TEST(Parser, PresumptionSpellings) {
  const Program p = parse_program("a -< true.\nb -< .\n");
  ASSERT_EQ(p.defeasible_rules.size(), 2U);
  EXPECT_TRUE(p.defeasible_rules[0].is_presumption());
  EXPECT_TRUE(p.defeasible_rules[1].is_presumption());
  EXPECT_EQ(to_string(p.defeasible_rules[1]), "b -< true.");
}

TEST(Parser, FactsAndStrictRules) {
  const Program p = parse_program("a. b <- true. c <- a, b.");
  ASSERT_EQ(p.strict_rules.size(), 3U);
  EXPECT_TRUE(p.strict_rules[0].is_fact());
  EXPECT_TRUE(p.strict_rules[1].is_fact());
  EXPECT_EQ(to_string(p.strict_rules[2]), "c <- a, b.");
}

TEST(Parser, DuplicateRulesWarnAndCollapse) {
  std::vector<std::string> warnings;
  const Program p = parse_program("a -< b, c.\na -< c, b.\n", &warnings);
  EXPECT_EQ(p.defeasible_rules.size(), 1U);
  ASSERT_EQ(warnings.size(), 1U);
  EXPECT_NE(warnings[0].find("line 2"), std::string::npos);
}

TEST(Parser, RepeatedBodyLiteralKeptOnce) {
  const Program p = parse_program("a -< b, b.");
  EXPECT_EQ(p.defeasible_rules[0].body.size(), 1U);
}

TEST(Query, GroundLiteralsParse) {
  EXPECT_EQ(to_string(parse_query("engine_ok")), "engine_ok");
  const Literal n = parse_query("~fuel_ok");
  EXPECT_TRUE(n.negated);
  EXPECT_EQ(n.atom, "fuel_ok");
  EXPECT_EQ(to_string(parse_query("flies(tweety).")), "flies(tweety)");
}

TEST(Query, NonGroundQueryRejected) {
  for (const char* q : {"X", "~X", "p(X)"}) {
    try {
      parse_query(q);
      FAIL() << q;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("query must be ground"), std::string::npos) << q;
    }
  }
}

TEST(Literal, ComplementIsAnInvolution) {
  const Literal a = parse_query("a");
  const Literal nb = parse_query("~b");
  EXPECT_EQ(to_string(complement(a)), "~a");
  EXPECT_EQ(to_string(complement(nb)), "b");
  EXPECT_EQ(complement(complement(a)), a);
  EXPECT_EQ(complement(complement(nb)), nb);
  EXPECT_EQ(atom_text(nb), "b");
}

TEST(Grounding, GroundProgramUnchanged) {
  const Program p = parse_program(test::read_data("engine.dlp"));
  EXPECT_EQ(to_text(ground_program(p)), to_text(p));
}

TEST(Grounding, InstantiatesOverConstants) {
  const Program p = parse_program("bird(tweety). bird(opus). flies(X) -< bird(X).");
  const Program g = ground_program(p);
  ASSERT_EQ(g.defeasible_rules.size(), 2U);
  EXPECT_TRUE(g.is_ground());
  std::vector<std::string> texts;
  for (const auto& r : g.defeasible_rules) texts.push_back(to_string(r));
  EXPECT_NE(std::find(texts.begin(), texts.end(), "flies(tweety) -< bird(tweety)."), texts.end());
  EXPECT_NE(std::find(texts.begin(), texts.end(), "flies(opus) -< bird(opus)."), texts.end());
}

TEST(Grounding, Idempotent) {
  const Program p = parse_program("bird(tweety). penguin(opus). bird(X) <- penguin(X). ~flies(X) -< penguin(X).");
  const Program once = ground_program(p);
  EXPECT_EQ(to_text(ground_program(once)), to_text(once));
}

TEST(Grounding, UnsafeHeadVariableRejected) {
  const Program p = parse_program("q(a). p(X) <- true.");
  EXPECT_THROW(ground_program(p), GroundingError);
}

TEST(KnowledgeBase, ContradictoryStrictPartRejected) {
  try {
    load_knowledge_base(test::read_data("contradictory.dlp"));
    FAIL() << "expected ContradictoryStrictRules";
  } catch (const ContradictoryStrictRules& e) {
    EXPECT_EQ(atom_text(parse_query(e.literal())), "q");
  }
}

TEST(KnowledgeBase, InternsComplements) {
  const KnowledgeBase& kb = test::engine();
  const LiteralId f = test::lit(kb, "fuel_ok");
  EXPECT_EQ(kb.name(kb.complement(f)), "~fuel_ok");
  EXPECT_EQ(kb.complement(kb.complement(f)), f);
  EXPECT_TRUE(kb.find(parse_query("~sw1")).has_value());
  EXPECT_FALSE(kb.find(parse_query("nonexistent")).has_value());
  EXPECT_EQ(kb.strict_rules().size(), 5U);
  EXPECT_EQ(kb.defeasible_rules().size(), 11U);
}

TEST(RoundTrip, GeneratedProgramsSurviveTextForm) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorParams gp;
    gp.seed = seed;
    gp.max_body = 1 + seed % 3;
    const Program p = generate_program(gp);
    const Program q = parse_program(to_text(p));
    EXPECT_EQ(to_text(q), to_text(p)) << "seed " << seed;
    ASSERT_EQ(q.size(), p.size());
    for (std::size_t i = 0; i < p.defeasible_rules.size(); ++i) {
      EXPECT_TRUE(q.defeasible_rules[i].same_as(p.defeasible_rules[i]));
    }
  }
}

TEST(RoundTrip, EngineSurvivesTextForm) {
  const Program p = parse_program(test::read_data("engine.dlp"));
  EXPECT_EQ(to_text(parse_program(to_text(p))), to_text(p));
}

}  // namespace
}  // namespace delp
