// delp: query, check, generate and benchmark defeasible logic programs.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "delp/dialectics.hpp"
#include "delp/generator.hpp"
#include "delp/grounding.hpp"
#include "delp/parser.hpp"
#include "delp/strategy.hpp"
#include "delp/tree_export.hpp"

namespace {

constexpr int kUsage = 64;
constexpr int kContradictory = 65;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out << text;
}

delp::KnowledgeBase load(const std::string& text, const std::string& origin) {
  std::vector<std::string> warnings;
  try {
    delp::KnowledgeBase kb = delp::load_knowledge_base(text, &warnings);
    for (const auto& w : warnings) std::cerr << origin << ": warning: " << w << "\n";
    return kb;
  } catch (const delp::ParseError& e) {
    throw Failure{kUsage, origin + ": " + e.what()};
  } catch (const delp::GroundingError& e) {
    throw Failure{kUsage, origin + ": " + e.what()};
  } catch (const delp::ContradictoryStrictRules& e) {
    throw Failure{kContradictory,
                  origin + ": strict rules derive both " + e.literal() + " and " + e.complement()};
  }
}

template <typename T, typename F>
T parse_choice(const std::string& flag, const std::string& value, F parse) {
  const auto v = parse(value);
  if (!v) throw Failure{kUsage, "invalid value for " + flag + ": " + value};
  return *v;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string stats_text(const delp::SearchStats& s) {
  std::ostringstream os;
  os << "arguments_built=" << s.arguments_built << "\n"
     << "nodes_expanded=" << s.nodes_expanded << "\n"
     << "nodes_pruned_alpha_beta=" << s.nodes_pruned_alpha_beta << "\n"
     << "attack_points_considered=" << s.attack_points_considered << "\n"
     << "attack_points_skipped_shared_basis=" << s.attack_points_skipped_shared_basis << "\n";
  return os.str();
}

struct QueryArgs {
  std::string file;
  std::string query;
  std::string order = "shared-basis";
  std::string alpha_beta = "on";
  std::string bound = "co-minus-shared";
  std::string metric = "attacked";
  std::string preference = "top-layer";
  std::string emit;
  std::string out;
  bool stats = false;
  std::size_t max_depth = 0;
};

int run_query(const QueryArgs& a) {
  const delp::KnowledgeBase kb = load(read_file(a.file), a.file);
  delp::Literal q;
  try {
    q = delp::parse_query(a.query);
  } catch (const delp::ParseError& e) {
    throw Failure{kUsage, std::string("query: ") + e.what()};
  }

  delp::QueryOptions opts;
  opts.ordering = parse_choice<delp::Ordering>("--order", a.order, delp::parse_ordering);
  opts.bound = parse_choice<delp::AttackBound>("--bound", a.bound, delp::parse_bound);
  opts.metric = parse_choice<delp::EvalMetric>("--metric", a.metric, delp::parse_metric);
  if (a.alpha_beta != "on" && a.alpha_beta != "off") throw Failure{kUsage, "--alpha-beta must be on or off"};
  opts.alpha_beta = a.alpha_beta == "on";
  if (a.max_depth > 0) opts.max_depth = a.max_depth;
  const auto pref = parse_choice<delp::PreferenceKind>("--preference", a.preference, delp::parse_preference);

  delp::Reasoner reasoner(kb, pref);
  const delp::QueryResult res = delp::answer_query(reasoner, q, opts);
  std::cout << delp::to_string(res.answer) << "\n";

  const delp::TreeResult* shown = nullptr;
  if (res.deciding_tree) {
    shown = &res.trees[*res.deciding_tree];
  } else if (!res.trees.empty()) {
    shown = &res.trees.front();
  }
  if (a.stats) std::cout << stats_text(res.stats);
  if (!a.emit.empty() && shown != nullptr) {
    const delp::TreeView view = delp::to_view(reasoner.arguments(), shown->root);
    write_output(a.out, a.emit == "json" ? delp::to_json(view, &shown->stats) : delp::to_dot(view));
  }
  return delp::exit_code(res.answer);
}

int run_check(const std::string& file) {
  const delp::KnowledgeBase kb = load(read_file(file), file);
  std::cout << file << ": ok, " << kb.strict_rules().size() << " strict and " << kb.defeasible_rules().size()
            << " defeasible ground rules, " << kb.literal_count() << " literals\n";
  return 0;
}

struct GenArgs {
  delp::GeneratorParams params;
  std::string out;
};

int run_gen(const GenArgs& g) {
  try {
    write_output(g.out, delp::to_text(delp::generate_program(g.params)));
  } catch (const delp::GeneratorError& e) {
    throw Failure{kUsage, e.what()};
  }
  return 0;
}

struct BenchArgs {
  std::string file;
  std::size_t random = 0;
  GenArgs gen;
  std::string queries = "all";
  std::string strategies = "all";
  std::string preference = "top-layer";
  std::string report;
};

int run_bench(const BenchArgs& b) {
  std::vector<delp::Strategy> strategies;
  if (b.strategies == "all") {
    strategies = delp::all_strategies();
  } else {
    for (const auto& name : split_csv(b.strategies)) {
      strategies.push_back(parse_choice<delp::Strategy>("--strategies", name, delp::parse_strategy));
    }
  }
  const auto pref = parse_choice<delp::PreferenceKind>("--preference", b.preference, delp::parse_preference);

  std::vector<std::pair<std::string, std::string>> sources;  // (origin, text)
  if (!b.file.empty()) sources.emplace_back(b.file, read_file(b.file));
  for (std::size_t i = 0; i < b.random; ++i) {
    delp::GeneratorParams p = b.gen.params;
    p.seed = b.gen.params.seed + i;
    try {
      sources.emplace_back("random#" + std::to_string(p.seed), delp::to_text(delp::generate_program(p)));
    } catch (const delp::GeneratorError& e) {
      throw Failure{kUsage, e.what()};
    }
  }
  if (sources.empty()) throw Failure{kUsage, "bench needs FILE or --random N"};

  std::vector<delp::StrategyReport> reports;
  for (const auto& [origin, text] : sources) {
    const delp::KnowledgeBase kb = load(text, origin);
    std::vector<delp::Literal> queries;
    if (b.queries == "all") {
      delp::ArgumentStore store(kb);
      for (delp::LiteralId l = 0; l < kb.literal_count(); ++l) {
        if (!store.arguments_for(l).empty()) queries.push_back(kb.literal(l));
      }
    } else {
      for (const auto& s : split_csv(b.queries)) {
        try {
          queries.push_back(delp::parse_query(s));
        } catch (const delp::ParseError& e) {
          throw Failure{kUsage, std::string("query: ") + e.what()};
        }
      }
    }
    for (const auto& q : queries) {
      auto rep = delp::compare_strategies(kb, q, strategies, pref);
      rep.query = origin + " " + rep.query;
      reports.push_back(std::move(rep));
    }
  }
  write_output(b.report, delp::to_csv(reports));

  std::cerr << "strategy,mean_nodes\n";
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    double sum = 0;
    for (const auto& r : reports) sum += static_cast<double>(r.rows[i].nodes);
    std::cerr << strategies[i].name() << "," << (reports.empty() ? 0.0 : sum / static_cast<double>(reports.size()))
              << "\n";
  }
  return 0;
}

void add_gen_flags(CLI::App* app, GenArgs& g) {
  app->add_option("--atoms", g.params.num_atoms, "Number of atoms")->check(CLI::PositiveNumber);
  app->add_option("--strict", g.params.num_strict, "Number of strict rules");
  app->add_option("--defeasible", g.params.num_defeasible, "Number of defeasible rules");
  app->add_option("--max-body", g.params.max_body, "Maximum body length");
  app->add_option("--neg-prob", g.params.negation_prob, "Probability of a conflicting head")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--seed", g.params.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible logic programming engine"};
  app.require_subcommand(1);

  QueryArgs qa;
  auto* query = app.add_subcommand("query", "Answer a query (exit 0 YES, 1 NO, 2 UNDECIDED, 3 UNKNOWN)");
  query->add_option("FILE", qa.file, "Program file")->required();
  query->add_option("-q,--query", qa.query, "Ground literal, e.g. ~engine_ok")->required();
  query->add_option("--order", qa.order, "textual|shared-basis");
  query->add_option("--alpha-beta", qa.alpha_beta, "on|off");
  query->add_option("--bound", qa.bound, "commit|co|co-minus-shared");
  query->add_option("--metric", qa.metric, "attacked|defeater");
  query->add_option("--preference", qa.preference, "top-layer|generalized");
  query->add_option("--emit-tree", qa.emit, "Print the deciding tree")->check(CLI::IsMember({"json", "dot"}));
  query->add_option("--out", qa.out, "Tree output path (default stdout)");
  query->add_flag("--stats", qa.stats, "Print search counters");
  query->add_option("--max-depth", qa.max_depth, "Fail on trees deeper than N")->check(CLI::PositiveNumber);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Parse, ground and check a program");
  check->add_option("FILE", check_file, "Program file")->required();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random program");
  add_gen_flags(gen, ga);
  gen->add_option("--out", ga.out, "Output path (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compare search strategies, CSV report");
  bench->add_option("FILE", ba.file, "Program file");
  bench->add_option("--random", ba.random, "Also run N generated programs (seeds --seed, --seed+1, ...)");
  add_gen_flags(bench, ba.gen);
  bench->add_option("--queries", ba.queries, "all|comma-separated literals");
  bench->add_option("--strategies", ba.strategies, "all|comma-separated order:ab|noab:bound:metric");
  bench->add_option("--preference", ba.preference, "top-layer|generalized");
  bench->add_option("--report", ba.report, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*query) return run_query(qa);
    if (*check) return run_check(check_file);
    if (*gen) return run_gen(ga);
    if (*bench) return run_bench(ba);
  } catch (const Failure& f) {
    std::cerr << "delp: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "delp: " << e.what() << "\n";
    return 70;
  }
  return kUsage;
}
