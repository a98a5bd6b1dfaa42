#include "delp/strategy.hpp"

#include <chrono>
#include <sstream>

namespace delp {

QueryOptions Strategy::options() const {
  QueryOptions o;
  o.ordering = ordering;
  o.alpha_beta = alpha_beta;
  o.bound = bound;
  o.metric = metric;
  return o;
}

std::string Strategy::name() const {
  std::string out(to_string(ordering));
  out += alpha_beta ? ":ab:" : ":noab:";
  out += to_string(bound);
  out += ':';
  out += to_string(metric);
  return out;
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(':');
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  if (parts.size() != 4) return std::nullopt;
  Strategy st;
  const auto order = parse_ordering(parts[0]);
  const auto bound = parse_bound(parts[2]);
  const auto metric = parse_metric(parts[3]);
  if (!order || !bound || !metric || (parts[1] != "ab" && parts[1] != "noab")) return std::nullopt;
  st.ordering = *order;
  st.alpha_beta = parts[1] == "ab";
  st.bound = *bound;
  st.metric = *metric;
  return st;
}

std::vector<Strategy> all_strategies() {
  std::vector<Strategy> out;
  for (Ordering o : {Ordering::kTextual, Ordering::kSharedBasis}) {
    for (bool ab : {false, true}) {
      for (AttackBound b : {AttackBound::kCommit, AttackBound::kCo, AttackBound::kCoMinusShared}) {
        for (EvalMetric m : {EvalMetric::kAttackedSurface, EvalMetric::kDefeaterSurface}) {
          out.push_back({o, ab, b, m});
        }
      }
    }
  }
  return out;
}

StrategyReport compare_strategies(const KnowledgeBase& kb, const Literal& q, std::span<const Strategy> strategies,
                                  PreferenceKind preference) {
  StrategyReport rep;
  rep.query = to_string(q);
  for (const Strategy& s : strategies) {
    Reasoner r(kb, preference);
    const auto t0 = std::chrono::steady_clock::now();
    QueryResult res = answer_query(r, q, s.options());
    const auto t1 = std::chrono::steady_clock::now();
    StrategyRow row{s, res.answer, 0, res.stats, std::chrono::duration<double, std::milli>(t1 - t0).count()};
    for (const auto& t : res.trees) row.nodes += t.root.size();
    if (!rep.rows.empty() && rep.rows.front().answer != row.answer) {
      throw AnswerMismatch(rep.query + ": " + rep.rows.front().strategy.name() + " answers " +
                           std::string(to_string(rep.rows.front().answer)) + " but " + s.name() + " answers " +
                           std::string(to_string(row.answer)));
    }
    rep.rows.push_back(row);
  }
  return rep;
}

std::string to_csv(std::span<const StrategyReport> reports) {
  std::ostringstream os;
  os << "query,ordering,alpha_beta,bound,metric,answer,nodes,arguments_built,nodes_expanded,"
        "nodes_pruned_alpha_beta,attack_points_considered,attack_points_skipped_shared_basis,wall_ms\n";
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      os << '"' << rep.query << "\"," << to_string(r.strategy.ordering) << ',' << (r.strategy.alpha_beta ? "on" : "off")
         << ',' << to_string(r.strategy.bound) << ',' << to_string(r.strategy.metric) << ',' << to_string(r.answer)
         << ',' << r.nodes << ',' << r.stats.arguments_built << ',' << r.stats.nodes_expanded << ','
         << r.stats.nodes_pruned_alpha_beta << ',' << r.stats.attack_points_considered << ','
         << r.stats.attack_points_skipped_shared_basis << ',' << r.wall_ms << '\n';
    }
  }
  return os.str();
}

}  // namespace delp
