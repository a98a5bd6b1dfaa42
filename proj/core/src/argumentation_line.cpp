#include "delp/argumentation_line.hpp"

#include <algorithm>
#include <set>

#include "delp/derivation.hpp"

namespace delp {

ArgumentationLine::ArgumentationLine(std::initializer_list<ArgumentId> args) {
  bool first = true;
  for (ArgumentId a : args) {
    entries_.push_back({a, std::nullopt, first ? DefeatClass::kNone : DefeatClass::kBlocking});
    first = false;
  }
}

bool ArgumentationLine::contains(ArgumentId a) const {
  return std::any_of(entries_.begin(), entries_.end(), [a](const LineEntry& e) { return e.argument == a; });
}

LiteralSet parity_co(const ArgumentStore& store, const ArgumentationLine& line, std::size_t k, int parity) {
  LiteralSet co = store.kb().empty_set();
  for (std::size_t i = static_cast<std::size_t>(parity); i <= k && i < line.size(); i += 2) {
    co |= store[line[i].argument].co;
  }
  return co;
}

LiteralSet shared_basis(const ArgumentStore& store, const ArgumentationLine& line, std::size_t k) {
  return strict_closure_with(store.kb(), {}, parity_co(store, line, k, 0) & parity_co(store, line, k, 1));
}

bool is_concordant(const ArgumentStore& store, const ArgumentationLine& line) {
  const KnowledgeBase& kb = store.kb();
  const std::size_t last = line.size() - 1;
  for (int parity : {0, 1}) {
    if (has_complementary_pair(kb, strict_closure_with(kb, {}, parity_co(store, line, last, parity)))) return false;
  }
  return true;
}

bool is_acceptable_line(const ArgumentStore& store, const ArgumentationLine& line) {
  std::set<ArgumentId> seen;
  for (const auto& e : line.entries()) {
    if (!seen.insert(e.argument).second) return false;
  }
  return is_concordant(store, line);
}

}  // namespace delp
