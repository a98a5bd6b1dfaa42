#include "delp/program.hpp"

#include <algorithm>

namespace delp {

bool Rule::is_ground() const {
  return head.is_ground() &&
         std::all_of(body.begin(), body.end(), [](const Literal& l) { return l.is_ground(); });
}

bool Rule::same_as(const Rule& other) const {
  if (kind != other.kind || head != other.head || body.size() != other.body.size()) {
    return false;
  }
  auto a = body;
  auto b = other.body;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string to_string(const Rule& r) {
  std::string out = to_string(r.head);
  if (r.body.empty()) {
    return r.is_strict() ? out + "." : out + " -< true.";
  }
  out += r.is_strict() ? " <- " : " -< ";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.body[i]);
  }
  return out + ".";
}

namespace {

void collect_constants(const Literal& l, std::set<std::string>& out) {
  for (const auto& t : l.args) {
    if (!is_variable_name(t)) out.insert(t);
  }
}

}  // namespace

bool Program::add_rule(Rule r) {
  auto& bucket = r.is_strict() ? strict_rules : defeasible_rules;
  if (std::any_of(bucket.begin(), bucket.end(), [&](const Rule& x) { return x.same_as(r); })) {
    return false;
  }
  collect_constants(r.head, constants);
  for (const auto& l : r.body) collect_constants(l, constants);
  bucket.push_back(std::move(r));
  return true;
}

bool Program::is_ground() const {
  auto ground = [](const Rule& r) { return r.is_ground(); };
  return std::all_of(strict_rules.begin(), strict_rules.end(), ground) &&
         std::all_of(defeasible_rules.begin(), defeasible_rules.end(), ground);
}

std::string to_text(const Program& p) {
  std::string out;
  for (const auto& r : p.strict_rules) out += to_string(r) + "\n";
  for (const auto& r : p.defeasible_rules) out += to_string(r) + "\n";
  return out;
}

}  // namespace delp
