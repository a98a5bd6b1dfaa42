#include "delp/grounding.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace delp {
namespace {

void collect_variables(const Literal& l, std::vector<std::string>& out) {
  for (const auto& t : l.args) {
    if (is_variable_name(t) && std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    }
  }
}

Literal substitute(const Literal& l, const std::map<std::string, std::string>& sigma) {
  Literal out = l;
  for (auto& t : out.args) {
    if (auto it = sigma.find(t); it != sigma.end()) t = it->second;
  }
  return out;
}

}  // namespace

Program ground_program(const Program& p) {
  Program out;
  out.constants = p.constants;
  const std::vector<std::string> constants(p.constants.begin(), p.constants.end());

  auto ground_rule = [&](const Rule& r) {
    if (r.is_ground()) {
      out.add_rule(r);
      return;
    }
    std::vector<std::string> head_vars, body_vars;
    collect_variables(r.head, head_vars);
    for (const auto& l : r.body) collect_variables(l, body_vars);
    for (const auto& v : head_vars) {
      if (std::find(body_vars.begin(), body_vars.end(), v) == body_vars.end()) {
        throw GroundingError("unsafe rule (variable " + v + " occurs only in the head): " +
                             to_string(r));
      }
    }
    if (constants.empty()) return;

    // Odometer over |constants|^|vars| substitutions.
    std::vector<std::size_t> idx(body_vars.size(), 0);
    for (;;) {
      std::map<std::string, std::string> sigma;
      for (std::size_t i = 0; i < body_vars.size(); ++i) sigma[body_vars[i]] = constants[idx[i]];
      Rule g;
      g.kind = r.kind;
      g.head = substitute(r.head, sigma);
      for (const auto& l : r.body) {
        Literal s = substitute(l, sigma);
        if (std::find(g.body.begin(), g.body.end(), s) == g.body.end()) g.body.push_back(std::move(s));
      }
      out.add_rule(std::move(g));

      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == constants.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  };

  for (const auto& r : p.strict_rules) ground_rule(r);
  for (const auto& r : p.defeasible_rules) ground_rule(r);
  return out;
}

}  // namespace delp
