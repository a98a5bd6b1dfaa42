#pragma once

// Deliberately naive reference implementations over plain strings. They share
// no code with the engine and only scale to small programs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "delp/program.hpp"

namespace delp::brute {

struct SRule {
  std::string head;
  std::set<std::string> body;
};

struct SProgram {
  std::vector<SRule> strict;
  std::vector<SRule> defeasible;
};

inline std::string neg(const std::string& l) { return l[0] == '~' ? l.substr(1) : "~" + l; }

inline SProgram from(const Program& p) {
  SProgram out;
  auto conv = [](const Rule& r) {
    SRule s{to_string(r.head), {}};
    for (const auto& b : r.body) s.body.insert(to_string(b));
    return s;
  };
  for (const auto& r : p.strict_rules) out.strict.push_back(conv(r));
  for (const auto& r : p.defeasible_rules) out.defeasible.push_back(conv(r));
  return out;
}

inline std::set<std::string> closure(const std::vector<SRule>& rules, std::set<std::string> facts = {}) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (facts.count(r.head)) continue;
      bool ok = true;
      for (const auto& b : r.body) ok = ok && facts.count(b) > 0;
      if (ok) {
        facts.insert(r.head);
        changed = true;
      }
    }
  }
  return facts;
}

inline bool contradictory(const std::set<std::string>& s) {
  for (const auto& l : s) {
    if (s.count(neg(l))) return true;
  }
  return false;
}

inline std::vector<SRule> with(const SProgram& p, const std::vector<std::size_t>& picked) {
  std::vector<SRule> rules = p.strict;
  for (std::size_t i : picked) rules.push_back(p.defeasible[i]);
  return rules;
}

/// Arguments for q as sorted index sets into p.defeasible, by scanning every
/// subset in size order.
inline std::vector<std::vector<std::size_t>> arguments(const SProgram& p, const std::string& q) {
  std::vector<std::vector<std::size_t>> found;
  const std::size_t n = p.defeasible.size();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1U << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : masks) {
    bool super = false;
    for (std::uint32_t k : minimal) super = super || (m & k) == k;
    if (super) continue;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < n; ++i) {
      if (m >> i & 1U) picked.push_back(i);
    }
    const auto cl = closure(with(p, picked));
    if (!cl.count(q)) continue;
    minimal.push_back(m);  // minimal derivers, consistent or not
    if (!contradictory(cl)) found.push_back(picked);
  }
  return found;
}

inline bool conflicts(const SProgram& p, const std::string& s, const std::string& q) {
  return contradictory(closure(p.strict, {s, q}));
}

}  // namespace delp::brute
