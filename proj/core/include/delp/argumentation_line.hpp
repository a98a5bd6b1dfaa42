#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "delp/argument.hpp"
#include "delp/preference.hpp"

namespace delp {

struct LineEntry {
  ArgumentId argument = 0;
  std::optional<LiteralId> attack_point;  // none for the root
  DefeatClass defeat = DefeatClass::kNone;
};

/// Root-to-node path of a dialectical tree. Even levels support the root,
/// odd levels interfere with it.
class ArgumentationLine {
 public:
  explicit ArgumentationLine(ArgumentId root) { entries_.push_back({root, std::nullopt, DefeatClass::kNone}); }
  /// Bare line without attack points, mostly for tests.
  ArgumentationLine(std::initializer_list<ArgumentId> args);

  void push(const LineEntry& e) { entries_.push_back(e); }
  void pop() { entries_.pop_back(); }

  std::size_t size() const { return entries_.size(); }
  const LineEntry& operator[](std::size_t i) const { return entries_[i]; }
  const LineEntry& back() const { return entries_.back(); }
  std::span<const LineEntry> entries() const { return entries_; }
  bool contains(ArgumentId a) const;

 private:
  std::vector<LineEntry> entries_;
};

/// ⋃ Co of the entries at levels ≤ k with the given parity.
LiteralSet parity_co(const ArgumentStore& store, const ArgumentationLine& line, std::size_t k, int parity);

/// closure(Π ∪ (Co(supporting up to k) ∩ Co(interfering up to k))).
LiteralSet shared_basis(const ArgumentStore& store, const ArgumentationLine& line, std::size_t k);

/// Both parity classes are non-contradictory together with Π.
bool is_concordant(const ArgumentStore& store, const ArgumentationLine& line);

/// No argument occurs twice and the line is concordant.
bool is_acceptable_line(const ArgumentStore& store, const ArgumentationLine& line);

}  // namespace delp
