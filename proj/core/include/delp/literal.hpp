#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace delp {

/// Terms are plain identifiers. A leading uppercase letter or underscore
/// marks a variable; anything else is a constant.
bool is_variable_name(std::string_view name);

/// A ground or non-ground atom, optionally under strong negation.
///
/// Negation is a single flag, so `~~p` is not representable and
/// complement() is an involution by construction.
struct Literal {
  std::string atom;
  std::vector<std::string> args;
  bool negated = false;

  bool is_ground() const;
  auto operator<=>(const Literal&) const = default;
};

/// Flips the negation flag; atom and arguments are untouched.
Literal complement(Literal l);

/// `p(a,b)` / `~p(a,b)`, the same form the parser accepts.
std::string to_string(const Literal& l);

/// The atom without its sign, e.g. `p(a,b)` for `~p(a,b)`.
std::string atom_text(const Literal& l);

struct LiteralHash {
  std::size_t operator()(const Literal& l) const noexcept;
};

}  // namespace delp
