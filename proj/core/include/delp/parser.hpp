#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "delp/literal.hpp"
#include "delp/program.hpp"

namespace delp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the `.dlp` rule language:
///
///   program := { rule "." }
///   rule    := literal [ ("<-" | "-<") body ]
///   body    := "true" | literal { "," literal }
///   literal := ["~"] atom
///   atom    := lcname [ "(" term { "," term } ")" ]
///
/// `%` starts a comment running to end of line. `h -<.` is accepted as a
/// synonym for `h -< true.`. Duplicate rules are dropped; when `warnings` is
/// non-null a message is appended for each one.
Program parse_program(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Parses a single ground literal, with an optional trailing period.
Literal parse_query(std::string_view text);

}  // namespace delp
