#include "delp/literal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace delp {

bool is_variable_name(std::string_view name) {
  if (name.empty()) return false;
  const unsigned char c = static_cast<unsigned char>(name.front());
  return std::isupper(c) || c == '_';
}

bool Literal::is_ground() const {
  return std::none_of(args.begin(), args.end(),
                      [](const std::string& t) { return is_variable_name(t); });
}

Literal complement(Literal l) {
  l.negated = !l.negated;
  return l;
}

std::string atom_text(const Literal& l) {
  std::string out = l.atom;
  if (!l.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ',';
      out += l.args[i];
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Literal& l) {
  return l.negated ? "~" + atom_text(l) : atom_text(l);
}

std::size_t LiteralHash::operator()(const Literal& l) const noexcept {
  std::size_t h = std::hash<std::string>{}(l.atom);
  for (const auto& a : l.args) {
    h ^= std::hash<std::string>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ (l.negated ? 0x5bd1e995ULL : 0);
}

}  // namespace delp
