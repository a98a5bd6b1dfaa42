#include "delp/parser.hpp"

#include <cctype>
#include <optional>

namespace delp {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kName, kVariable, kTilde, kLParen, kRParen, kComma, kDot, kStrict, kDefeasible, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kName: return "identifier";
    case Tok::kVariable: return "variable";
    case Tok::kTilde: return "'~'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kStrict: return "'<-'";
    case Tok::kDefeasible: return "'-<'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::kEnd, "", line, col};
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '~': return single(Tok::kTilde);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case ',': return single(Tok::kComma);
      case '.': return single(Tok::kDot);
      case '<':
        if (peek(1) == '-') {
          advance();
          advance();
          return {Tok::kStrict, "<-", line, col};
        }
        break;
      case '-':
        if (peek(1) == '<') {
          advance();
          advance();
          return {Tok::kDefeasible, "-<", line, col};
        }
        break;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        word += src_[pos_];
        advance();
      }
      return {is_variable_name(word) ? Tok::kVariable : Tok::kName, word, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  char peek(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Program program(std::vector<std::string>* warnings) {
    Program p;
    while (cur_.kind != Tok::kEnd) {
      const std::size_t line = cur_.line;
      Rule r = rule();
      expect(Tok::kDot, "expected '.' at end of statement");
      if (!p.add_rule(r) && warnings) {
        warnings->push_back("line " + std::to_string(line) +
                            ": duplicate rule ignored: " + to_string(r));
      }
    }
    return p;
  }

  Literal single_literal() {
    Literal l = literal();
    if (cur_.kind == Tok::kDot) shift();
    if (cur_.kind != Tok::kEnd) fail("unexpected " + std::string(describe(cur_.kind)) + " after query");
    return l;
  }

 private:
  Rule rule() {
    Rule r;
    r.head = literal();
    if (cur_.kind != Tok::kStrict && cur_.kind != Tok::kDefeasible) {
      r.kind = RuleKind::kStrict;
      return r;
    }
    r.kind = cur_.kind == Tok::kStrict ? RuleKind::kStrict : RuleKind::kDefeasible;
    shift();
    if (cur_.kind == Tok::kDot) {
      if (r.is_strict()) fail("empty body after '<-'; write 'true' or drop the arrow");
      return r;
    }
    if (cur_.kind == Tok::kName && cur_.text == "true") {
      shift();
      return r;
    }
    for (;;) {
      Literal l = literal();
      bool seen = false;
      for (const auto& b : r.body) seen = seen || b == l;
      if (!seen) r.body.push_back(std::move(l));
      if (cur_.kind != Tok::kComma) break;
      shift();
    }
    return r;
  }

  Literal literal() {
    Literal l;
    if (cur_.kind == Tok::kTilde) {
      l.negated = true;
      shift();
      if (cur_.kind == Tok::kTilde) fail("double negation is not allowed");
    }
    if (cur_.kind == Tok::kVariable) fail("a literal must start with a lowercase atom name, got variable '" + cur_.text + "'");
    if (cur_.kind != Tok::kName) fail("expected literal, got " + std::string(describe(cur_.kind)));
    if (cur_.text == "true") fail("'true' may only appear as a whole rule body");
    l.atom = cur_.text;
    shift();
    if (cur_.kind == Tok::kLParen) {
      shift();
      for (;;) {
        if (cur_.kind != Tok::kName && cur_.kind != Tok::kVariable) {
          fail("expected term, got " + std::string(describe(cur_.kind)));
        }
        l.args.push_back(cur_.text);
        shift();
        if (cur_.kind == Tok::kLParen) fail("function symbols are not supported");
        if (cur_.kind != Tok::kComma) break;
        shift();
      }
      expect(Tok::kRParen, "expected ')' to close argument list");
    }
    return l;
  }

  void expect(Tok k, const std::string& msg) {
    if (cur_.kind == Tok::kEnd) throw ParseError(end_line_, end_column_, msg + ", got end of input");
    if (cur_.kind != k) fail(msg + ", got " + describe(cur_.kind));
    shift();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur_.line, cur_.column, msg);
  }

  void shift() {
    end_line_ = cur_.line;
    end_column_ = cur_.column + cur_.text.size();
    cur_ = lex_.next();
  }

  Lexer lex_;
  Token cur_{Tok::kEnd, "", 1, 1};
  // Just past the previous token, where a missing terminator belongs.
  std::size_t end_line_ = 1;
  std::size_t end_column_ = 1;
};

}  // namespace

Program parse_program(std::string_view text, std::vector<std::string>* warnings) {
  return Parser(text).program(warnings);
}

Literal parse_query(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  if (!t.empty() && t.front() == '~') t.remove_prefix(1);
  if (!t.empty() && is_variable_name(std::string(1, t.front()))) {
    throw ParseError(1, 1, "query must be ground: " + std::string(text));
  }
  Parser p(text);
  Literal l = p.single_literal();
  if (!l.is_ground()) throw ParseError(1, 1, "query must be ground: " + to_string(l));
  return l;
}

}  // namespace delp
