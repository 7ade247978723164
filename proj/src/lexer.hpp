#pragma once

// Tokenizer shared by the compound-attribute and propositional grammars.

#include <cstddef>
#include <string>
#include <string_view>

#include "dfca/error.hpp"

namespace dfca::detail {

enum class TokenKind {
  Name,       // bare identifier or quoted string
  Not,        // !
  And,        // &
  Or,         // |
  Defeasible, // |~
  Implies,    // ->
  Iff,        // <->
  LParen,
  RParen,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // unquoted name for Name tokens
  bool quoted = false;
  std::size_t offset = 0;
};

const char* describe(TokenKind kind);

bool is_ident_start(char c);
bool is_ident_char(char c);
/// True when `name` can be printed without quotes.
bool is_bare_identifier(std::string_view name);
/// Name as it appears in source text: bare if possible, otherwise quoted.
std::string quote_if_needed(const std::string& name);

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool accept(TokenKind kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const;

 private:
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace dfca::detail
