#include "lexer.hpp"

namespace dfca::detail {

const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Name: return "name";
    case TokenKind::Not: return "'!'";
    case TokenKind::And: return "'&'";
    case TokenKind::Or: return "'|'";
    case TokenKind::Defeasible: return "'|~'";
    case TokenKind::Implies: return "'->'";
    case TokenKind::Iff: return "'<->'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
}

bool is_bare_identifier(std::string_view name) {
  if (name.empty() || !is_ident_start(name.front())) return false;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (!is_ident_char(name[i])) return false;
    // "a->b" would lex as an arrow.
    if (name[i] == '-' && i + 1 < name.size() && name[i + 1] == '>') return false;
  }
  // A trailing '-' followed by '>' in context would also be ambiguous.
  return name.back() != '-';
}

std::string quote_if_needed(const std::string& name) {
  if (is_bare_identifier(name)) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void Lexer::fail(const std::string& expected) const {
  std::string found = current_.kind == TokenKind::Name
                          ? "name '" + current_.text + "'"
                          : std::string(describe(current_.kind));
  throw ParseError("expected " + expected + ", found " + found, current_.offset);
}

void Lexer::advance() {
  while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                 text_[pos_] == '\r' || text_[pos_] == '\n')) {
    ++pos_;
  }
  current_ = Token{};
  current_.offset = pos_;
  if (pos_ >= text_.size()) {
    current_.kind = TokenKind::End;
    return;
  }
  const char c = text_[pos_];
  auto next_is = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
  if (next_is("|~")) {
    current_.kind = TokenKind::Defeasible;
    pos_ += 2;
  } else if (next_is("->")) {
    current_.kind = TokenKind::Implies;
    pos_ += 2;
  } else if (next_is("<->")) {
    current_.kind = TokenKind::Iff;
    pos_ += 3;
  } else if (c == '!') {
    current_.kind = TokenKind::Not;
    ++pos_;
  } else if (c == '&') {
    current_.kind = TokenKind::And;
    ++pos_;
  } else if (c == '|') {
    current_.kind = TokenKind::Or;
    ++pos_;
  } else if (c == '(') {
    current_.kind = TokenKind::LParen;
    ++pos_;
  } else if (c == ')') {
    current_.kind = TokenKind::RParen;
    ++pos_;
  } else if (c == '"') {
    const std::size_t start = pos_++;
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) throw ParseError("unterminated quoted name", start);
      char d = text_[pos_++];
      if (d == '"') break;
      if (d == '\\') {
        if (pos_ >= text_.size()) throw ParseError("unterminated quoted name", start);
        d = text_[pos_++];
      }
      value += d;
    }
    if (value.empty()) throw ParseError("empty quoted name", start);
    current_.kind = TokenKind::Name;
    current_.text = std::move(value);
    current_.quoted = true;
  } else if (is_ident_start(c)) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      ++pos_;
    }
    current_.kind = TokenKind::Name;
    current_.text = std::string(text_.substr(start, pos_ - start));
  } else {
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
}

}  // namespace dfca::detail
