#include "dfca/formula.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace dfca {

using detail::Lexer;
using detail::TokenKind;

Formula Formula::atom(std::string name) {
  if (name.empty()) throw StructuralError("atom name must not be empty");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

const std::string& Formula::name() const {
  if (kind() != Kind::Atom) throw StructuralError("not an atom");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (kind() != Kind::Not) throw StructuralError("not a negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[1];
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
  return d;
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  auto visit = [&](auto&& self, const Formula& f) -> void {
    if (f.kind() == Kind::Atom) {
      if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
      return;
    }
    for (const auto& c : f.node_->children) self(self, c);
  };
  visit(visit, *this);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.name() == b.name();
  return a.node_->children == b.node_->children;
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    case Formula::Kind::Atom: return 4;
  }
  return 0;
}

void print(const Formula& f, std::string& out) {
  auto sub = [&](const Formula& child, bool parens) {
    if (parens) out += '(';
    print(child, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += detail::quote_if_needed(f.name());
      return;
    case Formula::Kind::Not:
      out += '!';
      sub(f.operand(), precedence(f.operand().kind()) < precedence(Formula::Kind::Not));
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const int p = precedence(f.kind());
      sub(f.lhs(), precedence(f.lhs().kind()) < p);
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      sub(f.rhs(), precedence(f.rhs().kind()) <= p);
      return;
    }
  }
}

Formula parse_disjunction(Lexer& lex);

Formula parse_negation(Lexer& lex) {
  if (lex.accept(TokenKind::Not)) return Formula::negation(parse_negation(lex));
  if (lex.peek().kind == TokenKind::Name) return Formula::atom(lex.take().text);
  if (lex.accept(TokenKind::LParen)) {
    Formula inner = parse_disjunction(lex);
    if (!lex.accept(TokenKind::RParen)) lex.fail("')'");
    return inner;
  }
  lex.fail("attribute name, '!' or '('");
}

Formula parse_conjunction(Lexer& lex) {
  Formula f = parse_negation(lex);
  while (lex.accept(TokenKind::And)) f = Formula::conjunction(f, parse_negation(lex));
  return f;
}

Formula parse_disjunction(Lexer& lex) {
  Formula f = parse_conjunction(lex);
  while (lex.accept(TokenKind::Or)) f = Formula::disjunction(f, parse_conjunction(lex));
  return f;
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

Formula parse_formula(std::string_view text) {
  Lexer lex(text);
  Formula f = parse_disjunction(lex);
  if (lex.peek().kind != TokenKind::End) lex.fail("'&', '|' or end of input");
  return f;
}

Conditional parse_conditional(std::string_view text) {
  Lexer lex(text);
  Formula antecedent = parse_disjunction(lex);
  Conditional::Kind kind;
  if (lex.accept(TokenKind::Defeasible)) {
    kind = Conditional::Kind::Defeasible;
  } else if (lex.accept(TokenKind::Implies)) {
    kind = Conditional::Kind::Classical;
  } else {
    lex.fail("'|~' or '->'");
  }
  Formula consequent = parse_disjunction(lex);
  if (lex.peek().kind != TokenKind::End) lex.fail("'&', '|' or end of input");
  return {std::move(antecedent), std::move(consequent), kind};
}

std::string to_string(const Conditional& c) {
  return to_string(c.antecedent) +
         (c.kind == Conditional::Kind::Defeasible ? " |~ " : " -> ") + to_string(c.consequent);
}

std::size_t BoundFormula::attribute() const {
  if (kind() != Formula::Kind::Atom) throw StructuralError("not an atom");
  return node_->attribute;
}

const BoundFormula& BoundFormula::operand() const {
  if (kind() != Formula::Kind::Not) throw StructuralError("not a negation");
  return node_->children[0];
}

const BoundFormula& BoundFormula::lhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[0];
}

const BoundFormula& BoundFormula::rhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[1];
}

BoundFormula bind(const FormalContext& ctx, const Formula& f) {
  using Node = BoundFormula::Node;
  const std::size_t universe = ctx.attribute_count();
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto m = ctx.find_attribute(f.name());
      if (!m) throw BindingError(f.name());
      return BoundFormula(std::make_shared<const Node>(Node{f.kind(), *m, universe, {}}));
    }
    case Formula::Kind::Not:
      return BoundFormula(
          std::make_shared<const Node>(Node{f.kind(), 0, universe, {bind(ctx, f.operand())}}));
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return BoundFormula(std::make_shared<const Node>(
          Node{f.kind(), 0, universe, {bind(ctx, f.lhs()), bind(ctx, f.rhs())}}));
  }
  throw StructuralError("unknown formula kind");
}

ObjectSet extension(const FormalContext& ctx, const BoundFormula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (f.attribute_universe() != ctx.attribute_count()) {
        throw StructuralError("formula is bound to a different context");
      }
      return ctx.column(f.attribute());
    case Formula::Kind::Not:
      return extension(ctx, f.operand()).complement();
    case Formula::Kind::And:
      return extension(ctx, f.lhs()) & extension(ctx, f.rhs());
    case Formula::Kind::Or:
      return extension(ctx, f.lhs()) | extension(ctx, f.rhs());
  }
  throw StructuralError("unknown formula kind");
}

ObjectSet extension(const FormalContext& ctx, const Formula& f) {
  return extension(ctx, bind(ctx, f));
}

BoundConditional bind(const FormalContext& ctx, const Conditional& c) {
  return {bind(ctx, c.antecedent), bind(ctx, c.consequent), c.kind};
}

Formula materialise(const Conditional& c) {
  return Formula::disjunction(Formula::negation(c.antecedent), c.consequent);
}

bool implication_holds(const FormalContext& ctx, const BoundConditional& c) {
  return extension(ctx, c.antecedent).is_subset_of(extension(ctx, c.consequent));
}

Formula conjunction_of(const FormalContext& ctx, const AttributeSet& attributes) {
  auto members = attributes.to_vector();
  if (members.empty()) throw StructuralError("conjunction of an empty attribute set");
  Formula f = Formula::atom(ctx.attributes()[members[0]]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    f = Formula::conjunction(f, Formula::atom(ctx.attributes()[members[i]]));
  }
  return f;
}

}  // namespace dfca
