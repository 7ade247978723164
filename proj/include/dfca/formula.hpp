#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dfca/context.hpp"

namespace dfca {

/// Compound attribute: an atom (attribute name) or a negation, conjunction or
/// disjunction of compound attributes. Immutable value with shared subtrees.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or };

  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  Kind kind() const noexcept { return node_->kind; }
  /// Attribute name; only for atoms.
  const std::string& name() const;
  /// Operand of a negation.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t depth() const;
  /// Distinct atom names in first-occurrence order.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Canonical text: fully determined by the tree, minimal parentheses, and
/// accepted back by parse_formula.
std::string to_string(const Formula& f);

/// Parses the compound-attribute grammar:
///   formula := conj { "|" conj } ; conj := neg { "&" neg } ;
///   neg := "!" neg | IDENT | QUOTED | "(" formula ")"
Formula parse_formula(std::string_view text);

/// A formula whose atoms are resolved to attribute indices of one context.
class BoundFormula {
 public:
  Formula::Kind kind() const noexcept { return node_->kind; }
  std::size_t attribute() const;
  const BoundFormula& operand() const;
  const BoundFormula& lhs() const;
  const BoundFormula& rhs() const;
  std::size_t attribute_universe() const noexcept { return node_->universe; }

 private:
  friend BoundFormula bind(const FormalContext& ctx, const Formula& f);
  struct Node {
    Formula::Kind kind;
    std::size_t attribute;
    std::size_t universe;
    std::vector<BoundFormula> children;
  };
  explicit BoundFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Resolves every atom against ctx; throws BindingError naming the first
/// unknown atom.
BoundFormula bind(const FormalContext& ctx, const Formula& f);

/// phi^down: the objects satisfying f.
ObjectSet extension(const FormalContext& ctx, const BoundFormula& f);

/// Convenience: bind then evaluate.
ObjectSet extension(const FormalContext& ctx, const Formula& f);

/// Antecedent/consequent pair, either defeasible (|~) or classical (->).
struct Conditional {
  enum class Kind { Defeasible, Classical };

  Formula antecedent;
  Formula consequent;
  Kind kind = Kind::Defeasible;

  static Conditional defeasible(Formula antecedent, Formula consequent) {
    return {std::move(antecedent), std::move(consequent), Kind::Defeasible};
  }
  static Conditional classical(Formula antecedent, Formula consequent) {
    return {std::move(antecedent), std::move(consequent), Kind::Classical};
  }

  friend bool operator==(const Conditional& a, const Conditional& b) {
    return a.kind == b.kind && a.antecedent == b.antecedent && a.consequent == b.consequent;
  }
};

std::string to_string(const Conditional& c);

/// `<formula> |~ <formula>` or `<formula> -> <formula>`.
Conditional parse_conditional(std::string_view text);

struct BoundConditional {
  BoundFormula antecedent;
  BoundFormula consequent;
  Conditional::Kind kind;
};

BoundConditional bind(const FormalContext& ctx, const Conditional& c);

/// The material counterpart !antecedent | consequent.
Formula materialise(const Conditional& c);

/// Classical reading phi -> psi over compound attributes: phi^down within psi^down.
bool implication_holds(const FormalContext& ctx, const BoundConditional& c);

/// Conjunction of the named attributes of a non-empty set, in index order.
Formula conjunction_of(const FormalContext& ctx, const AttributeSet& attributes);

}  // namespace dfca
