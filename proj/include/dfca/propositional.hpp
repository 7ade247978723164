#pragma once

// Propositional KLM baseline: formulas, valuations, preferential and ranked
// interpretations, BaseRank and rational-closure entailment, and the bridge
// from interpretations to derived contexts.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfca/formula.hpp"
#include "dfca/limits.hpp"
#include "dfca/order.hpp"

namespace dfca::prop {

class PropFormula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff };

  static PropFormula top();
  static PropFormula bottom();
  static PropFormula atom(std::string name);
  static PropFormula negation(PropFormula operand);
  static PropFormula conjunction(PropFormula lhs, PropFormula rhs);
  static PropFormula disjunction(PropFormula lhs, PropFormula rhs);
  static PropFormula implication(PropFormula lhs, PropFormula rhs);
  static PropFormula equivalence(PropFormula lhs, PropFormula rhs);

  Kind kind() const noexcept { return node_->kind; }
  const std::string& name() const;
  const PropFormula& operand() const;
  const PropFormula& lhs() const;
  const PropFormula& rhs() const;

  /// Distinct atom names, sorted.
  std::vector<std::string> atoms() const;

  friend bool operator==(const PropFormula& a, const PropFormula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<PropFormula> children;
  };
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PropFormula make(Kind k, std::vector<PropFormula> children);

  std::shared_ptr<const Node> node_;
};

std::string to_string(const PropFormula& f);

/// Compound-attribute grammar extended with (loosest first) right-associative
/// "<->", right-associative "->", and the constants TOP and BOT.
PropFormula parse_prop_formula(std::string_view text);

/// Fixed, sorted set of atom names.
class AtomUniverse {
 public:
  explicit AtomUniverse(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const AtomUniverse>;

UniversePtr make_universe(std::vector<std::string> names);

/// Total truth assignment over a universe.
class Valuation {
 public:
  Valuation(UniversePtr universe, std::vector<bool> truth);
  /// Atoms not listed are false; throws BindingError for unknown atoms.
  static Valuation from_true_atoms(UniversePtr universe, const std::vector<std::string>& atoms);

  const UniversePtr& universe() const noexcept { return universe_; }
  bool value(std::size_t atom) const { return truth_.at(atom); }
  /// Throws BindingError for atoms outside the universe.
  bool value(const std::string& atom) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.universe_->names() == b.universe_->names() && a.truth_ == b.truth_;
  }

 private:
  UniversePtr universe_;
  std::vector<bool> truth_;
};

/// v ||- alpha. Throws BindingError if alpha mentions an atom outside v's universe.
bool prop_eval(const Valuation& v, const PropFormula& alpha);

/// Gamma |= alpha by enumerating every valuation of the atoms involved.
/// Throws CapacityError above limits.max_atoms atoms.
bool prop_entails(const std::vector<PropFormula>& premises, const PropFormula& alpha,
                  const Limits& limits = {});

struct PropConditional {
  PropFormula antecedent;
  PropFormula consequent;

  /// antecedent -> consequent.
  PropFormula material() const { return PropFormula::implication(antecedent, consequent); }

  friend bool operator==(const PropConditional& a, const PropConditional& b) {
    return a.antecedent == b.antecedent && a.consequent == b.consequent;
  }
};

std::string to_string(const PropConditional& c);

/// `<formula> |~ <formula>`.
PropConditional parse_prop_conditional(std::string_view text);

/// Knowledge-base entry: a defeasible conditional, or a classical formula.
struct PropStatement {
  enum class Kind { Defeasible, Classical };

  Kind kind = Kind::Defeasible;
  PropConditional conditional{PropFormula::top(), PropFormula::top()};  ///< for defeasible statements
  PropFormula formula = PropFormula::top();  ///< for classical statements

  /// Classical alpha enters as !alpha |~ BOT.
  PropConditional as_defeasible() const;

  friend bool operator==(const PropStatement& a, const PropStatement& b);
};

/// `<formula> |~ <formula>`, or a lone formula for a classical statement.
PropStatement parse_prop_statement(std::string_view text);

using PropKnowledgeBase = std::vector<PropStatement>;

class PreferentialInterpretation {
 public:
  /// One label per state; the order ranges over state indices.
  PreferentialInterpretation(UniversePtr universe, std::vector<Valuation> labels,
                             StrictOrder order);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t state_count() const noexcept { return labels_.size(); }
  const Valuation& label(std::size_t state) const { return labels_.at(state); }
  const StrictOrder& order() const noexcept { return order_; }

 private:
  UniversePtr universe_;
  std::vector<Valuation> labels_;
  StrictOrder order_;
};

/// States ranked in N or at infinity (nullopt). Finite ranks are convex.
class RankedInterpretation {
 public:
  RankedInterpretation(UniversePtr universe, std::vector<Valuation> labels,
                       std::vector<std::optional<std::size_t>> ranks);

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t state_count() const noexcept { return labels_.size(); }
  const Valuation& label(std::size_t state) const { return labels_.at(state); }
  std::optional<std::size_t> rank(std::size_t state) const { return ranks_.at(state); }
  const std::vector<std::optional<std::size_t>>& ranks() const noexcept { return ranks_; }

 private:
  UniversePtr universe_;
  std::vector<Valuation> labels_;
  std::vector<std::optional<std::size_t>> ranks_;
};

/// The order-minimal states satisfying the antecedent all satisfy the consequent.
bool pref_satisfies(const PreferentialInterpretation& p, const PropConditional& c);
/// Same with rank-minimal states; states at infinity are not part of the model.
bool pref_satisfies(const RankedInterpretation& r, const PropConditional& c);

struct BaseRankResult {
  /// Finite strata R_0 ... R_{n-1} of conditionals (read as their materials).
  std::vector<std::vector<PropConditional>> strata;
  /// R_infinity.
  std::vector<PropConditional> infinite;

  std::size_t n() const noexcept { return strata.size(); }
};

/// BaseRank: repeatedly keeps the conditionals whose antecedent is refuted by
/// the current materialisation, until nothing more is removed.
BaseRankResult base_rank(const PropKnowledgeBase& kb, const Limits& limits = {});

struct RcVerdict {
  bool entailed = false;
  /// Number of strata dropped before the antecedent stopped being
  /// exceptional; nullopt when it is exceptional at every rank.
  std::optional<std::size_t> antecedent_rank;
};

/// RCProp on a precomputed ranking.
RcVerdict rc_entails(const BaseRankResult& ranking, const PropConditional& query,
                     const Limits& limits = {});
RcVerdict rc_entails(const PropKnowledgeBase& kb, const PropConditional& query,
                     const Limits& limits = {});

/// One object per state, named by `state_names` or "s<i>"; attributes are
/// the universe's atoms; the order is copied.
PreferentialContext derive_preferential_context(
    const PreferentialInterpretation& p, const std::vector<std::string>& state_names = {});

/// Ranked variant; throws UnsupportedError if some state has infinite rank.
RankedContext derive_ranked_context(const RankedInterpretation& r,
                                    const std::vector<std::string>& state_names = {});

/// Translation of a {!, &, |} formula into the compound-attribute language;
/// throws UnsupportedError for TOP, BOT, -> and <->.
Formula to_compound(const PropFormula& f);
PropFormula to_propositional(const Formula& f);

}  // namespace dfca::prop
