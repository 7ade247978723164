#include "dfca/propositional.hpp"

#include <algorithm>
#include <cstdint>

#include "lexer.hpp"

namespace dfca::prop {

using detail::Lexer;
using detail::TokenKind;

PropFormula PropFormula::make(Kind k, std::vector<PropFormula> children) {
  return PropFormula(std::make_shared<const Node>(Node{k, {}, std::move(children)}));
}

PropFormula PropFormula::top() { return make(Kind::True, {}); }
PropFormula PropFormula::bottom() { return make(Kind::False, {}); }

PropFormula PropFormula::atom(std::string name) {
  if (name.empty()) throw StructuralError("atom name must not be empty");
  return PropFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

PropFormula PropFormula::negation(PropFormula operand) {
  return make(Kind::Not, {std::move(operand)});
}
PropFormula PropFormula::conjunction(PropFormula lhs, PropFormula rhs) {
  return make(Kind::And, {std::move(lhs), std::move(rhs)});
}
PropFormula PropFormula::disjunction(PropFormula lhs, PropFormula rhs) {
  return make(Kind::Or, {std::move(lhs), std::move(rhs)});
}
PropFormula PropFormula::implication(PropFormula lhs, PropFormula rhs) {
  return make(Kind::Implies, {std::move(lhs), std::move(rhs)});
}
PropFormula PropFormula::equivalence(PropFormula lhs, PropFormula rhs) {
  return make(Kind::Iff, {std::move(lhs), std::move(rhs)});
}

const std::string& PropFormula::name() const {
  if (kind() != Kind::Atom) throw StructuralError("not an atom");
  return node_->name;
}

const PropFormula& PropFormula::operand() const {
  if (kind() != Kind::Not) throw StructuralError("not a negation");
  return node_->children[0];
}

const PropFormula& PropFormula::lhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[0];
}

const PropFormula& PropFormula::rhs() const {
  if (node_->children.size() != 2) throw StructuralError("not a binary connective");
  return node_->children[1];
}

std::vector<std::string> PropFormula::atoms() const {
  std::vector<std::string> out;
  auto visit = [&](auto&& self, const PropFormula& f) -> void {
    if (f.kind() == Kind::Atom) {
      out.push_back(f.name());
      return;
    }
    for (const auto& c : f.node_->children) self(self, c);
  };
  visit(visit, *this);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == PropFormula::Kind::Atom) return a.name() == b.name();
  return a.node_->children == b.node_->children;
}

namespace {

using Kind = PropFormula::Kind;

int precedence(Kind k) {
  switch (k) {
    case Kind::Iff: return 0;
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Not: return 4;
    default: return 5;
  }
}

bool right_associative(Kind k) { return k == Kind::Implies || k == Kind::Iff; }

const char* symbol(Kind k) {
  switch (k) {
    case Kind::Iff: return " <-> ";
    case Kind::Implies: return " -> ";
    case Kind::Or: return " | ";
    case Kind::And: return " & ";
    default: return "";
  }
}

std::string atom_text(const std::string& name) {
  if (name == "TOP" || name == "BOT") return "\"" + name + "\"";
  return detail::quote_if_needed(name);
}

void print(const PropFormula& f, std::string& out) {
  auto sub = [&](const PropFormula& child, bool parens) {
    if (parens) out += '(';
    print(child, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::True: out += "TOP"; return;
    case Kind::False: out += "BOT"; return;
    case Kind::Atom: out += atom_text(f.name()); return;
    case Kind::Not:
      out += '!';
      sub(f.operand(), precedence(f.operand().kind()) < precedence(Kind::Not));
      return;
    default: {
      const int p = precedence(f.kind());
      const bool right = right_associative(f.kind());
      sub(f.lhs(), right ? precedence(f.lhs().kind()) <= p : precedence(f.lhs().kind()) < p);
      out += symbol(f.kind());
      sub(f.rhs(), right ? precedence(f.rhs().kind()) < p : precedence(f.rhs().kind()) <= p);
      return;
    }
  }
}

PropFormula parse_iff(Lexer& lex);

PropFormula parse_neg(Lexer& lex) {
  if (lex.accept(TokenKind::Not)) return PropFormula::negation(parse_neg(lex));
  if (lex.peek().kind == TokenKind::Name) {
    detail::Token t = lex.take();
    if (!t.quoted && t.text == "TOP") return PropFormula::top();
    if (!t.quoted && t.text == "BOT") return PropFormula::bottom();
    return PropFormula::atom(t.text);
  }
  if (lex.accept(TokenKind::LParen)) {
    PropFormula inner = parse_iff(lex);
    if (!lex.accept(TokenKind::RParen)) lex.fail("')'");
    return inner;
  }
  lex.fail("atom, TOP, BOT, '!' or '('");
}

PropFormula parse_conj(Lexer& lex) {
  PropFormula f = parse_neg(lex);
  while (lex.accept(TokenKind::And)) f = PropFormula::conjunction(f, parse_neg(lex));
  return f;
}

PropFormula parse_disj(Lexer& lex) {
  PropFormula f = parse_conj(lex);
  while (lex.accept(TokenKind::Or)) f = PropFormula::disjunction(f, parse_conj(lex));
  return f;
}

PropFormula parse_imp(Lexer& lex) {
  PropFormula f = parse_disj(lex);
  if (lex.accept(TokenKind::Implies)) return PropFormula::implication(f, parse_imp(lex));
  return f;
}

PropFormula parse_iff(Lexer& lex) {
  PropFormula f = parse_imp(lex);
  if (lex.accept(TokenKind::Iff)) return PropFormula::equivalence(f, parse_iff(lex));
  return f;
}

// Formula with atoms resolved to bit positions of a valuation mask.
struct Compiled {
  Kind kind;
  std::size_t atom = 0;
  std::vector<Compiled> children;

  bool eval(std::uint64_t mask) const {
    switch (kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return (mask >> atom) & 1u;
      case Kind::Not: return !children[0].eval(mask);
      case Kind::And: return children[0].eval(mask) && children[1].eval(mask);
      case Kind::Or: return children[0].eval(mask) || children[1].eval(mask);
      case Kind::Implies: return !children[0].eval(mask) || children[1].eval(mask);
      case Kind::Iff: return children[0].eval(mask) == children[1].eval(mask);
    }
    return false;
  }
};

Compiled compile(const PropFormula& f, const AtomUniverse& universe) {
  Compiled c{f.kind(), 0, {}};
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      break;
    case Kind::Atom: {
      auto i = universe.find(f.name());
      if (!i) throw BindingError(f.name());
      c.atom = *i;
      break;
    }
    case Kind::Not:
      c.children.push_back(compile(f.operand(), universe));
      break;
    default:
      c.children.push_back(compile(f.lhs(), universe));
      c.children.push_back(compile(f.rhs(), universe));
      break;
  }
  return c;
}

}  // namespace

std::string to_string(const PropFormula& f) {
  std::string out;
  print(f, out);
  return out;
}

PropFormula parse_prop_formula(std::string_view text) {
  Lexer lex(text);
  PropFormula f = parse_iff(lex);
  if (lex.peek().kind != TokenKind::End) lex.fail("connective or end of input");
  return f;
}

std::string to_string(const PropConditional& c) {
  return to_string(c.antecedent) + " |~ " + to_string(c.consequent);
}

PropConditional parse_prop_conditional(std::string_view text) {
  PropStatement s = parse_prop_statement(text);
  if (s.kind != PropStatement::Kind::Defeasible) {
    throw ParseError("expected '|~'", text.size());
  }
  return s.conditional;
}

PropConditional PropStatement::as_defeasible() const {
  if (kind == Kind::Defeasible) return conditional;
  return {PropFormula::negation(formula), PropFormula::bottom()};
}

bool operator==(const PropStatement& a, const PropStatement& b) {
  if (a.kind != b.kind) return false;
  return a.kind == PropStatement::Kind::Defeasible ? a.conditional == b.conditional
                                                   : a.formula == b.formula;
}

PropStatement parse_prop_statement(std::string_view text) {
  Lexer lex(text);
  PropFormula first = parse_iff(lex);
  PropStatement s;
  if (lex.accept(TokenKind::Defeasible)) {
    s.kind = PropStatement::Kind::Defeasible;
    s.conditional = {first, parse_iff(lex)};
  } else {
    s.kind = PropStatement::Kind::Classical;
    s.conditional = {first, first};
    s.formula = first;
  }
  if (lex.peek().kind != TokenKind::End) lex.fail("connective, '|~' or end of input");
  return s;
}

AtomUniverse::AtomUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<std::size_t> AtomUniverse::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const AtomUniverse>(std::move(names));
}

Valuation::Valuation(UniversePtr universe, std::vector<bool> truth)
    : universe_(std::move(universe)), truth_(std::move(truth)) {
  if (!universe_) throw StructuralError("valuation without a universe");
  if (truth_.size() != universe_->size()) {
    throw StructuralError("valuation must assign every atom of its universe");
  }
}

Valuation Valuation::from_true_atoms(UniversePtr universe, const std::vector<std::string>& atoms) {
  std::vector<bool> truth(universe->size(), false);
  for (const auto& a : atoms) {
    auto i = universe->find(a);
    if (!i) throw BindingError(a);
    truth[*i] = true;
  }
  return Valuation(std::move(universe), std::move(truth));
}

bool Valuation::value(const std::string& atom) const {
  auto i = universe_->find(atom);
  if (!i) throw BindingError(atom);
  return truth_[*i];
}

bool prop_eval(const Valuation& v, const PropFormula& alpha) {
  switch (alpha.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return v.value(alpha.name());
    case Kind::Not: return !prop_eval(v, alpha.operand());
    case Kind::And: return prop_eval(v, alpha.lhs()) && prop_eval(v, alpha.rhs());
    case Kind::Or: return prop_eval(v, alpha.lhs()) || prop_eval(v, alpha.rhs());
    case Kind::Implies: return !prop_eval(v, alpha.lhs()) || prop_eval(v, alpha.rhs());
    case Kind::Iff: return prop_eval(v, alpha.lhs()) == prop_eval(v, alpha.rhs());
  }
  return false;
}

bool prop_entails(const std::vector<PropFormula>& premises, const PropFormula& alpha,
                  const Limits& limits) {
  std::vector<std::string> names = alpha.atoms();
  for (const auto& p : premises) {
    auto more = p.atoms();
    names.insert(names.end(), more.begin(), more.end());
  }
  const AtomUniverse universe(std::move(names));
  if (universe.size() > limits.max_atoms || universe.size() >= 63) {
    throw CapacityError("entailment check over " + std::to_string(universe.size()) +
                        " atoms exceeds the enumeration cap of " +
                        std::to_string(limits.max_atoms));
  }
  std::vector<Compiled> gamma;
  gamma.reserve(premises.size());
  for (const auto& p : premises) gamma.push_back(compile(p, universe));
  const Compiled goal = compile(alpha, universe);

  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool model = true;
    for (const auto& g : gamma) {
      if (!g.eval(mask)) {
        model = false;
        break;
      }
    }
    if (model && !goal.eval(mask)) return false;
  }
  return true;
}

PreferentialInterpretation::PreferentialInterpretation(UniversePtr universe,
                                                       std::vector<Valuation> labels,
                                                       StrictOrder order)
    : universe_(std::move(universe)), labels_(std::move(labels)), order_(std::move(order)) {
  if (order_.size() != labels_.size()) {
    throw StructuralError("order size does not match the number of states");
  }
  for (const auto& l : labels_) {
    if (l.universe()->names() != universe_->names()) {
      throw StructuralError("state label over a different atom universe");
    }
  }
}

RankedInterpretation::RankedInterpretation(UniversePtr universe, std::vector<Valuation> labels,
                                           std::vector<std::optional<std::size_t>> ranks)
    : universe_(std::move(universe)), labels_(std::move(labels)), ranks_(std::move(ranks)) {
  if (ranks_.size() != labels_.size()) {
    throw StructuralError("rank count does not match the number of states");
  }
  for (const auto& l : labels_) {
    if (l.universe()->names() != universe_->names()) {
      throw StructuralError("state label over a different atom universe");
    }
  }
  std::vector<std::size_t> finite;
  for (const auto& r : ranks_) {
    if (r) finite.push_back(*r);
  }
  RankingFunction check(std::move(finite));  // throws if not convex
}

bool pref_satisfies(const PreferentialInterpretation& p, const PropConditional& c) {
  const std::size_t n = p.state_count();
  ObjectSet premise(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (prop_eval(p.label(s), c.antecedent)) premise.insert(s);
  }
  bool ok = true;
  minimise(premise, p.order()).for_each([&](std::size_t s) {
    ok = ok && prop_eval(p.label(s), c.consequent);
  });
  return ok;
}

bool pref_satisfies(const RankedInterpretation& r, const PropConditional& c) {
  std::optional<std::size_t> lowest;
  for (std::size_t s = 0; s < r.state_count(); ++s) {
    if (r.rank(s) && prop_eval(r.label(s), c.antecedent)) {
      if (!lowest || *r.rank(s) < *lowest) lowest = r.rank(s);
    }
  }
  if (!lowest) return true;
  for (std::size_t s = 0; s < r.state_count(); ++s) {
    if (r.rank(s) == lowest && prop_eval(r.label(s), c.antecedent) &&
        !prop_eval(r.label(s), c.consequent)) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<PropFormula> materials(const std::vector<PropConditional>& cs) {
  std::vector<PropFormula> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.material());
  return out;
}

}  // namespace

BaseRankResult base_rank(const PropKnowledgeBase& kb, const Limits& limits) {
  std::vector<PropConditional> current;
  for (const auto& s : kb) {
    PropConditional c = s.as_defeasible();
    if (std::find(current.begin(), current.end(), c) == current.end()) current.push_back(c);
  }
  BaseRankResult result;
  for (;;) {
    const auto theory = materials(current);
    std::vector<PropConditional> exceptional;
    std::vector<PropConditional> stratum;
    for (const auto& c : current) {
      if (prop_entails(theory, PropFormula::negation(c.antecedent), limits)) {
        exceptional.push_back(c);
      } else {
        stratum.push_back(c);
      }
    }
    if (stratum.empty()) break;
    result.strata.push_back(std::move(stratum));
    current = std::move(exceptional);
  }
  result.infinite = std::move(current);
  return result;
}

RcVerdict rc_entails(const BaseRankResult& ranking, const PropConditional& query,
                     const Limits& limits) {
  const auto infinite = materials(ranking.infinite);
  auto theory_from = [&](std::size_t first) {
    std::vector<PropFormula> t = infinite;
    for (std::size_t i = first; i < ranking.strata.size(); ++i) {
      auto m = materials(ranking.strata[i]);
      t.insert(t.end(), m.begin(), m.end());
    }
    return t;
  };
  const PropFormula refuted = PropFormula::negation(query.antecedent);
  std::size_t dropped = 0;
  while (dropped < ranking.strata.size() &&
         prop_entails(theory_from(dropped), refuted, limits)) {
    ++dropped;
  }
  const auto theory = theory_from(dropped);
  RcVerdict verdict;
  verdict.entailed = prop_entails(theory, query.material(), limits);
  if (!prop_entails(theory, refuted, limits)) verdict.antecedent_rank = dropped;
  return verdict;
}

RcVerdict rc_entails(const PropKnowledgeBase& kb, const PropConditional& query,
                     const Limits& limits) {
  return rc_entails(base_rank(kb, limits), query, limits);
}

namespace {

std::vector<std::string> state_object_names(std::size_t n, const std::vector<std::string>& given) {
  if (!given.empty()) {
    if (given.size() != n) throw StructuralError("one name per state is required");
    return given;
  }
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) names.push_back("s" + std::to_string(s));
  return names;
}

template <class Interpretation>
FormalContext derived_context(const Interpretation& interp,
                              const std::vector<std::string>& state_names) {
  const auto& atoms = interp.universe()->names();
  std::vector<std::vector<bool>> incidence;
  for (std::size_t s = 0; s < interp.state_count(); ++s) {
    std::vector<bool> row(atoms.size());
    for (std::size_t m = 0; m < atoms.size(); ++m) row[m] = interp.label(s).value(m);
    incidence.push_back(std::move(row));
  }
  return FormalContext(state_object_names(interp.state_count(), state_names), atoms, incidence);
}

}  // namespace

PreferentialContext derive_preferential_context(const PreferentialInterpretation& p,
                                                const std::vector<std::string>& state_names) {
  return PreferentialContext(derived_context(p, state_names), p.order());
}

RankedContext derive_ranked_context(const RankedInterpretation& r,
                                    const std::vector<std::string>& state_names) {
  std::vector<std::size_t> ranks;
  for (std::size_t s = 0; s < r.state_count(); ++s) {
    if (!r.rank(s)) {
      throw UnsupportedError("state " + std::to_string(s) +
                             " has infinite rank; derived contexts only carry finite ranks");
    }
    ranks.push_back(*r.rank(s));
  }
  return RankedContext(derived_context(r, state_names), RankingFunction(std::move(ranks)));
}

Formula to_compound(const PropFormula& f) {
  switch (f.kind()) {
    case Kind::Atom: return Formula::atom(f.name());
    case Kind::Not: return Formula::negation(to_compound(f.operand()));
    case Kind::And: return Formula::conjunction(to_compound(f.lhs()), to_compound(f.rhs()));
    case Kind::Or: return Formula::disjunction(to_compound(f.lhs()), to_compound(f.rhs()));
    default:
      throw UnsupportedError("'" + to_string(f) +
                             "' uses a connective outside the compound-attribute language");
  }
}

PropFormula to_propositional(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return PropFormula::atom(f.name());
    case Formula::Kind::Not: return PropFormula::negation(to_propositional(f.operand()));
    case Formula::Kind::And:
      return PropFormula::conjunction(to_propositional(f.lhs()), to_propositional(f.rhs()));
    case Formula::Kind::Or:
      return PropFormula::disjunction(to_propositional(f.lhs()), to_propositional(f.rhs()));
  }
  throw StructuralError("unknown formula kind");
}

}  // namespace dfca::prop
