#pragma once

// Brute-force reference implementations. They read the incidence relation
// directly and enumerate exhaustively, sharing no code path with the
// library operations they are compared against.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfca/context.hpp"
#include "dfca/formula.hpp"
#include "dfca/propositional.hpp"
#include "dfca/ranking.hpp"

namespace dfca::testing::oracle {

using Ranks = std::vector<std::size_t>;

inline bool holds_at(const FormalContext& ctx, std::size_t g, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return ctx.has(g, *ctx.find_attribute(f.name()));
    case Formula::Kind::Not:
      return !holds_at(ctx, g, f.operand());
    case Formula::Kind::And:
      return holds_at(ctx, g, f.lhs()) && holds_at(ctx, g, f.rhs());
    case Formula::Kind::Or:
      return holds_at(ctx, g, f.lhs()) || holds_at(ctx, g, f.rhs());
  }
  return false;
}

inline std::vector<bool> objects_satisfying(const FormalContext& ctx, const Formula& f) {
  std::vector<bool> out(ctx.object_count());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = holds_at(ctx, g, f);
  return out;
}

/// g satisfies the material counterpart of c.
inline bool satisfies_material(const FormalContext& ctx, std::size_t g, const Conditional& c) {
  return !holds_at(ctx, g, c.antecedent) || holds_at(ctx, g, c.consequent);
}

/// Ranked satisfaction straight from the definition: the lowest-ranked
/// antecedent objects all satisfy the consequent.
inline bool ranked_satisfies(const FormalContext& ctx, const Ranks& ranks, const Conditional& c) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t g = 0; g < ranks.size(); ++g) {
    if (holds_at(ctx, g, c.antecedent)) best = std::min(best, ranks[g]);
  }
  for (std::size_t g = 0; g < ranks.size(); ++g) {
    if (ranks[g] == best && holds_at(ctx, g, c.antecedent) && !holds_at(ctx, g, c.consequent)) {
      return false;
    }
  }
  return true;
}

/// Preferential satisfaction straight from the definition, with the order
/// given as a relation matrix less[i][j] meaning i strictly below j.
inline bool preferential_satisfies(const FormalContext& ctx,
                                   const std::vector<std::vector<bool>>& less,
                                   const Conditional& c) {
  const std::size_t n = ctx.object_count();
  for (std::size_t g = 0; g < n; ++g) {
    if (!holds_at(ctx, g, c.antecedent)) continue;
    bool minimal = true;
    for (std::size_t h = 0; h < n && minimal; ++h) {
      if (less[h][g] && holds_at(ctx, h, c.antecedent)) minimal = false;
    }
    if (minimal && !holds_at(ctx, g, c.consequent)) return false;
  }
  return true;
}

inline bool convex(const Ranks& ranks) {
  std::vector<bool> used(ranks.size() + 1, false);
  std::size_t top = 0;
  for (auto r : ranks) {
    if (r >= used.size()) return false;
    used[r] = true;
    top = std::max(top, r);
  }
  for (std::size_t r = 0; r <= top && !ranks.empty(); ++r) {
    if (!used[r]) return false;
  }
  return true;
}

/// Every convex ranking of the context's objects that satisfies the base.
inline std::vector<Ranks> ranked_models(const FormalContext& ctx,
                                        const std::vector<Conditional>& kb) {
  const std::size_t n = ctx.object_count();
  std::vector<Ranks> models;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    Ranks ranks(n);
    std::size_t rest = code;
    for (std::size_t i = n; i-- > 0;) {
      ranks[i] = rest % n;
      rest /= n;
    }
    if (!convex(ranks)) continue;
    bool ok = true;
    for (const auto& c : kb) {
      if (!ranked_satisfies(ctx, ranks, c)) {
        ok = false;
        break;
      }
    }
    if (ok) models.push_back(ranks);
  }
  return models;
}

/// Delta-validity from the definition: every nonempty subset D of the base
/// has an object satisfying all materials of D and some antecedent of D.
inline bool delta_valid(const FormalContext& ctx, const std::vector<Conditional>& kb) {
  const std::size_t k = kb.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    bool witnessed = false;
    for (std::size_t g = 0; g < ctx.object_count() && !witnessed; ++g) {
      bool consistent = true;
      bool non_vacuous = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1)) continue;
        consistent = consistent && satisfies_material(ctx, g, kb[i]);
        non_vacuous = non_vacuous || holds_at(ctx, g, kb[i].antecedent);
      }
      witnessed = consistent && non_vacuous;
    }
    if (!witnessed) return false;
  }
  return true;
}

/// Attribute sets as bit masks over at most 20 attributes.
using AttrMask = std::uint32_t;

inline AttrMask mask_of(const AttributeSet& s) {
  AttrMask m = 0;
  s.for_each([&](std::size_t i) { m |= AttrMask{1} << i; });
  return m;
}

inline bool respects(AttrMask set, const std::vector<AttributeImplication>& theory) {
  for (const auto& impl : theory) {
    const AttrMask p = mask_of(impl.premise);
    const AttrMask c = mask_of(impl.conclusion);
    if ((set & p) == p && (set & c) != c) return false;
  }
  return true;
}

/// Smallest theory-closed superset of `start`: the intersection of all
/// closed supersets.
inline AttrMask closure(const std::vector<AttributeImplication>& theory, AttrMask start,
                        std::size_t attributes) {
  AttrMask result = (AttrMask{1} << attributes) - 1;
  for (AttrMask set = 0; set < (AttrMask{1} << attributes); ++set) {
    if ((set & start) == start && respects(set, theory)) result &= set;
  }
  return result;
}

/// Semantic consequence: every theory-respecting attribute set that contains
/// the premise contains the conclusion.
inline bool follows(const std::vector<AttributeImplication>& theory,
                    const AttributeImplication& impl, std::size_t attributes) {
  const AttrMask p = mask_of(impl.premise);
  const AttrMask c = mask_of(impl.conclusion);
  for (AttrMask set = 0; set < (AttrMask{1} << attributes); ++set) {
    if ((set & p) == p && respects(set, theory) && (set & c) != c) return false;
  }
  return true;
}

/// The minimal ranked model of a propositional base: every valuation gets a
/// rank in {0..|K|} or infinity (nullopt), all convex models of the base are
/// enumerated, and the pointwise minimum is returned.
struct MinimalRankedModel {
  prop::UniversePtr universe;
  std::vector<std::optional<std::size_t>> rank;  ///< indexed by valuation bits
  std::size_t models_enumerated = 0;

  prop::Valuation valuation(std::size_t bits) const {
    std::vector<bool> truth(universe->size());
    for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = (bits >> i & 1) != 0;
    return prop::Valuation(universe, truth);
  }

  /// Lowest rank of a valuation satisfying f, nullopt if none is finite.
  std::optional<std::size_t> rank_of(const prop::PropFormula& f) const {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < rank.size(); ++v) {
      if (rank[v] && prop::prop_eval(valuation(v), f) && (!best || *rank[v] < *best)) {
        best = rank[v];
      }
    }
    return best;
  }

  bool satisfies(const prop::PropConditional& c) const {
    const auto r = rank_of(c.antecedent);
    if (!r) return true;
    for (std::size_t v = 0; v < rank.size(); ++v) {
      const auto val = valuation(v);
      if (rank[v] == r && prop::prop_eval(val, c.antecedent) &&
          !prop::prop_eval(val, c.consequent)) {
        return false;
      }
    }
    return true;
  }
};

/// `extra_atoms` widens the vocabulary beyond the atoms of the base.
inline MinimalRankedModel minimal_ranked_model(const std::vector<prop::PropConditional>& kb,
                                               std::vector<std::string> extra_atoms = {}) {
  std::vector<std::string> names = std::move(extra_atoms);
  for (const auto& c : kb) {
    for (const auto& a : c.antecedent.atoms()) names.push_back(a);
    for (const auto& a : c.consequent.atoms()) names.push_back(a);
  }
  MinimalRankedModel result;
  result.universe = prop::make_universe(names);
  const std::size_t states = std::size_t{1} << result.universe->size();
  const std::size_t levels = kb.size() + 2;  // 0..|K| and infinity
  result.rank.assign(states, std::nullopt);
  bool first = true;

  // Truth tables of every antecedent and consequent over all valuations.
  std::vector<std::vector<bool>> ante(kb.size()), cons(kb.size());
  for (std::size_t i = 0; i < kb.size(); ++i) {
    for (std::size_t v = 0; v < states; ++v) {
      ante[i].push_back(prop::prop_eval(result.valuation(v), kb[i].antecedent));
      cons[i].push_back(prop::prop_eval(result.valuation(v), kb[i].consequent));
    }
  }
  const std::size_t inf = levels - 1;
  auto is_model = [&](const std::vector<std::size_t>& code) {
    Ranks finite;
    for (auto c : code) {
      if (c != inf) finite.push_back(c);
    }
    if (!convex(finite)) return false;
    for (std::size_t i = 0; i < kb.size(); ++i) {
      std::size_t best = inf;
      for (std::size_t v = 0; v < states; ++v) {
        if (ante[i][v]) best = std::min(best, code[v]);
      }
      if (best == inf) continue;
      for (std::size_t v = 0; v < states; ++v) {
        if (code[v] == best && ante[i][v] && !cons[i][v]) return false;
      }
    }
    return true;
  };

  std::vector<std::size_t> code(states, 0);
  for (;;) {
    if (is_model(code)) {
      ++result.models_enumerated;
      for (std::size_t v = 0; v < states; ++v) {
        const std::optional<std::size_t> r =
            code[v] == inf ? std::nullopt : std::optional<std::size_t>(code[v]);
        auto& best = result.rank[v];
        if (first || (r && (!best || *r < *best))) best = r;
      }
      first = false;
    }
    std::size_t i = 0;
    while (i < states && ++code[i] == levels) code[i++] = 0;
    if (i == states) break;
  }
  return result;
}

}  // namespace dfca::testing::oracle
