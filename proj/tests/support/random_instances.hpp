#pragma once

// Seeded generators for small random instances shared by the unit, property
// and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dfca/context.hpp"
#include "dfca/formula.hpp"
#include "dfca/order.hpp"
#include "dfca/propositional.hpp"
#include "dfca/ranking.hpp"

namespace dfca::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

/// Objects g0.., attributes m0..; each cell set with probability `density`.
inline FormalContext random_context(Rng& rng, std::size_t objects, std::size_t attributes,
                                    double density = 0.5) {
  std::vector<std::vector<bool>> incidence(objects, std::vector<bool>(attributes));
  for (auto& row : incidence) {
    for (std::size_t m = 0; m < attributes; ++m) row[m] = coin(rng, density);
  }
  return FormalContext(numbered("g", objects), numbered("m", attributes), incidence);
}

/// Random {!, &, |} formula over `atoms` with depth at most `max_depth`.
inline Formula random_formula(Rng& rng, const std::vector<std::string>& atoms,
                              std::size_t max_depth) {
  if (max_depth == 0 || coin(rng, 0.3)) return Formula::atom(atoms[uniform(rng, 0, atoms.size() - 1)]);
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Formula::negation(random_formula(rng, atoms, max_depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, atoms, max_depth - 1),
                                  random_formula(rng, atoms, max_depth - 1));
    default:
      return Formula::disjunction(random_formula(rng, atoms, max_depth - 1),
                                  random_formula(rng, atoms, max_depth - 1));
  }
}

inline Formula random_formula(Rng& rng, const FormalContext& ctx, std::size_t max_depth) {
  return random_formula(rng, ctx.attributes(), max_depth);
}

/// Random strict partial order: a hidden linear order, each compatible pair
/// kept with probability `p`, then transitively closed.
inline StrictOrder random_order(Rng& rng, std::size_t n, double p = 0.35) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng, p)) pairs.emplace_back(perm[i], perm[j]);
    }
  }
  return StrictOrder(n, pairs);
}

/// Random convex ranking of n elements.
inline RankingFunction random_ranking(Rng& rng, std::size_t n) {
  std::vector<std::size_t> raw(n);
  for (auto& r : raw) r = uniform(rng, 0, n == 0 ? 0 : n - 1);
  std::vector<std::size_t> levels = raw;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (auto& r : raw) r = static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), r) - levels.begin());
  return RankingFunction(raw);
}

inline KnowledgeBase random_kb(Rng& rng, const FormalContext& ctx, std::size_t max_size,
                               std::size_t max_depth) {
  KnowledgeBase kb;
  const std::size_t size = uniform(rng, 1, max_size);
  for (std::size_t i = 0; i < size; ++i) {
    kb.add(Conditional::defeasible(random_formula(rng, ctx, max_depth),
                                   random_formula(rng, ctx, max_depth)));
  }
  return kb;
}

inline prop::Valuation random_valuation(Rng& rng, const prop::UniversePtr& universe) {
  std::vector<bool> truth(universe->size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth[i] = coin(rng);
  return prop::Valuation(universe, truth);
}

inline prop::PreferentialInterpretation random_preferential_interpretation(
    Rng& rng, const prop::UniversePtr& universe, std::size_t states) {
  std::vector<prop::Valuation> labels;
  for (std::size_t s = 0; s < states; ++s) labels.push_back(random_valuation(rng, universe));
  return prop::PreferentialInterpretation(universe, labels, random_order(rng, states));
}

inline prop::RankedInterpretation random_ranked_interpretation(
    Rng& rng, const prop::UniversePtr& universe, std::size_t states) {
  std::vector<prop::Valuation> labels;
  for (std::size_t s = 0; s < states; ++s) labels.push_back(random_valuation(rng, universe));
  const RankingFunction ranking = random_ranking(rng, states);
  std::vector<std::optional<std::size_t>> ranks(ranking.ranks().begin(), ranking.ranks().end());
  return prop::RankedInterpretation(universe, labels, ranks);
}

/// Every {!, &, |} formula over `atoms` whose syntax tree has at most
/// `levels` levels (a lone atom has one level).
inline std::vector<Formula> all_formulas(const std::vector<std::string>& atoms,
                                         std::size_t levels) {
  std::vector<Formula> current;
  if (levels == 0) return current;
  for (const auto& a : atoms) current.push_back(Formula::atom(a));
  for (std::size_t l = 1; l < levels; ++l) {
    std::vector<Formula> next;
    for (const auto& a : atoms) next.push_back(Formula::atom(a));
    for (const auto& f : current) next.push_back(Formula::negation(f));
    for (const auto& f : current) {
      for (const auto& g : current) {
        next.push_back(Formula::conjunction(f, g));
        next.push_back(Formula::disjunction(f, g));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace dfca::testing
