#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dfca/context.hpp"
#include "dfca/formula.hpp"

namespace dfca {

/// Strict partial order over {0, ..., size()-1}; `precedes(i, j)` reads
/// "i is preferred to (more typical than) j".
class StrictOrder {
 public:
  StrictOrder() = default;
  /// Empty order over n elements.
  explicit StrictOrder(std::size_t n);
  /// Transitive closure of the given pairs. Throws StructuralError if the
  /// closure is reflexive (the pairs contain a cycle) or an index is out of range.
  StrictOrder(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const noexcept { return below_.size(); }
  bool precedes(std::size_t i, std::size_t j) const;
  bool comparable(std::size_t i, std::size_t j) const {
    return precedes(i, j) || precedes(j, i);
  }
  /// Elements strictly preferred to j.
  const ObjectSet& predecessors(std::size_t j) const { return below_.at(j); }
  /// All related pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const StrictOrder& a, const StrictOrder& b) {
    return a.below_ == b.below_;
  }

 private:
  std::vector<ObjectSet> below_;
};

/// Formal context plus a preference order over its objects.
class PreferentialContext {
 public:
  PreferentialContext(FormalContext context, StrictOrder order);

  const FormalContext& context() const noexcept { return context_; }
  const StrictOrder& order() const noexcept { return order_; }

 private:
  FormalContext context_;
  StrictOrder order_;
};

/// Convex rank assignment: ranks used are exactly {0, ..., max_rank()}.
class RankingFunction {
 public:
  RankingFunction() = default;
  /// Throws StructuralError unless the ranks are convex.
  explicit RankingFunction(std::vector<std::size_t> ranks);

  std::size_t size() const noexcept { return ranks_.size(); }
  std::size_t rank(std::size_t element) const { return ranks_.at(element); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  /// Number of non-empty strata (0 for an empty universe).
  std::size_t stratum_count() const noexcept { return strata_; }
  ObjectSet stratum(std::size_t r) const;

  friend bool operator==(const RankingFunction& a, const RankingFunction& b) {
    return a.ranks_ == b.ranks_;
  }

 private:
  std::vector<std::size_t> ranks_;
  std::size_t strata_ = 0;
};

/// Formal context with a convex ranking of its objects; the induced order
/// (lower rank preferred) is modular.
class RankedContext {
 public:
  RankedContext(FormalContext context, RankingFunction ranks);

  const FormalContext& context() const noexcept { return context_; }
  const RankingFunction& ranking() const noexcept { return ranks_; }
  std::size_t rank(std::size_t object) const { return ranks_.rank(object); }
  const StrictOrder& order() const noexcept { return order_; }
  PreferentialContext as_preferential() const { return {context_, order_}; }

 private:
  FormalContext context_;
  RankingFunction ranks_;
  StrictOrder order_;
};

/// Elements of `set` with no preferred element inside `set`.
ObjectSet minimise(const ObjectSet& set, const StrictOrder& order);

/// Whether the minimal premise objects all lie in the conclusion extension.
bool defeasibly_satisfied(const ObjectSet& premise, const ObjectSet& conclusion,
                          const StrictOrder& order);

/// Satisfaction of a defeasible conditional; the conditional's kind is
/// ignored, both sides are read as compound attributes.
bool satisfies_conditional(const PreferentialContext& pc, const BoundConditional& c);
bool satisfies_conditional(const RankedContext& rc, const BoundConditional& c);
bool satisfies_conditional(const PreferentialContext& pc, const Conditional& c);
bool satisfies_conditional(const RankedContext& rc, const Conditional& c);

/// Incomparable elements share their predecessors.
bool is_modular(const StrictOrder& order);

/// The three equivalent modularity conditions, exposed separately so they
/// can be cross-checked.
namespace modularity {
/// g0, g1 incomparable and g2 < g0 imply g2 < g1.
bool incomparability_condition(const StrictOrder& order);
/// g0 < g1 implies g2 < g1 or g0 < g2.
bool negative_transitivity_condition(const StrictOrder& order);
/// Some ranking R has g0 < g1 iff R(g0) < R(g1).
bool ranking_condition(const StrictOrder& order);
}  // namespace modularity

/// Canonical ranking by iterated minima. Throws ModularityError for
/// non-modular orders.
RankingFunction ranks_from_order(const StrictOrder& order);

/// i < j iff rank(i) < rank(j).
StrictOrder order_from_ranks(const RankingFunction& ranks);

}  // namespace dfca
