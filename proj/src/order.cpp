#include "dfca/order.hpp"

#include <algorithm>

namespace dfca {

StrictOrder::StrictOrder(std::size_t n) : below_(n, ObjectSet(n)) {}

StrictOrder::StrictOrder(std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : StrictOrder(n) {
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) throw StructuralError("order pair index out of range");
    below_[j].insert(i);
  }
  // Warshall: if k < j then everything below k is below j.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (below_[j].contains(k)) below_[j] |= below_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (below_[i].contains(i)) {
      throw StructuralError("order pairs contain a cycle through element " + std::to_string(i));
    }
  }
}

bool StrictOrder::precedes(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw StructuralError("order index out of range");
  return below_[j].contains(i);
}

std::vector<std::pair<std::size_t, std::size_t>> StrictOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j) {
    below_[j].for_each([&](std::size_t i) { out.emplace_back(i, j); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

PreferentialContext::PreferentialContext(FormalContext context, StrictOrder order)
    : context_(std::move(context)), order_(std::move(order)) {
  if (order_.size() != context_.object_count()) {
    throw StructuralError("order covers " + std::to_string(order_.size()) +
                          " elements but the context has " +
                          std::to_string(context_.object_count()) + " objects");
  }
}

RankingFunction::RankingFunction(std::vector<std::size_t> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) return;
  const std::size_t top = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<bool> used(top + 1, false);
  for (auto r : ranks_) used[r] = true;
  for (std::size_t r = 0; r <= top; ++r) {
    if (!used[r]) {
      throw StructuralError("ranking is not convex: rank " + std::to_string(r) +
                            " is empty but rank " + std::to_string(top) + " is not");
    }
  }
  strata_ = top + 1;
}

ObjectSet RankingFunction::stratum(std::size_t r) const {
  ObjectSet s(size());
  for (std::size_t g = 0; g < size(); ++g) {
    if (ranks_[g] == r) s.insert(g);
  }
  return s;
}

RankedContext::RankedContext(FormalContext context, RankingFunction ranks)
    : context_(std::move(context)), ranks_(std::move(ranks)), order_(order_from_ranks(ranks_)) {
  if (ranks_.size() != context_.object_count()) {
    throw StructuralError("ranking covers " + std::to_string(ranks_.size()) +
                          " elements but the context has " +
                          std::to_string(context_.object_count()) + " objects");
  }
}

ObjectSet minimise(const ObjectSet& set, const StrictOrder& order) {
  if (set.universe() != order.size()) throw StructuralError("set and order universes differ");
  ObjectSet minimal(set.universe());
  set.for_each([&](std::size_t g) {
    if (!order.predecessors(g).intersects(set)) minimal.insert(g);
  });
  return minimal;
}

bool defeasibly_satisfied(const ObjectSet& premise, const ObjectSet& conclusion,
                          const StrictOrder& order) {
  return minimise(premise, order).is_subset_of(conclusion);
}

bool satisfies_conditional(const PreferentialContext& pc, const BoundConditional& c) {
  return defeasibly_satisfied(extension(pc.context(), c.antecedent),
                              extension(pc.context(), c.consequent), pc.order());
}

bool satisfies_conditional(const RankedContext& rc, const BoundConditional& c) {
  return defeasibly_satisfied(extension(rc.context(), c.antecedent),
                              extension(rc.context(), c.consequent), rc.order());
}

bool satisfies_conditional(const PreferentialContext& pc, const Conditional& c) {
  return satisfies_conditional(pc, bind(pc.context(), c));
}

bool satisfies_conditional(const RankedContext& rc, const Conditional& c) {
  return satisfies_conditional(rc, bind(rc.context(), c));
}

namespace modularity {

bool incomparability_condition(const StrictOrder& order) {
  const std::size_t n = order.size();
  for (std::size_t g0 = 0; g0 < n; ++g0) {
    for (std::size_t g1 = 0; g1 < n; ++g1) {
      if (order.comparable(g0, g1)) continue;
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        if (order.precedes(g2, g0) && !order.precedes(g2, g1)) return false;
      }
    }
  }
  return true;
}

bool negative_transitivity_condition(const StrictOrder& order) {
  const std::size_t n = order.size();
  for (std::size_t g0 = 0; g0 < n; ++g0) {
    for (std::size_t g1 = 0; g1 < n; ++g1) {
      if (!order.precedes(g0, g1)) continue;
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        if (!order.precedes(g2, g1) && !order.precedes(g0, g2)) return false;
      }
    }
  }
  return true;
}

namespace {

// Iterated minima: stratum k holds the minima of what strata < k left over.
std::vector<std::size_t> iterated_minima(const StrictOrder& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> ranks(n, 0);
  ObjectSet remaining = ObjectSet::full(n);
  for (std::size_t level = 0; !remaining.empty(); ++level) {
    ObjectSet layer = minimise(remaining, order);
    layer.for_each([&](std::size_t g) { ranks[g] = level; });
    remaining -= layer;
  }
  return ranks;
}

}  // namespace

bool ranking_condition(const StrictOrder& order) {
  // If any ranking represents the order, the iterated-minima ranking does.
  const auto ranks = iterated_minima(order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (order.precedes(i, j) != (ranks[i] < ranks[j])) return false;
    }
  }
  return true;
}

}  // namespace modularity

bool is_modular(const StrictOrder& order) { return modularity::incomparability_condition(order); }

RankingFunction ranks_from_order(const StrictOrder& order) {
  if (!is_modular(order)) throw ModularityError("order is not modular");
  return RankingFunction(modularity::iterated_minima(order));
}

StrictOrder order_from_ranks(const RankingFunction& ranks) {
  const std::size_t n = ranks.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ranks.rank(i) < ranks.rank(j)) pairs.emplace_back(i, j);
    }
  }
  return StrictOrder(n, pairs);
}

}  // namespace dfca
