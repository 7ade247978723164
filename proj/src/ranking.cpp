#include "dfca/ranking.hpp"

#include <algorithm>
#include <cstdint>

namespace dfca {

KnowledgeBase::KnowledgeBase(const std::vector<Conditional>& conditionals) {
  for (const auto& c : conditionals) add(c);
}

bool KnowledgeBase::add(Conditional c) {
  if (std::find(conditionals_.begin(), conditionals_.end(), c) != conditionals_.end()) {
    return false;
  }
  conditionals_.push_back(std::move(c));
  return true;
}

namespace {

// Extensions of one conditional: objects in the antecedent, objects
// satisfying the material counterpart.
struct Evaluated {
  ObjectSet antecedent;
  ObjectSet material;
};

std::vector<Evaluated> evaluate(const FormalContext& ctx, const KnowledgeBase& kb) {
  std::vector<Evaluated> out;
  out.reserve(kb.size());
  for (const auto& c : kb) {
    if (c.kind != Conditional::Kind::Defeasible) {
      throw UnsupportedError("classical statement '" + to_string(c) +
                             "' cannot be used for object ranking; only |~ conditionals are");
    }
    const BoundConditional bound = bind(ctx, c);
    ObjectSet ante = extension(ctx, bound.antecedent);
    ObjectSet cons = extension(ctx, bound.consequent);
    out.push_back({ante, ante.complement() | cons});
  }
  return out;
}

}  // namespace

bool delta_valid(const FormalContext& ctx, const KnowledgeBase& kb, const Limits& limits) {
  // Subsets are enumerated as 64-bit masks.
  const std::size_t cap = std::min<std::size_t>(limits.max_kb_size, 62);
  if (kb.size() > cap) {
    throw CapacityError("knowledge base has " + std::to_string(kb.size()) +
                        " conditionals; subset enumeration is capped at " + std::to_string(cap));
  }
  const auto evaluated = evaluate(ctx, kb);
  const std::size_t k = evaluated.size();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    ObjectSet consistent = ctx.all_objects();
    ObjectSet engaged = ctx.no_objects();
    for (std::size_t i = 0; i < k; ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        consistent &= evaluated[i].material;
        engaged |= evaluated[i].antecedent;
      }
    }
    if (!consistent.intersects(engaged)) return false;
  }
  return true;
}

bool satisfies_all(const RankedContext& rc, const KnowledgeBase& kb) {
  for (const auto& c : kb) {
    if (!satisfies_conditional(rc, c)) return false;
  }
  return true;
}

ObjectRankResult object_rank(const FormalContext& ctx, const KnowledgeBase& kb,
                             const RankOptions& options) {
  const auto evaluated = evaluate(ctx, kb);
  if (options.validation == Validation::Exhaustive && !delta_valid(ctx, kb, options.limits)) {
    throw ValidityError("context is not Delta-valid for the knowledge base");
  }

  std::vector<ObjectSet> strata;
  std::vector<std::size_t> settled_at(kb.size(), 0);
  std::vector<std::size_t> active(kb.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  ObjectSet remaining = ctx.all_objects();
  while (!active.empty()) {
    ObjectSet violators = ctx.no_objects();
    for (auto c : active) violators |= remaining - evaluated[c].material;
    const ObjectSet settled = remaining - violators;

    std::vector<std::size_t> still_active;
    for (auto c : active) {
      if (evaluated[c].antecedent.intersects(settled)) {
        settled_at[c] = strata.size();
      } else {
        still_active.push_back(c);
      }
    }
    if (still_active.size() == active.size()) {
      std::string names;
      for (auto c : active) names += (names.empty() ? "" : "; ") + to_string(kb[c]);
      throw ValidityError("no object on rank " + std::to_string(strata.size()) +
                          " satisfies the antecedent of any remaining conditional (" + names +
                          "); the context is not Delta-valid");
    }
    strata.push_back(settled);
    active = std::move(still_active);
    remaining = violators;
  }
  if (!remaining.empty() || strata.empty()) strata.push_back(remaining);

  std::vector<std::size_t> ranks(ctx.object_count(), 0);
  for (std::size_t r = 0; r < strata.size(); ++r) {
    strata[r].for_each([&](std::size_t g) { ranks[g] = r; });
  }
  ObjectRankResult result{RankedContext(ctx, RankingFunction(std::move(ranks))),
                          RankPartition{std::move(strata)}, std::move(settled_at)};
  if (!satisfies_all(result.ranked, kb)) {
    throw ValidityError("ranked context does not satisfy the knowledge base; "
                        "the context is not Delta-valid");
  }
  return result;
}

ContextPreference context_preference(const RankedContext& lhs, const RankedContext& rhs) {
  if (!(lhs.context() == rhs.context())) {
    throw StructuralError("ranked contexts are over different formal contexts");
  }
  ContextPreference p{true, true};
  for (std::size_t g = 0; g < lhs.context().object_count(); ++g) {
    if (lhs.rank(g) > rhs.rank(g)) p.le = false;
    if (lhs.rank(g) < rhs.rank(g)) p.ge = false;
  }
  return p;
}

std::vector<RankedContext> enumerate_ranked_models(const FormalContext& ctx,
                                                   const KnowledgeBase& kb,
                                                   const Limits& limits) {
  const std::size_t n = ctx.object_count();
  if (n > limits.max_objects) {
    throw CapacityError("context has " + std::to_string(n) +
                        " objects; ranking enumeration is capped at " +
                        std::to_string(limits.max_objects));
  }
  std::vector<BoundConditional> bound;
  for (const auto& c : kb) bound.push_back(bind(ctx, c));

  std::vector<RankedContext> models;
  if (n == 0) {
    RankedContext empty(ctx, RankingFunction(std::vector<std::size_t>{}));
    models.push_back(empty);
    return models;
  }
  // Odometer over {0..n-1}^n in lexicographic order; non-convex vectors skipped.
  std::vector<std::size_t> ranks(n, 0);
  for (;;) {
    std::vector<bool> used(n, false);
    std::size_t top = 0;
    for (auto r : ranks) {
      used[r] = true;
      top = std::max(top, r);
    }
    bool convex = true;
    for (std::size_t r = 0; r <= top; ++r) convex = convex && used[r];
    if (convex) {
      RankedContext rc(ctx, RankingFunction(ranks));
      bool ok = true;
      for (const auto& c : bound) {
        if (!satisfies_conditional(rc, c)) {
          ok = false;
          break;
        }
      }
      if (ok) models.push_back(std::move(rc));
    }
    std::size_t pos = n;
    while (pos > 0 && ranks[pos - 1] == n - 1) ranks[--pos] = 0;
    if (pos == 0) break;
    ++ranks[pos - 1];
  }
  return models;
}

}  // namespace dfca
