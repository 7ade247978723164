#pragma once

#include <cstddef>
#include <vector>

#include "dfca/context.hpp"
#include "dfca/formula.hpp"
#include "dfca/limits.hpp"
#include "dfca/order.hpp"

namespace dfca {

/// Ordered set of conditionals over one attribute vocabulary. Duplicates are
/// dropped on insertion, so the base behaves as a set.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(const std::vector<Conditional>& conditionals);

  /// Returns false if an identical conditional is already present.
  bool add(Conditional c);

  std::size_t size() const noexcept { return conditionals_.size(); }
  bool empty() const noexcept { return conditionals_.empty(); }
  const std::vector<Conditional>& conditionals() const noexcept { return conditionals_; }
  const Conditional& operator[](std::size_t i) const { return conditionals_.at(i); }

  auto begin() const { return conditionals_.begin(); }
  auto end() const { return conditionals_.end(); }

 private:
  std::vector<Conditional> conditionals_;
};

/// Strata (R_0, ..., R_n) of objects; they partition G.
struct RankPartition {
  std::vector<ObjectSet> strata;

  /// Highest rank index.
  std::size_t n() const noexcept { return strata.empty() ? 0 : strata.size() - 1; }
};

enum class Validation {
  /// Check that every round settles at least one conditional and that the
  /// result satisfies the knowledge base.
  Runtime,
  /// Additionally run the subset enumeration of delta_valid up front.
  Exhaustive,
};

struct RankOptions {
  Validation validation = Validation::Runtime;
  Limits limits{};
};

struct ObjectRankResult {
  RankedContext ranked;
  RankPartition partition;
  /// For every conditional of the knowledge base, the stratum on which its
  /// antecedent was first satisfied.
  std::vector<std::size_t> settled_at;
};

/// Delta-validity: every non-empty subset of the base has an object that
/// satisfies the materialisation of all members and the antecedent of one.
/// Throws CapacityError if the base exceeds limits.max_kb_size.
bool delta_valid(const FormalContext& ctx, const KnowledgeBase& kb, const Limits& limits = {});

/// ObjectRank: stratifies objects by how exceptional they are with respect
/// to the base. Throws ValidityError when the base turns out not to be
/// Delta-valid, UnsupportedError for classical statements.
ObjectRankResult object_rank(const FormalContext& ctx, const KnowledgeBase& kb,
                             const RankOptions& options = {});

struct ContextPreference {
  bool le = false;  ///< lhs(g) <= rhs(g) for every object
  bool ge = false;  ///< lhs(g) >= rhs(g) for every object
};

/// Pointwise comparison of two rankings of the same context.
ContextPreference context_preference(const RankedContext& lhs, const RankedContext& rhs);

/// Every convex ranking of ctx whose ranked context satisfies the base, in
/// lexicographic order of rank vectors. Brute force; refuses contexts with
/// more than limits.max_objects objects.
std::vector<RankedContext> enumerate_ranked_models(const FormalContext& ctx,
                                                   const KnowledgeBase& kb,
                                                   const Limits& limits = {});

/// True iff the ranked context satisfies every conditional of the base.
bool satisfies_all(const RankedContext& rc, const KnowledgeBase& kb);

}  // namespace dfca
