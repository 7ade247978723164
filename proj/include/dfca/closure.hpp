#pragma once

#include <optional>
#include <vector>

#include "dfca/ranking.hpp"

namespace dfca {

/// A formal context, a knowledge base, and the ObjectRank ranking they
/// determine. Immutable: add_conditional returns a new session.
class ClosureSession {
 public:
  /// Runs ObjectRank; throws ValidityError if the base is not Delta-valid.
  ClosureSession(FormalContext context, KnowledgeBase kb, RankOptions options = {});

  const FormalContext& context() const noexcept { return ranked().context(); }
  const KnowledgeBase& kb() const noexcept { return kb_; }
  const RankedContext& ranked() const noexcept { return result_.ranked; }
  const RankPartition& partition() const noexcept { return result_.partition; }
  const ObjectRankResult& rank_result() const noexcept { return result_; }
  const RankOptions& options() const noexcept { return options_; }

 private:
  KnowledgeBase kb_;
  RankOptions options_;
  ObjectRankResult result_;
};

/// Contextual rational closure: the query holds in the session's ranked context.
bool crc_entails(const ClosureSession& s, const Conditional& query);

/// Lowest rank holding an object of the query antecedent's extension, or
/// nullopt when the antecedent is satisfied by no object.
std::optional<std::size_t> antecedent_rank(const ClosureSession& s, const Conditional& query);

/// New session over kb plus c, re-ranked from scratch.
ClosureSession add_conditional(const ClosureSession& s, const Conditional& c);

struct EntailmentChange {
  Conditional probe;
  bool before;
  bool after;
};

/// Truth of each probe in two sessions over the same formal context.
std::vector<EntailmentChange> entailment_diff(const ClosureSession& before,
                                              const ClosureSession& after,
                                              const std::vector<Conditional>& probes);

}  // namespace dfca
