#include "dfca/closure.hpp"

namespace dfca {

ClosureSession::ClosureSession(FormalContext context, KnowledgeBase kb, RankOptions options)
    : kb_(std::move(kb)), options_(options), result_(object_rank(context, kb_, options_)) {}

bool crc_entails(const ClosureSession& s, const Conditional& query) {
  if (query.kind != Conditional::Kind::Defeasible) {
    throw UnsupportedError("entailment queries must be defeasible conditionals");
  }
  return satisfies_conditional(s.ranked(), query);
}

std::optional<std::size_t> antecedent_rank(const ClosureSession& s, const Conditional& query) {
  const ObjectSet ext = extension(s.context(), query.antecedent);
  std::optional<std::size_t> lowest;
  ext.for_each([&](std::size_t g) {
    const std::size_t r = s.ranked().rank(g);
    if (!lowest || r < *lowest) lowest = r;
  });
  return lowest;
}

ClosureSession add_conditional(const ClosureSession& s, const Conditional& c) {
  KnowledgeBase extended = s.kb();
  extended.add(c);
  return ClosureSession(s.context(), std::move(extended), s.options());
}

std::vector<EntailmentChange> entailment_diff(const ClosureSession& before,
                                              const ClosureSession& after,
                                              const std::vector<Conditional>& probes) {
  if (!(before.context() == after.context())) {
    throw StructuralError("sessions are over different formal contexts");
  }
  std::vector<EntailmentChange> out;
  out.reserve(probes.size());
  for (const auto& p : probes) out.push_back({p, crc_entails(before, p), crc_entails(after, p)});
  return out;
}

}  // namespace dfca
