#include <gtest/gtest.h>

#include "dfca/error.hpp"
#include "dfca/ranking.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace dfca;
namespace t = dfca::testing;

namespace {

FormalContext friends() {
  const std::vector<std::string> people{"alice", "bob", "charlie", "david", "eva", "frank"};
  std::vector<std::string> attributes;
  for (const auto& p : people) attributes.push_back("fw." + p);
  const std::vector<std::string> rows{"X.X.XX", ".XXX..", "..X...", "X..XXX", ".X..X.", "XXX..."};
  std::vector<std::vector<bool>> incidence;
  for (const auto& r : rows) {
    std::vector<bool> row;
    for (char c : r) row.push_back(c == 'X');
    incidence.push_back(row);
  }
  return FormalContext(people, attributes, incidence);
}

KnowledgeBase friends_kb() {
  return KnowledgeBase({parse_conditional("fw.alice |~ fw.bob"),
                        parse_conditional("fw.charlie |~ fw.david")});
}

std::vector<std::vector<std::string>> strata_names(const FormalContext& ctx,
                                                   const RankPartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : p.strata) {
    std::vector<std::string> names;
    s.for_each([&](std::size_t g) { names.push_back(ctx.objects()[g]); });
    out.push_back(names);
  }
  return out;
}

std::vector<Conditional> as_vector(const KnowledgeBase& kb) { return {kb.begin(), kb.end()}; }

}  // namespace

TEST(KnowledgeBase, Deduplicates) {
  KnowledgeBase kb;
  EXPECT_TRUE(kb.add(parse_conditional("a |~ b")));
  EXPECT_FALSE(kb.add(parse_conditional("(a) |~ b")));
  EXPECT_TRUE(kb.add(parse_conditional("a |~ !b")));
  EXPECT_EQ(kb.size(), 2u);
}

TEST(ObjectRank, FriendsExample) {
  const FormalContext ctx = friends();
  const auto result = object_rank(ctx, friends_kb());
  using V = std::vector<std::vector<std::string>>;
  EXPECT_EQ(strata_names(ctx, result.partition),
            (V{{"bob", "eva"}, {"charlie", "frank"}, {"alice", "david"}}));
  EXPECT_EQ(result.partition.n(), 2u);
  EXPECT_TRUE(satisfies_all(result.ranked, friends_kb()));
}

TEST(ObjectRank, FriendsUpdateMovesOnlyEva) {
  const FormalContext ctx = friends();
  KnowledgeBase kb = friends_kb();
  kb.add(parse_conditional("fw.eva |~ fw.frank"));
  const auto before = object_rank(ctx, friends_kb());
  const auto after = object_rank(ctx, kb);
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    if (ctx.objects()[g] == "eva") {
      EXPECT_EQ(after.ranked.rank(g), 3u);
    } else {
      EXPECT_EQ(after.ranked.rank(g), before.ranked.rank(g)) << ctx.objects()[g];
    }
  }
}

TEST(ObjectRank, EmptyBasePutsEverythingAtRankZero) {
  const FormalContext ctx = friends();
  const auto result = object_rank(ctx, KnowledgeBase{});
  ASSERT_EQ(result.partition.strata.size(), 1u);
  EXPECT_EQ(result.partition.strata[0], ctx.all_objects());
}

TEST(ObjectRank, EmptyContext) {
  const FormalContext ctx({}, {}, {});
  const auto result = object_rank(ctx, KnowledgeBase{});
  EXPECT_EQ(result.partition.n(), 0u);
  EXPECT_EQ(result.ranked.ranking().size(), 0u);
}

TEST(ObjectRank, RejectsInvalidBases) {
  const FormalContext ctx = friends();
  // Antecedent with an empty extension.
  EXPECT_THROW(object_rank(ctx, KnowledgeBase({parse_conditional("fw.bob & !fw.bob |~ fw.eva")})),
               ValidityError);
  // Contradictory expectations about the same objects.
  const KnowledgeBase clash({parse_conditional("fw.charlie |~ fw.david"),
                             parse_conditional("fw.charlie |~ !fw.david")});
  EXPECT_FALSE(delta_valid(ctx, clash));
  EXPECT_THROW(object_rank(ctx, clash), ValidityError);
  RankOptions exhaustive;
  exhaustive.validation = Validation::Exhaustive;
  EXPECT_THROW(object_rank(ctx, clash, exhaustive), ValidityError);
}

TEST(ObjectRank, RejectsClassicalStatements) {
  EXPECT_THROW(object_rank(friends(), KnowledgeBase({parse_conditional("fw.alice -> fw.bob")})),
               UnsupportedError);
}

TEST(DeltaValidity, FriendsBaseIsValid) { EXPECT_TRUE(delta_valid(friends(), friends_kb())); }

TEST(DeltaValidity, MatchesDefinition) {
  t::Rng rng(37);
  for (int trial = 0; trial < 400; ++trial) {
    const auto ctx = t::random_context(rng, t::uniform(rng, 1, 5), t::uniform(rng, 1, 4));
    const auto kb = t::random_kb(rng, ctx, 4, 2);
    EXPECT_EQ(delta_valid(ctx, kb), t::oracle::delta_valid(ctx, as_vector(kb)));
  }
}

TEST(DeltaValidity, CapacityGuard) {
  const FormalContext ctx = friends();
  const KnowledgeBase kb({parse_conditional("fw.alice |~ fw.eva"),
                           parse_conditional("fw.alice |~ fw.frank")});
  Limits tight;
  tight.max_kb_size = 1;
  EXPECT_THROW(delta_valid(ctx, kb, tight), CapacityError);
}

TEST(ObjectRank, RuntimeAndExhaustiveModesAgreeOnValidBases) {
  t::Rng rng(41);
  RankOptions exhaustive;
  exhaustive.validation = Validation::Exhaustive;
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto ctx = t::random_context(rng, t::uniform(rng, 1, 5), t::uniform(rng, 1, 4));
    const auto kb = t::random_kb(rng, ctx, 3, 2);
    if (!t::oracle::delta_valid(ctx, as_vector(kb))) continue;
    ++valid;
    const auto a = object_rank(ctx, kb);
    const auto b = object_rank(ctx, kb, exhaustive);
    EXPECT_EQ(a.ranked.ranking(), b.ranked.ranking());
  }
  EXPECT_GT(valid, 50);
}

TEST(ObjectRank, IsTheMinimumRankedModel) {
  t::Rng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 600 && checked < 100; ++trial) {
    const auto ctx = t::random_context(rng, t::uniform(rng, 1, 5), t::uniform(rng, 1, 5));
    const auto kb = t::random_kb(rng, ctx, 3, 2);
    const auto conditionals = as_vector(kb);
    if (!t::oracle::delta_valid(ctx, conditionals)) continue;
    ++checked;
    const auto result = object_rank(ctx, kb);
    const auto& ours = result.ranked.ranking().ranks();
    const auto models = t::oracle::ranked_models(ctx, conditionals);
    ASSERT_FALSE(models.empty());
    for (const auto& m : models) {
      for (std::size_t g = 0; g < m.size(); ++g) ASSERT_LE(ours[g], m[g]);
    }
    EXPECT_EQ(enumerate_ranked_models(ctx, kb).size(), models.size());
  }
  EXPECT_EQ(checked, 100);
}

TEST(RankedModels, EnumerationCapacity) {
  Limits tight;
  tight.max_objects = 3;
  EXPECT_THROW(enumerate_ranked_models(friends(), friends_kb(), tight), CapacityError);
  const FormalContext empty({}, {}, {});
  EXPECT_EQ(enumerate_ranked_models(empty, KnowledgeBase{}).size(), 1u);
}

TEST(ContextPreference, Pointwise) {
  const FormalContext ctx({"a", "b", "c"}, {"m"}, {{true}, {false}, {true}});
  const RankedContext low(ctx, RankingFunction({0, 0, 1}));
  const RankedContext high(ctx, RankingFunction({0, 1, 1}));
  const RankedContext other(ctx, RankingFunction({1, 0, 0}));
  EXPECT_TRUE(context_preference(low, high).le);
  EXPECT_FALSE(context_preference(low, high).ge);
  const auto incomparable = context_preference(low, other);
  EXPECT_FALSE(incomparable.le);
  EXPECT_FALSE(incomparable.ge);
  const auto self = context_preference(low, low);
  EXPECT_TRUE(self.le && self.ge);
  const FormalContext different({"a", "b", "c"}, {"n"}, {{true}, {false}, {true}});
  EXPECT_THROW(context_preference(low, RankedContext(different, RankingFunction({0, 0, 0}))),
               StructuralError);
}
