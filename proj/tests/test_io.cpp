#include <gtest/gtest.h>

#include <filesystem>

#include "dfca/error.hpp"
#include "dfca/io.hpp"
#include "support/random_instances.hpp"

using namespace dfca;
namespace fs = std::filesystem;
namespace t = dfca::testing;

namespace {

const fs::path kData = DFCA_TEST_DATA;

std::size_t error_line(std::string_view text) {
  try {
    io::parse_cxt(text);
  } catch (const ParseError& e) {
    return e.line().value_or(0);
  }
  return 0;
}

}  // namespace

TEST(Cxt, ChemistryFile) {
  const FormalContext ctx = io::load_context(kData / "chemistry.cxt");
  EXPECT_EQ(ctx.objects(), std::vector<std::string>({"Helium", "Hydrogen", "Carbon"}));
  EXPECT_EQ(ctx.attribute_count(), 6u);
  EXPECT_EQ(ctx.row(1), ctx.attributes_named({"Gas", "Non-metal", "Reactive", "Essential", "Abundant"}));
  EXPECT_EQ(ctx.row(2), ctx.attributes_named({"Non-metal", "Essential", "Solid"}));
}

TEST(Cxt, EmptyContext) {
  const FormalContext ctx = io::parse_cxt("B\n\n0\n0\n\n");
  EXPECT_EQ(ctx.object_count(), 0u);
  EXPECT_EQ(ctx.attribute_count(), 0u);
}

TEST(Cxt, ErrorsReportLineNumbers) {
  EXPECT_EQ(error_line("B\n\n1\n2\n\ng\nm\nn\nX\n"), 9u);       // row too short
  EXPECT_EQ(error_line("B\n\n1\n2\n\ng\nm\nn\nX?\n"), 9u);      // illegal cell
  EXPECT_EQ(error_line("B\n\n2\n1\n\ng\ng\nm\nX\n.\n"), 7u);    // duplicate object
  EXPECT_EQ(error_line("A\n\n1\n1\n\ng\nm\nX\n"), 1u);          // bad magic
  EXPECT_EQ(error_line("B\n\nx\n1\n\ng\nm\nX\n"), 3u);          // bad count
  EXPECT_EQ(error_line("B\n\n1\n1\n\ng\nm\nX\nX\n"), 9u);       // trailing rows
  EXPECT_EQ(error_line("B\n\n2\n1\n\ng\nh\nm\nX\n"), 10u);      // missing row
  EXPECT_NO_THROW(io::parse_cxt("B\n\n1\n1\n\ng\nm\nx\n\n\n"));
}

TEST(Cxt, CanonicalCorpusRoundTripsByteForByte) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData / "corpus")) {
    const std::string text = io::read_file(entry.path());
    EXPECT_EQ(io::write_cxt(io::parse_cxt(text)), text) << entry.path();
    ++files;
  }
  EXPECT_EQ(files, 10u);
}

TEST(Cxt, WriteThenParseIsIdentity) {
  t::Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ctx = t::random_context(rng, t::uniform(rng, 0, 6), t::uniform(rng, 0, 6));
    EXPECT_EQ(io::parse_cxt(io::write_cxt(ctx)), ctx);
  }
}

TEST(Csv, ParsesCellVariants) {
  const FormalContext ctx = io::parse_csv(",Sun,\"Rain, heavy\",Cold\nDay 1,1,0,\nDay 2,x,,X\n");
  EXPECT_EQ(ctx.attributes(), std::vector<std::string>({"Sun", "Rain, heavy", "Cold"}));
  EXPECT_EQ(ctx.row(0), ctx.attributes_named({"Sun"}));
  EXPECT_EQ(ctx.row(1), ctx.attributes_named({"Sun", "Cold"}));
  EXPECT_THROW(io::parse_csv(",a\ng,2\n"), ParseError);
  EXPECT_THROW(io::parse_csv(",a,b\ng,1\n"), ParseError);
}

TEST(Csv, AgreesWithCxt) {
  const FormalContext cxt = io::load_context(kData / "weather.cxt");
  const FormalContext csv = io::parse_csv(
      ",Sun,Rain,Wind,Cold\nDay 1,1,0,0,0\nDay 2,0,0,1,1\nDay 3,0,1,0,1\nDay 4,0,0,0,1\n");
  EXPECT_EQ(csv, cxt);
  EXPECT_EQ(io::format_for("x.csv"), io::ContextFormat::Csv);
  EXPECT_EQ(io::format_for("x.cxt"), io::ContextFormat::Cxt);
}

TEST(Document, OrderBlock) {
  const auto doc = io::load_document(kData / "elements.cxt");
  ASSERT_TRUE(doc.order.has_value());
  EXPECT_FALSE(doc.ranks.has_value());
  EXPECT_TRUE(doc.effective_order().precedes(0, 2));
  EXPECT_FALSE(doc.effective_order().comparable(0, 1));
}

TEST(Document, RankBlock) {
  const auto doc = io::load_document(kData / "friends_ranked.cxt");
  ASSERT_TRUE(doc.ranks.has_value());
  EXPECT_EQ(doc.ranks->ranks(), std::vector<std::size_t>({2, 0, 1, 2, 0, 1}));
  EXPECT_TRUE(doc.effective_order().precedes(1, 2));
}

TEST(Document, PlainContextHasEmptyOrder) {
  const auto doc = io::load_document(kData / "chemistry.cxt");
  EXPECT_TRUE(doc.effective_order().pairs().empty());
}

TEST(Document, Errors) {
  const std::string base = "B\n\n2\n1\n\na\nb\nm\nX\n.\n";
  EXPECT_THROW(io::parse_document(base + "[order]\na < c\n"), ParseError);
  EXPECT_THROW(io::parse_document(base + "[order]\na < b\nb < a\n"), ParseError);
  EXPECT_THROW(io::parse_document(base + "[order]\na < b\n[ranks]\na: 0\nb: 1\n"), ParseError);
  EXPECT_THROW(io::parse_document(base + "[ranks]\na: 0\n"), ParseError);
  EXPECT_THROW(io::parse_document(base + "[ranks]\na: 0\nb: 2\n"), ParseError);
  EXPECT_THROW(io::parse_document(base + "[tiers]\n"), ParseError);
  EXPECT_NO_THROW(io::parse_document(base + "[order]\n# comment\n\"a\" < b\n"));
}

TEST(KnowledgeBaseFile, CommentsAndLineNumbers) {
  const auto kb = io::parse_kb("# header\n\na |~ b  # trailing\n\"x # y\" |~ c\na |~ b\n");
  ASSERT_EQ(kb.size(), 2u);
  EXPECT_EQ(kb[1].antecedent.name(), "x # y");
  try {
    io::parse_kb("a |~ b\n\na |~ (b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(KnowledgeBaseFile, Files) {
  EXPECT_EQ(io::load_kb(kData / "friends.kb").size(), 2u);
  EXPECT_EQ(io::load_conditionals(kData / "friends.probes").size(), 4u);
  EXPECT_EQ(io::load_prop_kb(kData / "penguin.kb").size(), 3u);
  EXPECT_THROW(io::load_kb(kData / "missing.kb"), IoError);
  EXPECT_THROW(io::load_context(kData / "missing.cxt"), IoError);
}
