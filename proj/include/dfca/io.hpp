#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfca/context.hpp"
#include "dfca/order.hpp"
#include "dfca/propositional.hpp"
#include "dfca/ranking.hpp"

namespace dfca::io {

enum class ContextFormat { Cxt, Csv };

/// Burmeister format: "B", blank, object count, attribute count, blank,
/// object names, attribute names, then one row of X/. cells per object.
FormalContext parse_cxt(std::string_view text);
/// Canonical Burmeister text, LF line endings, 'X' and '.' cells.
std::string write_cxt(const FormalContext& ctx);

/// First row: corner cell then attribute names; then one row per object:
/// name then cells 1/x/X (true) or 0/empty (false).
FormalContext parse_csv(std::string_view text);

/// Format from the extension: ".csv" is CSV, anything else Burmeister.
ContextFormat format_for(const std::filesystem::path& path);

FormalContext load_context(const std::filesystem::path& path);
FormalContext load_context(const std::filesystem::path& path, ContextFormat format);

/// A context optionally carrying a preference order or a ranking of its
/// objects, given after the incidence rows of a .cxt file:
///
///   [order]          [ranks]
///   Helium < Carbon  bob: 0
///
/// A plain .cxt (or .csv) file is a document without either block.
struct ContextDocument {
  FormalContext context;
  std::optional<StrictOrder> order;
  std::optional<RankingFunction> ranks;

  /// The preference order of the document: the order block, the order
  /// induced by the rank block, or the empty order.
  StrictOrder effective_order() const;
};

ContextDocument parse_document(std::string_view text);
ContextDocument load_document(const std::filesystem::path& path);

/// Order lines "a < b" (a preferred to b) over the objects of ctx.
StrictOrder parse_order(std::string_view text, const FormalContext& ctx);

/// One conditional per line; '#' starts a comment, blank lines are ignored.
std::vector<Conditional> parse_conditionals(std::string_view text);
KnowledgeBase parse_kb(std::string_view text);
KnowledgeBase load_kb(const std::filesystem::path& path);
std::vector<Conditional> load_conditionals(const std::filesystem::path& path);

/// Same line format with the propositional grammar; a line without "|~" is
/// a classical statement.
prop::PropKnowledgeBase parse_prop_kb(std::string_view text);
prop::PropKnowledgeBase load_prop_kb(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace dfca::io
