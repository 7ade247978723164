#include "dfca/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dfca::io {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

// Text before the first '#' that is not inside double quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && quoted) {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) ++i;
      out += s[i];
    }
    return out;
  }
  return s;
}

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t index,
                        const char* what) {
  if (index >= lines.size()) {
    throw ParseError(std::string("missing ") + what, 0, index + 1);
  }
  const std::string text = trim(lines[index]);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string("expected ") + what + ", found '" + lines[index] + "'", 0,
                     index + 1);
  }
  return value;
}

void expect_blank(const std::vector<std::string>& lines, std::size_t index) {
  if (index >= lines.size()) throw ParseError("missing blank header line", 0, index + 1);
  if (!trim(lines[index]).empty()) {
    throw ParseError("expected blank header line, found '" + lines[index] + "'", 0, index + 1);
  }
}

// Parses the Burmeister part of `lines`; returns the context and the index
// of the first line after the incidence rows.
std::pair<FormalContext, std::size_t> parse_cxt_lines(const std::vector<std::string>& lines) {
  if (lines.empty() || lines[0] != "B") {
    throw ParseError("expected 'B' on the first line", 0, 1);
  }
  expect_blank(lines, 1);
  const std::size_t n_objects = parse_count(lines, 2, "object count");
  const std::size_t n_attributes = parse_count(lines, 3, "attribute count");
  expect_blank(lines, 4);

  std::size_t line = 5;
  auto take_names = [&](std::size_t count, const char* what) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i, ++line) {
      if (line >= lines.size()) {
        throw ParseError(std::string("missing ") + what + " name " + std::to_string(i + 1) +
                             " of " + std::to_string(count),
                         0, line + 1);
      }
      if (std::find(names.begin(), names.end(), lines[line]) != names.end()) {
        throw ParseError(std::string("duplicate ") + what + " name '" + lines[line] + "'", 0,
                         line + 1);
      }
      names.push_back(lines[line]);
    }
    return names;
  };
  auto objects = take_names(n_objects, "object");
  auto attributes = take_names(n_attributes, "attribute");

  std::vector<std::vector<bool>> incidence;
  for (std::size_t g = 0; g < n_objects; ++g, ++line) {
    if (line >= lines.size()) {
      throw ParseError("missing incidence row for object '" + objects[g] + "'", 0, line + 1);
    }
    const std::string& row = lines[line];
    if (row.size() != n_attributes) {
      throw ParseError("incidence row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(n_attributes),
                       std::min(row.size(), n_attributes), line + 1);
    }
    std::vector<bool> cells(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m) {
      if (row[m] == 'X' || row[m] == 'x') {
        cells[m] = true;
      } else if (row[m] != '.') {
        throw ParseError(std::string("illegal cell character '") + row[m] + "'", m, line + 1);
      }
    }
    incidence.push_back(std::move(cells));
  }
  return {FormalContext(std::move(objects), std::move(attributes), incidence), line};
}

// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line.size(), line_no);
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  auto [ctx, next] = parse_cxt_lines(lines);
  for (std::size_t i = next; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) {
      throw ParseError("unexpected content after the incidence rows", 0, i + 1);
    }
  }
  return ctx;
}

std::string write_cxt(const FormalContext& ctx) {
  std::string out = "B\n\n";
  out += std::to_string(ctx.object_count()) + "\n";
  out += std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& g : ctx.objects()) out += g + "\n";
  for (const auto& m : ctx.attributes()) out += m + "\n";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.has(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

FormalContext parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<std::string> attributes;
  std::vector<std::string> objects;
  std::vector<std::vector<bool>> incidence;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto fields = split_csv(lines[i], i + 1);
    if (!header_seen) {
      attributes.assign(fields.begin() + 1, fields.end());
      for (std::size_t a = 0; a < attributes.size(); ++a) {
        if (std::find(attributes.begin(), attributes.begin() + a, attributes[a]) !=
            attributes.begin() + a) {
          throw ParseError("duplicate attribute name '" + attributes[a] + "'", 0, i + 1);
        }
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != attributes.size() + 1) {
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(attributes.size() + 1),
                       0, i + 1);
    }
    if (std::find(objects.begin(), objects.end(), fields[0]) != objects.end()) {
      throw ParseError("duplicate object name '" + fields[0] + "'", 0, i + 1);
    }
    objects.push_back(fields[0]);
    std::vector<bool> cells(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      const std::string& cell = fields[m + 1];
      if (cell == "1" || cell == "x" || cell == "X") {
        cells[m] = true;
      } else if (!(cell == "0" || cell.empty())) {
        throw ParseError("illegal cell value '" + cell + "'", m + 1, i + 1);
      }
    }
    incidence.push_back(std::move(cells));
  }
  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

ContextFormat format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" ? ContextFormat::Csv : ContextFormat::Cxt;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FormalContext load_context(const std::filesystem::path& path) {
  return load_context(path, format_for(path));
}

FormalContext load_context(const std::filesystem::path& path, ContextFormat format) {
  const std::string text = read_file(path);
  return format == ContextFormat::Csv ? parse_csv(text) : parse_cxt(text);
}

StrictOrder ContextDocument::effective_order() const {
  if (order) return *order;
  if (ranks) return order_from_ranks(*ranks);
  return StrictOrder(context.object_count());
}

namespace {

std::size_t object_index(const FormalContext& ctx, const std::string& name, std::size_t line) {
  auto g = ctx.find_object(name);
  if (!g) throw ParseError("unknown object '" + name + "'", 0, line);
  return *g;
}

// Parses "a < b" lines from lines[first, last).
StrictOrder order_from_lines(const std::vector<std::string>& lines, std::size_t first,
                             std::size_t last, const FormalContext& ctx) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = first; i < last; ++i) {
    const std::string body = trim(strip_comment(lines[i]));
    if (body.empty()) continue;
    bool quoted = false;
    std::size_t split = std::string::npos;
    for (std::size_t k = 0; k < body.size() && split == std::string::npos; ++k) {
      if (body[k] == '"') quoted = !quoted;
      if (body[k] == '<' && !quoted) split = k;
    }
    if (split == std::string::npos) throw ParseError("expected 'a < b'", 0, i + 1);
    const std::string lhs = unquote(trim(body.substr(0, split)));
    const std::string rhs = unquote(trim(body.substr(split + 1)));
    pairs.emplace_back(object_index(ctx, lhs, i + 1), object_index(ctx, rhs, i + 1));
  }
  try {
    return StrictOrder(ctx.object_count(), pairs);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 0, first + 1);
  }
}

RankingFunction ranks_from_lines(const std::vector<std::string>& lines, std::size_t first,
                                 std::size_t last, const FormalContext& ctx) {
  std::vector<std::optional<std::size_t>> ranks(ctx.object_count());
  for (std::size_t i = first; i < last; ++i) {
    const std::string body = trim(strip_comment(lines[i]));
    if (body.empty()) continue;
    const std::size_t colon = body.rfind(':');
    if (colon == std::string::npos) throw ParseError("expected 'object: rank'", 0, i + 1);
    const std::size_t g = object_index(ctx, unquote(trim(body.substr(0, colon))), i + 1);
    const std::string value = trim(body.substr(colon + 1));
    std::size_t r = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), r);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParseError("expected a natural number rank, found '" + value + "'", colon + 1, i + 1);
    }
    if (ranks[g]) throw ParseError("object ranked twice", 0, i + 1);
    ranks[g] = r;
  }
  std::vector<std::size_t> plain;
  for (std::size_t g = 0; g < ranks.size(); ++g) {
    if (!ranks[g]) {
      throw ParseError("object '" + ctx.objects()[g] + "' has no rank", 0, first + 1);
    }
    plain.push_back(*ranks[g]);
  }
  try {
    return RankingFunction(std::move(plain));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 0, first + 1);
  }
}

}  // namespace

ContextDocument parse_document(std::string_view text) {
  const auto lines = split_lines(text);
  auto [ctx, next] = parse_cxt_lines(lines);
  ContextDocument doc{std::move(ctx), std::nullopt, std::nullopt};

  std::size_t i = next;
  while (i < lines.size()) {
    const std::string header = trim(strip_comment(lines[i]));
    if (header.empty()) {
      ++i;
      continue;
    }
    if (header != "[order]" && header != "[ranks]") {
      throw ParseError("expected '[order]' or '[ranks]', found '" + lines[i] + "'", 0, i + 1);
    }
    if (doc.order || doc.ranks) {
      throw ParseError("a document carries at most one order or rank block", 0, i + 1);
    }
    std::size_t end = i + 1;
    while (end < lines.size() && trim(lines[end]).rfind('[', 0) != 0) ++end;
    if (header == "[order]") {
      doc.order = order_from_lines(lines, i + 1, end, doc.context);
    } else {
      doc.ranks = ranks_from_lines(lines, i + 1, end, doc.context);
    }
    i = end;
  }
  return doc;
}

ContextDocument load_document(const std::filesystem::path& path) {
  if (format_for(path) == ContextFormat::Csv) {
    return ContextDocument{load_context(path, ContextFormat::Csv), std::nullopt, std::nullopt};
  }
  return parse_document(read_file(path));
}

StrictOrder parse_order(std::string_view text, const FormalContext& ctx) {
  const auto lines = split_lines(text);
  return order_from_lines(lines, 0, lines.size(), ctx);
}

namespace {

template <class Parse>
auto parse_statement_lines(std::string_view text, Parse&& parse) {
  using Item = decltype(parse(std::string_view{}));
  std::vector<Item> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string body = strip_comment(lines[i]);
    if (trim(body).empty()) continue;
    try {
      out.push_back(parse(body));
    } catch (const ParseError& e) {
      throw e.at_line(i + 1);
    }
  }
  return out;
}

}  // namespace

std::vector<Conditional> parse_conditionals(std::string_view text) {
  return parse_statement_lines(text, [](std::string_view s) { return parse_conditional(s); });
}

KnowledgeBase parse_kb(std::string_view text) { return KnowledgeBase(parse_conditionals(text)); }

KnowledgeBase load_kb(const std::filesystem::path& path) { return parse_kb(read_file(path)); }

std::vector<Conditional> load_conditionals(const std::filesystem::path& path) {
  return parse_conditionals(read_file(path));
}

prop::PropKnowledgeBase parse_prop_kb(std::string_view text) {
  auto statements =
      parse_statement_lines(text, [](std::string_view s) { return prop::parse_prop_statement(s); });
  prop::PropKnowledgeBase kb;
  for (auto& s : statements) {
    if (std::find(kb.begin(), kb.end(), s) == kb.end()) kb.push_back(std::move(s));
  }
  return kb;
}

prop::PropKnowledgeBase load_prop_kb(const std::filesystem::path& path) {
  return parse_prop_kb(read_file(path));
}

}  // namespace dfca::io
