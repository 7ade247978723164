#include "dfca/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "dfca/closure.hpp"
#include "dfca/io.hpp"
#include "dfca/propositional.hpp"

namespace dfca::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string format;  // "", "cxt" or "csv"
  std::string context_path;
  std::string kb_path;
  std::string kb2_path;
  std::string probe_path;
  std::string statement;
  bool exhaustive = false;
};

std::vector<std::string> names_of(const FormalContext& ctx, const ObjectSet& set) {
  std::vector<std::string> out;
  set.for_each([&](std::size_t g) { out.push_back(ctx.objects()[g]); });
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

// Terminal columns taken by UTF-8 text (one per code point).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

FormalContext load_ctx(const Options& o) {
  if (o.format == "csv") return io::load_context(o.context_path, io::ContextFormat::Csv);
  if (o.format == "cxt") return io::load_context(o.context_path, io::ContextFormat::Cxt);
  return io::load_context(o.context_path);
}

CliResult verdict(bool holds, std::string text, json doc) {
  doc["holds"] = holds;
  return {holds ? kHolds : kDoesNotHold, std::move(text), std::move(doc)};
}

CliResult cmd_extension(const Options& o) {
  const FormalContext ctx = load_ctx(o);
  const Formula f = parse_formula(o.statement);
  const auto objects = names_of(ctx, extension(ctx, f));
  std::string text;
  for (const auto& g : objects) text += g + "\n";
  return {kHolds, text,
          json{{"command", "extension"}, {"formula", to_string(f)}, {"objects", objects}}};
}

CliResult cmd_holds(const Options& o) {
  const FormalContext ctx = load_ctx(o);
  const Conditional c = parse_conditional(o.statement);
  if (c.kind != Conditional::Kind::Classical) {
    throw UnsupportedError("'holds' expects a classical implication '<A> -> <B>'");
  }
  const BoundConditional bound = bind(ctx, c);
  const bool holds = implication_holds(ctx, bound);
  const auto counterexamples =
      names_of(ctx, extension(ctx, bound.antecedent) - extension(ctx, bound.consequent));
  std::string text = holds ? "holds\n" : "does not hold\ncounterexamples: " + join(counterexamples) + "\n";
  return verdict(holds, text,
                 json{{"command", "holds"},
                      {"implication", to_string(c)},
                      {"counterexamples", counterexamples}});
}

RankOptions rank_options(const Options& o) {
  RankOptions r;
  r.validation = o.exhaustive ? Validation::Exhaustive : Validation::Runtime;
  r.limits = Limits::from_environment();
  return r;
}

CliResult cmd_validate(const Options& o) {
  const FormalContext ctx = load_ctx(o);
  const KnowledgeBase kb = io::load_kb(o.kb_path);
  const Limits limits = Limits::from_environment();
  json doc{{"command", "validate"}, {"mode", o.exhaustive ? "exhaustive" : "runtime"}};
  if (o.exhaustive) {
    const bool valid = delta_valid(ctx, kb, limits);
    doc["valid"] = valid;
    return {valid ? kHolds : kDoesNotHold, valid ? "valid\n" : "not valid\n", doc};
  }
  try {
    object_rank(ctx, kb, rank_options(o));
  } catch (const ValidityError& e) {
    doc["valid"] = false;
    doc["reason"] = e.what();
    return {kDoesNotHold, std::string("not valid: ") + e.what() + "\n", doc};
  }
  doc["valid"] = true;
  return {kHolds, "valid\n", doc};
}

std::string rank_table(const RankedContext& rc, const RankPartition& partition) {
  const FormalContext& ctx = rc.context();
  std::vector<std::string> header{"R", "object"};
  for (const auto& m : ctx.attributes()) header.push_back(m);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < partition.strata.size(); ++r) {
    bool first = true;
    partition.strata[r].for_each([&](std::size_t g) {
      std::vector<std::string> row{first ? std::to_string(r) : "", ctx.objects()[g]};
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        row.push_back(ctx.has(g, m) ? "×" : "");
      }
      rows.push_back(std::move(row));
      first = false;
    });
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = display_width(header[c]);
    for (const auto& row : rows) widths[c] = std::max(widths[c], display_width(row[c]));
  }
  auto render = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += " | ";
      line += pad(cells[c], widths[c]);
    }
    return rstrip(line) + "\n";
  };
  std::string out = render(header);
  std::string rule;
  for (std::size_t c = 0; c < widths.size(); ++c) {
    if (c > 0) rule += "-+-";
    rule += std::string(widths[c], '-');
  }
  out += rule + "\n";
  for (const auto& row : rows) out += render(row);
  return out;
}

json strata_json(const RankedContext& rc, const RankPartition& partition) {
  json strata = json::array();
  for (std::size_t r = 0; r < partition.strata.size(); ++r) {
    strata.push_back({{"rank", r}, {"objects", names_of(rc.context(), partition.strata[r])}});
  }
  return strata;
}

CliResult cmd_rank(const Options& o) {
  const ClosureSession s(load_ctx(o), io::load_kb(o.kb_path), rank_options(o));
  std::string text = rank_table(s.ranked(), s.partition());
  text += "n = " + std::to_string(s.partition().n()) + "\n";
  return {kHolds, text,
          json{{"command", "rank"},
               {"n", s.partition().n()},
               {"strata", strata_json(s.ranked(), s.partition())}}};
}

CliResult cmd_entail(const Options& o) {
  const ClosureSession s(load_ctx(o), io::load_kb(o.kb_path), rank_options(o));
  const Conditional q = parse_conditional(o.statement);
  if (q.kind != Conditional::Kind::Defeasible) {
    throw UnsupportedError("'entail' expects a defeasible conditional '<phi> |~ <psi>'");
  }
  const bool holds = crc_entails(s, q);
  const auto rank = antecedent_rank(s, q);
  std::string text = holds ? "holds\n" : "does not hold\n";
  text += rank ? "antecedent first non-exceptional at rank " + std::to_string(*rank) + "\n"
               : "antecedent is satisfied by no object\n";
  json doc{{"command", "entail"}, {"query", to_string(q)}};
  doc["antecedent_rank"] = rank ? json(*rank) : json(nullptr);
  return verdict(holds, text, doc);
}

CliResult cmd_diff(const Options& o) {
  const FormalContext ctx = load_ctx(o);
  const RankOptions options = rank_options(o);
  const ClosureSession before(ctx, io::load_kb(o.kb_path), options);
  const ClosureSession after(ctx, io::load_kb(o.kb2_path), options);
  const auto rows = entailment_diff(before, after, io::load_conditionals(o.probe_path));

  std::size_t width = std::string("probe").size();
  for (const auto& r : rows) width = std::max(width, display_width(to_string(r.probe)));
  auto word = [](bool b) { return b ? std::string("holds") : std::string("fails"); };
  std::string text = pad("probe", width) + " | before | after\n";
  json entries = json::array();
  for (const auto& r : rows) {
    std::string line = pad(to_string(r.probe), width) + " | " + pad(word(r.before), 6) + " | " +
                       word(r.after);
    if (r.before != r.after) line += "  (changed)";
    text += line + "\n";
    entries.push_back({{"probe", to_string(r.probe)}, {"before", r.before}, {"after", r.after}});
  }
  return {kHolds, text, json{{"command", "diff"}, {"probes", entries}}};
}

CliResult cmd_baserank(const Options& o) {
  const auto kb = io::load_prop_kb(o.kb_path);
  const auto result = prop::base_rank(kb, Limits::from_environment());
  auto stratum_text = [](const std::vector<prop::PropConditional>& cs) {
    std::vector<std::string> parts;
    for (const auto& c : cs) parts.push_back(to_string(c.material()));
    return parts;
  };
  std::string text;
  json strata = json::array();
  for (std::size_t i = 0; i < result.strata.size(); ++i) {
    const auto parts = stratum_text(result.strata[i]);
    text += "R" + std::to_string(i) + ": " + join(parts, "; ") + "\n";
    strata.push_back({{"rank", i}, {"materials", parts}});
  }
  const auto infinite = stratum_text(result.infinite);
  text += "R_inf: " + (infinite.empty() ? std::string("(empty)") : join(infinite, "; ")) + "\n";
  text += "n = " + std::to_string(result.n()) + "\n";
  return {kHolds, text,
          json{{"command", "baserank"},
               {"n", result.n()},
               {"strata", strata},
               {"infinite", infinite}}};
}

CliResult cmd_rcprop(const Options& o) {
  const auto kb = io::load_prop_kb(o.kb_path);
  const auto query = prop::parse_prop_conditional(o.statement);
  const auto v = prop::rc_entails(kb, query, Limits::from_environment());
  std::string text = v.entailed ? "holds\n" : "does not hold\n";
  text += v.antecedent_rank
              ? "antecedent first non-exceptional at rank " + std::to_string(*v.antecedent_rank) + "\n"
              : "antecedent is exceptional at every rank\n";
  json doc{{"command", "rcprop"}, {"query", to_string(query)}};
  doc["antecedent_rank"] = v.antecedent_rank ? json(*v.antecedent_rank) : json(nullptr);
  return verdict(v.entailed, text, doc);
}

CliResult cmd_satisfies(const Options& o) {
  const io::ContextDocument doc = io::load_document(o.context_path);
  const Conditional q = parse_conditional(o.statement);
  const PreferentialContext pc(doc.context, doc.effective_order());
  const bool holds = satisfies_conditional(pc, q);
  return verdict(holds, holds ? "holds\n" : "does not hold\n",
                 json{{"command", "satisfies"},
                      {"query", to_string(q)},
                      {"modular", is_modular(pc.order())}});
}

CliResult failure(int code, const std::string& message) {
  return {code, "error: " + message + "\n", json{{"error", message}}};
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Defeasible reasoning over formal contexts", "dfca"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit one JSON document instead of text");
  app.add_option("--format", o.format, "Context file format (default: by extension)")
      ->check(CLI::IsMember({"cxt", "csv"}));

  auto ctx_arg = [&](CLI::App* sub) {
    sub->add_option("context", o.context_path, "Context file (.cxt or .csv)")->required();
  };
  auto kb_arg = [&](CLI::App* sub) {
    sub->add_option("kb", o.kb_path, "Knowledge-base file")->required();
  };
  auto stmt_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("statement", o.statement, what)->required();
  };

  auto* extension_cmd = app.add_subcommand("extension", "Objects satisfying a compound attribute");
  ctx_arg(extension_cmd);
  stmt_arg(extension_cmd, "Formula");

  auto* holds_cmd = app.add_subcommand("holds", "Check a classical implication '<A> -> <B>'");
  ctx_arg(holds_cmd);
  stmt_arg(holds_cmd, "Implication");

  auto* validate_cmd = app.add_subcommand("validate", "Check Delta-validity of a knowledge base");
  ctx_arg(validate_cmd);
  kb_arg(validate_cmd);
  validate_cmd->add_flag("--exhaustive", o.exhaustive, "Enumerate every subset of the base");

  auto* rank_cmd = app.add_subcommand("rank", "Print the ObjectRank ranked context");
  ctx_arg(rank_cmd);
  kb_arg(rank_cmd);
  rank_cmd->add_flag("--exhaustive", o.exhaustive, "Validate by subset enumeration first");

  auto* entail_cmd = app.add_subcommand("entail", "Contextual rational closure entailment");
  ctx_arg(entail_cmd);
  kb_arg(entail_cmd);
  stmt_arg(entail_cmd, "Query '<phi> |~ <psi>'");
  entail_cmd->add_flag("--exhaustive", o.exhaustive, "Validate by subset enumeration first");

  auto* diff_cmd = app.add_subcommand("diff", "Compare entailments of two knowledge bases");
  ctx_arg(diff_cmd);
  kb_arg(diff_cmd);
  diff_cmd->add_option("kb2", o.kb2_path, "Second knowledge-base file")->required();
  diff_cmd->add_option("--probe", o.probe_path, "File with one probe conditional per line")
      ->required();

  auto* baserank_cmd = app.add_subcommand("baserank", "Propositional BaseRank strata");
  kb_arg(baserank_cmd);

  auto* rcprop_cmd = app.add_subcommand("rcprop", "Propositional rational closure entailment");
  kb_arg(rcprop_cmd);
  stmt_arg(rcprop_cmd, "Query '<phi> |~ <psi>'");

  auto* satisfies_cmd = app.add_subcommand(
      "satisfies", "Check a conditional against a context document's order or ranks");
  ctx_arg(satisfies_cmd);
  stmt_arg(satisfies_cmd, "Conditional '<phi> |~ <psi>'");

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "extension") result = cmd_extension(o);
    else if (name == "holds") result = cmd_holds(o);
    else if (name == "validate") result = cmd_validate(o);
    else if (name == "rank") result = cmd_rank(o);
    else if (name == "entail") result = cmd_entail(o);
    else if (name == "diff") result = cmd_diff(o);
    else if (name == "baserank") result = cmd_baserank(o);
    else if (name == "rcprop") result = cmd_rcprop(o);
    else result = cmd_satisfies(o);
  } catch (const CLI::CallForHelp&) {
    return {kHolds, app.help(), std::nullopt};
  } catch (const CLI::CallForAllHelp&) {
    return {kHolds, app.help("", CLI::AppFormatMode::All), std::nullopt};
  } catch (const CLI::ParseError& e) {
    result = failure(kUsageError, e.what());
  } catch (const ValidityError& e) {
    result = failure(kValidityError, e.what());
  } catch (const CapacityError& e) {
    result = failure(kValidityError, e.what());
  } catch (const ModularityError& e) {
    result = failure(kValidityError, e.what());
  } catch (const Error& e) {
    result = failure(kUsageError, e.what());
  } catch (const std::exception& e) {
    result = failure(kUsageError, e.what());
  }
  if (o.json && result.document) {
    (*result.document)["exit_code"] = result.exit_code;
  } else {
    result.document.reset();
  }
  return result;
}

}  // namespace dfca::cli
