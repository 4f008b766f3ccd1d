#include "voicecmd/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace voicecmd {

namespace {

using nlohmann::json;

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// JSON projection of a resolved argument for structural comparison:
// enums project to their constant name, mapped objects to their surface
// key, collections to the materialized element array.
json value_to_json(const Value& value, const TypeDescriptor& descriptor) {
  switch (value.kind()) {
    case Value::Kind::none:
      return nullptr;
    case Value::Kind::integer:
      return value.as_integer();
    case Value::Kind::real:
      return value.as_real();
    case Value::Kind::enum_constant:
    case Value::Kind::text:
    case Value::Kind::mapped:
      return value.as_text();
    case Value::Kind::collection: {
      const CollectionValue& c = value.as_collection();
      json items = json::array();
      const TypeDescriptor& element = descriptor.kind() == TypeDescriptor::Kind::collection
                                          ? descriptor.element()
                                          : descriptor;
      if (c.kind() == CollectionValue::Kind::all_values) {
        if (element.kind() == TypeDescriptor::Kind::enumeration) {
          for (const EnumConstant& constant : element.constants()) items.push_back(constant.name);
        } else {
          ResolutionContext ctx;
          const std::vector<std::string>* values =
              element.kind() == TypeDescriptor::Kind::bounded_string
                  ? ctx.provider_values(element)
                  : nullptr;
          if (values)
            for (const std::string& v : *values) items.push_back(v);
          else
            items.push_back("all");
        }
      } else {
        c.for_each([&](const Value& v) { items.push_back(value_to_json(v, element)); });
      }
      return items;
    }
  }
  return nullptr;
}

bool json_less(const json& a, const json& b) {
  if (a.is_number() && b.is_number()) return a.get<double>() < b.get<double>();
  if (a.is_string() && b.is_string()) return a.get<std::string>() < b.get<std::string>();
  return a.type_name() < std::string(b.type_name());
}

bool json_equal(const json& expected, const json& actual) {
  if (expected.is_number() && actual.is_number())
    return std::abs(expected.get<double>() - actual.get<double>()) <= 1e-9;
  if (expected.is_array() && actual.is_array()) {
    if (expected.size() != actual.size()) return false;
    // Collections compare as sorted value lists.
    std::vector<json> lhs(expected.begin(), expected.end());
    std::vector<json> rhs(actual.begin(), actual.end());
    std::sort(lhs.begin(), lhs.end(), json_less);
    std::sort(rhs.begin(), rhs.end(), json_less);
    for (size_t i = 0; i < lhs.size(); ++i) {
      if (!json_equal(lhs[i], rhs[i])) return false;
    }
    return true;
  }
  return expected == actual;
}

std::string describe_result(const ResolutionResult& result) {
  switch (result.kind) {
    case ResolutionResult::Kind::resolved:
      return result.call->to_display_string() + " [" + format_score(result.call->score) + "]";
    case ResolutionResult::Kind::ambiguous: {
      std::string out = "ambiguous (";
      for (size_t i = 0; i < result.options.size(); ++i) {
        if (i) out += ", ";
        out += result.options[i].command_id;
      }
      return out + ")";
    }
    case ResolutionResult::Kind::no_match:
      return "no match [best " + format_score(result.best_score) + "]";
  }
  return "?";
}

}  // namespace

std::vector<CorpusEntry> load_corpus(std::istream& in) {
  std::vector<CorpusEntry> corpus;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    json row = json::parse(stripped, nullptr, false);
    if (row.is_discarded()) throw CorpusFormatError(line_number, "not valid JSON");
    if (!row.is_object() || !row.contains("sentence") || !row["sentence"].is_string())
      throw CorpusFormatError(line_number, "missing string field 'sentence'");
    if (!row.contains("expected")) throw CorpusFormatError(line_number, "missing field 'expected'");

    CorpusEntry entry;
    entry.sentence = row["sentence"].get<std::string>();
    const json& expected = row["expected"];
    if (expected.is_string()) {
      std::string outcome = expected.get<std::string>();
      if (outcome == "no_match") {
        entry.expected = CorpusEntry::Expected::no_match;
      } else if (outcome == "ambiguous") {
        entry.expected = CorpusEntry::Expected::ambiguous;
      } else {
        throw CorpusFormatError(line_number, "unknown expected outcome '" + outcome + "'");
      }
    } else if (expected.is_object()) {
      if (!expected.contains("command") || !expected["command"].is_string())
        throw CorpusFormatError(line_number, "expected object needs a string 'command'");
      entry.expected = CorpusEntry::Expected::resolved;
      entry.command = expected["command"].get<std::string>();
      if (expected.contains("args")) {
        if (!expected["args"].is_array())
          throw CorpusFormatError(line_number, "'args' must be an array");
        entry.args_json = expected["args"].dump();
      }
    } else {
      throw CorpusFormatError(line_number, "'expected' must be an object or outcome string");
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(in);
}

CorpusReport evaluate_corpus(const Registry& registry, const std::vector<CorpusEntry>& corpus) {
  CorpusReport report;
  if (corpus.empty()) {
    report.warnings.push_back("corpus is empty; accuracy is vacuously 1.0");
    return report;
  }
  for (const CorpusEntry& entry : corpus) {
    CorpusEntryResult er;
    er.entry = entry;
    ResolutionResult result = resolve(registry, entry.sentence);
    er.actual = describe_result(result);
    switch (entry.expected) {
      case CorpusEntry::Expected::no_match:
        er.correct = result.no_match();
        break;
      case CorpusEntry::Expected::ambiguous:
        er.correct = result.ambiguous();
        break;
      case CorpusEntry::Expected::resolved: {
        if (!result.resolved() || result.call->command_id != entry.command) {
          er.correct = false;
          break;
        }
        const CommandSpec* spec = registry.find(entry.command);
        if (!spec) {
          er.correct = false;
          break;
        }
        json expected_args = json::parse(entry.args_json);
        json actual_args = json::array();
        for (size_t i = 0; i < result.call->arguments.size(); ++i) {
          actual_args.push_back(
              value_to_json(result.call->arguments[i], spec->parameters[i].descriptor));
        }
        er.correct = json_equal(expected_args, actual_args);
        break;
      }
    }
    if (er.correct) ++report.correct_count;
    report.entries.push_back(std::move(er));
  }
  report.accuracy = static_cast<double>(report.correct_count) /
                    static_cast<double>(report.entries.size());
  return report;
}

std::string CorpusReport::to_table() const {
  std::ostringstream os;
  size_t width = 10;
  for (const CorpusEntryResult& er : entries) width = std::max(width, er.entry.sentence.size());
  os << "  #  verdict  " << std::string(width - 8, ' ') << "sentence  actual\n";
  for (size_t i = 0; i < entries.size(); ++i) {
    const CorpusEntryResult& er = entries[i];
    char index[16];
    std::snprintf(index, sizeof(index), "%3zu", i + 1);
    os << index << "  " << (er.correct ? "ok     " : "WRONG  ") << "  ";
    os << er.entry.sentence << std::string(width - er.entry.sentence.size(), ' ') << "  ";
    os << er.actual << "\n";
  }
  char summary[96];
  std::snprintf(summary, sizeof(summary), "accuracy: %zu/%zu = %.6f", correct_count,
                entries.size(), accuracy);
  os << summary << "\n";
  for (const std::string& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string CorpusReport::to_json() const {
  nlohmann::ordered_json root;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CorpusEntryResult& er : entries) {
    nlohmann::ordered_json row;
    row["sentence"] = er.entry.sentence;
    row["correct"] = er.correct;
    row["actual"] = er.actual;
    rows.push_back(std::move(row));
  }
  root["entries"] = std::move(rows);
  root["correct"] = correct_count;
  root["total"] = entries.size();
  root["accuracy"] = accuracy;
  root["warnings"] = warnings;
  return root.dump(2);
}

}  // namespace voicecmd
