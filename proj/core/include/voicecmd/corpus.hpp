#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "voicecmd/engine.hpp"
#include "voicecmd/registry.hpp"

namespace voicecmd {

/// One golden-standard row: a sentence and the call (or outcome) it must
/// resolve to.
struct CorpusEntry {
  enum class Expected { resolved, no_match, ambiguous };

  std::string sentence;
  Expected expected = Expected::resolved;
  std::string command;           // set when expected == resolved
  std::string args_json = "[]";  // JSON array text, compared structurally
};

class CorpusFormatError : public std::runtime_error {
 public:
  CorpusFormatError(size_t line, const std::string& what)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Parses JSON-lines corpus input:
///   {"sentence": str, "expected": {"command": str, "args": [...]} | "no_match" | "ambiguous"}
/// Throws CorpusFormatError naming the offending line.
std::vector<CorpusEntry> load_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

struct CorpusEntryResult {
  CorpusEntry entry;
  bool correct = false;
  std::string actual;  // human-readable actual outcome
};

struct CorpusReport {
  std::vector<CorpusEntryResult> entries;
  size_t correct_count = 0;
  double accuracy = 1.0;  // vacuously 1.0 for an empty corpus
  std::vector<std::string> warnings;

  bool all_correct() const { return correct_count == entries.size(); }
  std::string to_table() const;
  std::string to_json() const;
};

/// Resolves every entry (without executing handlers) and compares against
/// the expectation. Numeric arguments compare with tolerance 1e-9;
/// collection arguments compare as the materialized, sorted value list.
CorpusReport evaluate_corpus(const Registry& registry, const std::vector<CorpusEntry>& corpus);

}  // namespace voicecmd
