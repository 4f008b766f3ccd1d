#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voicecmd/registry.hpp"
#include "voicecmd/scoring.hpp"
#include "voicecmd/value.hpp"

namespace voicecmd {

enum class ResolvedVia { fallback_regex, similarity };

struct ResolvedCall {
  std::string command_id;
  std::vector<Value> arguments;  // one per declared parameter
  double score = 0.0;
  ResolvedVia via = ResolvedVia::similarity;

  std::string to_display_string() const;
};

/// Outcome of resolving one sentence: a single call, a tie the caller must
/// break, or nothing above the threshold.
struct ResolutionResult {
  enum class Kind { resolved, ambiguous, no_match };

  Kind kind = Kind::no_match;
  std::optional<ResolvedCall> call;      // resolved
  std::vector<ResolvedCall> options;     // ambiguous: 2..5 equally scored calls
  double best_score = 0.0;               // no_match
  std::optional<std::string> best_command;
  std::vector<std::string> warnings;     // provider failures, variant caps

  bool resolved() const { return kind == Kind::resolved; }
  bool ambiguous() const { return kind == Kind::ambiguous; }
  bool no_match() const { return kind == Kind::no_match; }
};

/// Runs the full pipeline on one sentence: fallback regexes first (in
/// registration order, whole-sentence, case-insensitive), then tokenize,
/// type-match every command's parameters, score the survivors and pick a
/// winner against the registry threshold. Never invokes handlers.
ResolutionResult resolve(const Registry& registry, const std::string& sentence);

/// Invokes the resolved command's handler exactly once. Fallback capture
/// strings are coerced for numeric parameters and "all" collections expand
/// to the element type's current value set here.
/// Throws NotResolvedError on ambiguous / no-match results and HandlerError
/// when coercion, expansion or the handler itself fails.
void execute(const Registry& registry, const ResolutionResult& result);
void execute(const Registry& registry, const ResolvedCall& call);

struct BindingReport {
  std::string parameter;
  std::string value;
  std::string matched_by;
  std::vector<size_t> consumed;
};

struct CommandReport {
  std::string id;
  bool eliminated = false;
  std::string elimination_reason;
  std::vector<std::string> wm;  // sorted stems
  std::vector<std::string> ws;
  std::vector<BindingReport> bindings;
  size_t variants_considered = 0;
  std::vector<std::string> best_variant;
  double score = 0.0;
  std::optional<double> adjusted_score;
};

/// Everything resolve() saw, without executing anything.
struct ExplainReport {
  std::string sentence;
  std::vector<std::string> token_stems;
  bool fallback_matched = false;
  bool similarity_consulted = false;
  std::string fallback_command;
  std::vector<std::string> fallback_arguments;
  std::vector<CommandReport> commands;  // registration order; empty on fallback
  ResolutionResult outcome;

  /// Stable multi-line rendering (byte-identical across runs).
  std::string to_string() const;
};

ExplainReport explain(const Registry& registry, const std::string& sentence);

}  // namespace voicecmd
