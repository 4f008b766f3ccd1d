#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "voicecmd/command.hpp"
#include "voicecmd/matching.hpp"
#include "voicecmd/registry.hpp"
#include "voicecmd/text.hpp"

namespace voicecmd {

/// Stem set (W_M for commands, W_S for sentences).
using WordSet = std::set<std::string>;

/// Scores closer than this are considered tied.
inline constexpr double kScoreEpsilon = 1e-9;

/// Upper bound on synonym variants per command; rules that would overflow
/// it are ignored in declaration order with a warning.
inline constexpr size_t kVariantCap = 256;

/// |a n b| / |a u b|; two empty sets score 0.
double jaccard(const WordSet& a, const WordSet& b);

/// Stems of the command's class and method words.
WordSet command_word_set(const CommandSpec& spec);

/// Stems of every non-separator token.
WordSet sentence_word_set(const TokenSequence& tokens);

/// W_M and W_S for one command: W_S drops the tokens consumed by the
/// argument bindings.
std::pair<WordSet, WordSet> build_word_sets(const CommandSpec& spec, const TokenSequence& tokens,
                                            const std::vector<ArgumentBinding>& bindings);

/// All variants of wm obtainable by replacing words with their synonyms
/// (cartesian product of per-word choices, original always included).
std::vector<WordSet> synonym_variants(const WordSet& wm, const std::vector<SynonymRule>& rules,
                                      size_t cap = kVariantCap,
                                      std::vector<std::string>* warnings = nullptr);

/// Synonym rules applicable to a command: registry-global rules, the
/// command's class/command rules, and parameter-local rules of bound
/// parameters, in that order.
std::vector<SynonymRule> applicable_synonyms(const Registry& registry, const CommandSpec& spec,
                                             const std::vector<ArgumentBinding>& bindings);

struct MatchCandidate {
  const CommandSpec* command = nullptr;
  std::vector<ArgumentBinding> bindings;
};

struct ScoredCandidate {
  MatchCandidate candidate;
  double score = 0.0;
  WordSet best_variant;
  std::optional<double> adjusted_score;
  WordSet wm;
  WordSet ws;
  size_t variants_considered = 0;

  double effective_score() const { return adjusted_score ? *adjusted_score : score; }
};

/// Maximum Jaccard score over all synonym variants of W_M against W_S.
ScoredCandidate score_command(const Registry& registry, const CommandSpec& spec,
                              const TokenSequence& tokens, std::vector<ArgumentBinding> bindings,
                              std::vector<std::string>* warnings = nullptr);

/// Extra-word / optional-word adjustment, applied on ties or when the top
/// score is below threshold: the adjusted command set adds the declared
/// extra words and drops optional words absent from the sentence;
/// candidates are reordered by the adjusted score (original scores
/// retained).
void tie_break_adjust(std::vector<ScoredCandidate>& candidates);

}  // namespace voicecmd
