#include "voicecmd/scoring.hpp"

#include <algorithm>
#include <map>

#include "voicecmd/stemmer.hpp"

namespace voicecmd {

double jaccard(const WordSet& a, const WordSet& b) {
  if (a.empty() && b.empty()) return 0.0;
  size_t intersection = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++intersection;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  size_t unions = a.size() + b.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

WordSet command_word_set(const CommandSpec& spec) {
  WordSet wm;
  for (const std::string& w : spec.class_words) wm.insert(stem(w));
  for (const std::string& w : spec.method_words) wm.insert(stem(w));
  return wm;
}

WordSet sentence_word_set(const TokenSequence& tokens) {
  WordSet ws;
  for (const Token& t : tokens.tokens) {
    if (!t.separator) ws.insert(t.stem);
  }
  return ws;
}

std::pair<WordSet, WordSet> build_word_sets(const CommandSpec& spec, const TokenSequence& tokens,
                                            const std::vector<ArgumentBinding>& bindings) {
  std::vector<bool> consumed(tokens.size(), false);
  for (const ArgumentBinding& b : bindings) {
    for (size_t i : b.consumed) consumed[i] = true;
  }
  WordSet ws;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens.tokens[i];
    if (!t.separator && !consumed[i]) ws.insert(t.stem);
  }
  return {command_word_set(spec), std::move(ws)};
}

std::vector<SynonymRule> applicable_synonyms(const Registry& registry, const CommandSpec& spec,
                                             const std::vector<ArgumentBinding>& bindings) {
  std::vector<SynonymRule> rules = registry.global_synonyms();
  rules.insert(rules.end(), spec.synonyms.begin(), spec.synonyms.end());
  for (const ArgumentBinding& b : bindings) {
    const ParameterSpec& p = spec.parameters[b.parameter_index];
    rules.insert(rules.end(), p.synonyms.begin(), p.synonyms.end());
  }
  return rules;
}

std::vector<WordSet> synonym_variants(const WordSet& wm, const std::vector<SynonymRule>& rules,
                                      size_t cap, std::vector<std::string>* warnings) {
  // Ordered alternatives per stem; the original is always choice 0.
  std::vector<std::string> words(wm.begin(), wm.end());
  std::map<std::string, std::vector<std::string>> alternatives;

  auto product = [&] {
    size_t p = 1;
    for (const std::string& w : words) {
      auto it = alternatives.find(w);
      p *= 1 + (it == alternatives.end() ? 0 : it->second.size());
    }
    return p;
  };

  for (const SynonymRule& rule : rules) {
    std::string of = stem(rule.of);
    if (!wm.count(of)) continue;
    std::vector<std::string> fresh;
    for (const std::string& alt : rule.is) {
      std::string s = stem(to_lower(alt));
      if (s == of) continue;
      auto& existing = alternatives[of];
      if (std::find(existing.begin(), existing.end(), s) != existing.end()) continue;
      if (std::find(fresh.begin(), fresh.end(), s) != fresh.end()) continue;
      fresh.push_back(s);
    }
    if (fresh.empty()) continue;
    auto& existing = alternatives[of];
    size_t before = existing.size();
    existing.insert(existing.end(), fresh.begin(), fresh.end());
    if (product() > cap) {
      existing.resize(before);
      if (warnings)
        warnings->push_back("synonym variant cap (" + std::to_string(cap) +
                            ") reached; rule for '" + rule.of + "' ignored");
    }
  }

  // Odometer over per-word choices.
  std::vector<std::vector<std::string>> choices;
  choices.reserve(words.size());
  for (const std::string& w : words) {
    std::vector<std::string> c{w};
    auto it = alternatives.find(w);
    if (it != alternatives.end()) c.insert(c.end(), it->second.begin(), it->second.end());
    choices.push_back(std::move(c));
  }

  std::vector<WordSet> variants;
  std::vector<size_t> index(words.size(), 0);
  while (true) {
    WordSet variant;
    for (size_t i = 0; i < words.size(); ++i) variant.insert(choices[i][index[i]]);
    variants.push_back(std::move(variant));
    size_t pos = 0;
    while (pos < index.size()) {
      if (++index[pos] < choices[pos].size()) break;
      index[pos] = 0;
      ++pos;
    }
    if (pos == index.size()) break;
  }
  if (variants.empty()) variants.push_back(wm);
  return variants;
}

ScoredCandidate score_command(const Registry& registry, const CommandSpec& spec,
                              const TokenSequence& tokens, std::vector<ArgumentBinding> bindings,
                              std::vector<std::string>* warnings) {
  ScoredCandidate sc;
  sc.candidate.command = &spec;
  auto [wm, ws] = build_word_sets(spec, tokens, bindings);
  sc.candidate.bindings = std::move(bindings);
  sc.wm = std::move(wm);
  sc.ws = std::move(ws);

  std::vector<SynonymRule> rules = applicable_synonyms(registry, spec, sc.candidate.bindings);
  std::vector<WordSet> variants = synonym_variants(sc.wm, rules, kVariantCap, warnings);
  sc.variants_considered = variants.size();

  sc.score = -1.0;
  for (WordSet& variant : variants) {
    double s = jaccard(variant, sc.ws);
    if (s > sc.score) {
      sc.score = s;
      sc.best_variant = std::move(variant);
    }
  }
  return sc;
}

void tie_break_adjust(std::vector<ScoredCandidate>& candidates) {
  for (ScoredCandidate& sc : candidates) {
    const CommandSpec& spec = *sc.candidate.command;
    WordSet adjusted = sc.best_variant;
    for (const std::string& w : spec.extra_words) adjusted.insert(stem(w));
    for (const std::string& w : spec.optional_words) {
      std::string s = stem(w);
      if (!sc.ws.count(s)) adjusted.erase(s);
    }
    sc.adjusted_score = jaccard(adjusted, sc.ws);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     return *a.adjusted_score > *b.adjusted_score + kScoreEpsilon;
                   });
}

}  // namespace voicecmd
