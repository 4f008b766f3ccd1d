#include "voicecmd/registry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "voicecmd/errors.hpp"

namespace voicecmd {

namespace {

bool valid_synonym_word(const std::string& w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (c == ' ' || c == '\t') return false;
    if (c >= 'A' && c <= 'Z') return false;
  }
  return true;
}

void validate_rule(const SynonymRule& rule) {
  if (!valid_synonym_word(rule.of))
    throw InvalidSpecError("synonym 'of' must be a single lowercase word: '" + rule.of + "'");
  if (rule.is.empty()) throw InvalidSpecError("synonym rule for '" + rule.of + "' has no alternatives");
  for (const std::string& alt : rule.is) {
    if (!valid_synonym_word(alt))
      throw InvalidSpecError("synonym alternative must be a single lowercase word: '" + alt + "'");
    if (alt == rule.of)
      throw InvalidSpecError("synonym of '" + rule.of + "' lists itself as an alternative");
  }
}

}  // namespace

Registry::Registry() : suffixes_(default_strippable_suffixes()) {}

void Registry::require_mutable() const {
  if (frozen_) throw std::logic_error("registry is frozen");
}

void Registry::set_threshold(double threshold) {
  require_mutable();
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw InvalidSpecError("threshold must lie in [0,1]");
  threshold_ = threshold;
}

void Registry::set_strippable_suffixes(std::vector<std::string> suffixes) {
  require_mutable();
  suffixes_ = std::move(suffixes);
}

void Registry::add_global_synonym(std::string of, std::vector<std::string> is) {
  require_mutable();
  SynonymRule rule{std::move(of), std::move(is), SynonymScope::registry_global};
  validate_rule(rule);
  global_synonyms_.push_back(std::move(rule));
}

void Registry::validate(const CommandSpec& spec) const {
  if (spec.class_words.empty())
    throw InvalidSpecError("class identifier yields no words: '" + spec.class_identifier + "'");
  if (spec.method_words.empty())
    throw InvalidSpecError("method identifier yields no words: '" + spec.method_identifier + "'");
  for (const ParameterSpec& p : spec.parameters) {
    if (p.name_words.empty())
      throw InvalidSpecError("parameter identifier yields no words: '" + p.identifier + "'");
    for (const SynonymRule& rule : p.synonyms) {
      if (rule.scope != SynonymScope::parameter_local)
        throw InvalidSpecError("parameter synonyms must have parameter scope");
      validate_rule(rule);
    }
  }
  for (const SynonymRule& rule : spec.synonyms) validate_rule(rule);
  std::set<std::string> extra(spec.extra_words.begin(), spec.extra_words.end());
  for (const std::string& w : spec.optional_words) {
    if (extra.count(w))
      throw InvalidSpecError("word '" + w + "' is both an extra word and an optional word");
  }
}

std::string Registry::register_command(const CommandBuilder& builder) {
  require_mutable();
  CommandSpec spec = builder.spec();

  std::string stripped = strip_implementation_suffix(spec.class_identifier, suffixes_);
  spec.class_words = split_identifier(stripped);
  spec.method_words = split_identifier(spec.method_identifier);

  if (builder.explicit_id()) {
    spec.id = *builder.explicit_id();
  } else {
    std::string base = stripped + "." + spec.method_identifier;
    spec.id = base;
    int n = 2;
    while (find(spec.id) != nullptr) spec.id = base + "#" + std::to_string(n++);
  }
  if (find(spec.id) != nullptr) throw DuplicateIdError(spec.id);

  validate(spec);
  commands_.push_back(std::move(spec));
  return commands_.back().id;
}

void Registry::freeze() {
  require_mutable();
  fallback_regexes_.clear();
  fallback_regexes_.reserve(commands_.size());
  for (const CommandSpec& spec : commands_) {
    if (!spec.fallback_pattern) {
      fallback_regexes_.push_back(nullptr);
      continue;
    }
    std::unique_ptr<std::regex> re;
    try {
      re = std::make_unique<std::regex>(*spec.fallback_pattern,
                                        std::regex::ECMAScript | std::regex::icase);
    } catch (const std::regex_error& e) {
      throw InvalidSpecError("malformed fallback pattern for " + spec.id + ": " + e.what());
    }
    if (re->mark_count() != spec.parameters.size()) {
      throw InvalidSpecError("fallback pattern for " + spec.id + " has " +
                             std::to_string(re->mark_count()) + " capture group(s) but the command declares " +
                             std::to_string(spec.parameters.size()) + " parameter(s)");
    }
    fallback_regexes_.push_back(std::move(re));
  }
  frozen_ = true;
}

const CommandSpec* Registry::find(const std::string& id) const {
  auto it = std::find_if(commands_.begin(), commands_.end(),
                         [&](const CommandSpec& c) { return c.id == id; });
  return it == commands_.end() ? nullptr : &*it;
}

const std::regex* Registry::fallback_regex(size_t command_index) const {
  if (!frozen_) throw std::logic_error("registry is not frozen");
  return fallback_regexes_[command_index].get();
}

}  // namespace voicecmd
