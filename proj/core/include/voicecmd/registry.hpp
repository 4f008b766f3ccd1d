#pragma once

#include <deque>
#include <memory>
#include <regex>
#include <string>
#include <vector>

#include "voicecmd/command.hpp"

namespace voicecmd {

/// Holds the registered commands, global synonyms and the match threshold.
/// Built single-threaded, then frozen; a frozen registry is immutable and
/// safe to share across concurrent resolutions.
class Registry {
 public:
  static constexpr double kDefaultThreshold = 0.2;

  Registry();

  /// Must be called before freeze(). Throws InvalidSpecError when outside [0,1].
  void set_threshold(double threshold);
  double threshold() const { return threshold_; }

  void set_strippable_suffixes(std::vector<std::string> suffixes);
  const std::vector<std::string>& strippable_suffixes() const { return suffixes_; }

  void add_global_synonym(std::string of, std::vector<std::string> is);

  /// Validates the spec, strips the class suffix, splits identifiers into
  /// words, assigns an id (Class.method, then Class.method#2, ...) and
  /// stores the command. Returns the assigned id.
  /// Throws DuplicateIdError or InvalidSpecError.
  std::string register_command(const CommandBuilder& builder);

  /// Compiles fallback patterns (case-insensitive, whole-sentence) and
  /// validates their capture-group counts, then marks the registry
  /// immutable. Throws InvalidSpecError on malformed patterns.
  void freeze();
  bool frozen() const { return frozen_; }

  /// Commands in registration order. Element addresses are stable across
  /// registrations, so CommandSpec pointers taken from find() stay valid.
  const std::deque<CommandSpec>& commands() const { return commands_; }
  const CommandSpec* find(const std::string& id) const;
  const std::vector<SynonymRule>& global_synonyms() const { return global_synonyms_; }

  /// Compiled fallback regex for a command index; nullptr when the command
  /// has no fallback pattern. Valid only after freeze().
  const std::regex* fallback_regex(size_t command_index) const;

 private:
  void require_mutable() const;
  void validate(const CommandSpec& spec) const;

  std::deque<CommandSpec> commands_;
  std::vector<std::unique_ptr<std::regex>> fallback_regexes_;
  std::vector<SynonymRule> global_synonyms_;
  std::vector<std::string> suffixes_;
  double threshold_ = kDefaultThreshold;
  bool frozen_ = false;
};

}  // namespace voicecmd
