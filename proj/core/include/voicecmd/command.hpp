#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "voicecmd/text.hpp"
#include "voicecmd/types.hpp"
#include "voicecmd/value.hpp"

namespace voicecmd {

enum class SynonymScope {
  registry_global,
  class_local,
  command_local,
  parameter_local,
};

/// A manual, scoped word substitution: `of` may be replaced by any entry of
/// `is` when matching the covered commands.
struct SynonymRule {
  std::string of;
  std::vector<std::string> is;
  SynonymScope scope = SynonymScope::command_local;
};

/// Invoked with one value per declared parameter.
using Handler = std::function<void(const std::vector<Value>&)>;

struct ParameterSpec {
  std::string identifier;  // as declared, e.g. "number"
  WordList name_words;     // split lowercase form
  TypeDescriptor descriptor;
  std::vector<SynonymRule> synonyms;  // parameter_local scope
  bool mandatory = true;
};

struct CommandSpec {
  std::string id;  // unique within a registry, e.g. "Light.turnOn#2"
  std::string class_identifier;
  std::string method_identifier;
  WordList class_words;  // implementation suffix stripped, split, lowered
  WordList method_words;
  std::vector<ParameterSpec> parameters;
  WordList extra_words;
  WordList optional_words;
  std::vector<SynonymRule> synonyms;  // class_local / command_local scope
  std::optional<std::string> fallback_pattern;
  Handler handler;
};

/// Fluent construction of a CommandSpec; word splitting, suffix stripping
/// and id assignment happen when the builder is registered.
class CommandBuilder {
 public:
  CommandBuilder(std::string class_identifier, std::string method_identifier);

  CommandBuilder& param(std::string identifier, TypeDescriptor descriptor, bool mandatory = true);
  /// Adds a parameter-local synonym to the most recently declared parameter.
  CommandBuilder& param_synonym(std::string of, std::vector<std::string> is);
  CommandBuilder& extra_word(std::string word);
  CommandBuilder& optional_word(std::string word);
  CommandBuilder& synonym(std::string of, std::vector<std::string> is);
  CommandBuilder& class_synonym(std::string of, std::vector<std::string> is);
  CommandBuilder& fallback(std::string pattern);
  CommandBuilder& handler(Handler h);
  /// Overrides the generated id.
  CommandBuilder& id(std::string explicit_id);

  const CommandSpec& spec() const { return spec_; }
  CommandSpec& spec() { return spec_; }
  const std::optional<std::string>& explicit_id() const { return explicit_id_; }

 private:
  CommandSpec spec_;
  std::optional<std::string> explicit_id_;
};

/// Removes one trailing implementation suffix (by default Service,
/// Controller, Manager or Impl) from a class identifier. Never empties the
/// name: "Service" stays "Service".
std::string strip_implementation_suffix(std::string_view class_name);
std::string strip_implementation_suffix(std::string_view class_name,
                                        const std::vector<std::string>& suffixes);

const std::vector<std::string>& default_strippable_suffixes();

}  // namespace voicecmd
