#include "voicecmd/command.hpp"

#include "voicecmd/errors.hpp"

namespace voicecmd {

CommandBuilder::CommandBuilder(std::string class_identifier, std::string method_identifier) {
  spec_.class_identifier = std::move(class_identifier);
  spec_.method_identifier = std::move(method_identifier);
}

CommandBuilder& CommandBuilder::param(std::string identifier, TypeDescriptor descriptor,
                                      bool mandatory) {
  ParameterSpec p;
  p.name_words = split_identifier(identifier);
  p.identifier = std::move(identifier);
  p.descriptor = std::move(descriptor);
  p.mandatory = mandatory;
  spec_.parameters.push_back(std::move(p));
  return *this;
}

CommandBuilder& CommandBuilder::param_synonym(std::string of, std::vector<std::string> is) {
  if (spec_.parameters.empty())
    throw InvalidSpecError("param_synonym requires a preceding param()");
  spec_.parameters.back().synonyms.push_back(
      {std::move(of), std::move(is), SynonymScope::parameter_local});
  return *this;
}

CommandBuilder& CommandBuilder::extra_word(std::string word) {
  spec_.extra_words.push_back(to_lower(word));
  return *this;
}

CommandBuilder& CommandBuilder::optional_word(std::string word) {
  spec_.optional_words.push_back(to_lower(word));
  return *this;
}

CommandBuilder& CommandBuilder::synonym(std::string of, std::vector<std::string> is) {
  spec_.synonyms.push_back({std::move(of), std::move(is), SynonymScope::command_local});
  return *this;
}

CommandBuilder& CommandBuilder::class_synonym(std::string of, std::vector<std::string> is) {
  spec_.synonyms.push_back({std::move(of), std::move(is), SynonymScope::class_local});
  return *this;
}

CommandBuilder& CommandBuilder::fallback(std::string pattern) {
  spec_.fallback_pattern = std::move(pattern);
  return *this;
}

CommandBuilder& CommandBuilder::handler(Handler h) {
  spec_.handler = std::move(h);
  return *this;
}

CommandBuilder& CommandBuilder::id(std::string explicit_id) {
  explicit_id_ = std::move(explicit_id);
  return *this;
}

const std::vector<std::string>& default_strippable_suffixes() {
  static const std::vector<std::string> suffixes = {"Service", "Controller", "Manager", "Impl"};
  return suffixes;
}

std::string strip_implementation_suffix(std::string_view class_name) {
  return strip_implementation_suffix(class_name, default_strippable_suffixes());
}

std::string strip_implementation_suffix(std::string_view class_name,
                                        const std::vector<std::string>& suffixes) {
  for (const std::string& suffix : suffixes) {
    if (class_name.size() > suffix.size() && class_name.ends_with(suffix)) {
      return std::string(class_name.substr(0, class_name.size() - suffix.size()));
    }
  }
  return std::string(class_name);
}

}  // namespace voicecmd
