#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "voicecmd/command.hpp"
#include "voicecmd/text.hpp"
#include "voicecmd/types.hpp"
#include "voicecmd/value.hpp"

namespace voicecmd {

enum class MatchedBy {
  name_adjacency,
  type_only,
  position,
  all_keyword,
  range,
};

const char* matched_by_name(MatchedBy m);

/// One bound parameter: its value and the token positions removed from the
/// sentence word set.
struct ArgumentBinding {
  size_t parameter_index = 0;
  Value value;
  std::set<size_t> consumed;
  MatchedBy matched_by = MatchedBy::type_only;
};

struct MatchOutcome {
  bool matched = false;
  std::vector<ArgumentBinding> bindings;  // bound parameters only
  std::string elimination_reason;         // set when !matched
};

/// Per-resolution cache of provider / mapper results. Each source is
/// fetched at most once per resolution; a raised failure is remembered and
/// surfaced as a warning.
class ResolutionContext {
 public:
  struct MapperEntry {
    std::string key;
    std::string key_stem;
    std::any object;
  };

  /// nullptr when the provider failed (warning recorded).
  const std::vector<std::string>* provider_values(const TypeDescriptor& descriptor);
  const std::vector<MapperEntry>* mapper_entries(const TypeDescriptor& descriptor);

  std::vector<std::string>& warnings() { return warnings_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::map<const TypeDescriptor*, std::optional<std::vector<std::string>>> providers_;
  std::map<const TypeDescriptor*, std::optional<std::vector<MapperEntry>>> mappers_;
  std::vector<std::string> warnings_;
};

/// Matches a single token against an enumeration (single-word constants).
std::optional<std::string> match_enum_token(const TypeDescriptor& enum_descriptor,
                                            const Token& token);

/// Matches a token against the provider's current values. Quoted tokens
/// compare by lowercase form, unquoted ones by stem; the token must match
/// exactly one value.
std::optional<std::string> match_bounded_string(const TypeDescriptor& descriptor,
                                                const Token& token, ResolutionContext& ctx);

/// Matches a token stem against the mapper's stemmed keys.
std::optional<Value> match_mapped_object(const TypeDescriptor& descriptor, const Token& token,
                                         ResolutionContext& ctx);

struct CollectionMatch {
  CollectionValue value;
  std::vector<size_t> consumed;  // includes list separators
  MatchedBy form = MatchedBy::type_only;
};

/// Finds a collection expression: an inclusive integer range "a to b" (when
/// permitted), an element list "v, v and v", or the word "all" for
/// enumerable element types -- in that priority order.
std::optional<CollectionMatch> match_collection(const TypeDescriptor& descriptor,
                                                const TokenSequence& tokens, size_t start_hint,
                                                ResolutionContext& ctx);

/// Binds every parameter of the command against the sentence, or reports
/// why the command is eliminated (a mandatory parameter without a value, or
/// a failed provider). Binding priority per parameter: name adjacency, then
/// leftmost type-compatible value, with leftovers assigned positionally in
/// declaration order.
MatchOutcome match_parameters(const CommandSpec& spec, const TokenSequence& tokens,
                              ResolutionContext& ctx);

}  // namespace voicecmd
