#pragma once

#include <any>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "voicecmd/text.hpp"
#include "voicecmd/value.hpp"

namespace voicecmd {

/// Runtime source of the currently-valid string values for a parameter.
/// Evaluated once per resolution and cached for that resolution.
using ValueProvider = std::function<std::vector<std::string>()>;

/// Runtime map from surface words to opaque domain objects
/// ("green" -> a color value).
using TokenMapper = std::function<std::vector<std::pair<std::string, std::any>>()>;

struct EnumConstant {
  std::string name;  // declared identifier, e.g. "LEFT" or "DARK_RED"
  WordList words;    // split lowercase word form
};

/// Describes a parameter's value space.
class TypeDescriptor {
 public:
  enum class Kind {
    integer_number,
    real_number,
    enumeration,
    bounded_string,
    mapped_object,
    collection,
  };

  static TypeDescriptor integer_number();
  static TypeDescriptor real_number();
  /// Constants are identifiers; multi-word constants ("DARK_RED") match
  /// consecutive sentence tokens.
  static TypeDescriptor enumeration(std::vector<std::string> constants);
  static TypeDescriptor bounded_string(ValueProvider provider);
  static TypeDescriptor mapped_object(TokenMapper mapper);
  /// allow_ranges is only valid for integer elements; elements must not
  /// themselves be collections.
  static TypeDescriptor collection_of(TypeDescriptor element, bool allow_ranges = false);

  Kind kind() const { return kind_; }
  const std::vector<EnumConstant>& constants() const { return constants_; }
  const ValueProvider& provider() const { return provider_; }
  const TokenMapper& mapper() const { return mapper_; }
  const TypeDescriptor& element() const { return *element_; }
  bool allow_ranges() const { return allow_ranges_; }

  /// True when the full value set can be listed (enum, bounded string,
  /// mapped object) -- the prerequisite for "all" collections.
  bool enumerable() const;

  /// Short name for diagnostics ("int", "enum", "collection<int>", ...).
  std::string display_name() const;

 private:
  Kind kind_ = Kind::integer_number;
  std::vector<EnumConstant> constants_;
  ValueProvider provider_;
  TokenMapper mapper_;
  std::shared_ptr<const TypeDescriptor> element_;
  bool allow_ranges_ = false;
};

}  // namespace voicecmd
