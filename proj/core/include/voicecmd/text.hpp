#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace voicecmd {

/// Ordered lowercase words split from an identifier or declared directly.
using WordList = std::vector<std::string>;

/// One analyzed unit of an input sentence.
struct Token {
  std::string raw;
  std::string lower;
  std::string stem;
  std::optional<double> numeric_value;
  bool quoted = false;
  /// Punctuation kept for the collection grammar (currently only ",").
  bool separator = false;

  bool is_integer() const;
  std::int64_t integer_value() const;
};

struct TokenSequence {
  std::vector<Token> tokens;
  std::string raw_sentence;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
};

/// Splits a camelCase / PascalCase / snake_case / SCREAMING_CASE identifier
/// into lowercase words. Digit runs and acronym runs become their own words:
/// "setHDMIInput2" -> {"set", "hdmi", "input", "2"}.
WordList split_identifier(std::string_view ident);

/// Splits a sentence on whitespace and punctuation. Commas survive as
/// separator tokens; quotation marks set the quoted flag on the enclosed
/// tokens; everything else is dropped. Each token carries its lowercase
/// form, stem and, when it parses as a number, its numeric value.
TokenSequence tokenize(std::string_view sentence);

/// Recognizes unsigned decimal literals ("5", "2.5") and the single-token
/// number words zero..twenty plus the tens thirty..ninety.
std::optional<double> parse_number(std::string_view token);

std::string to_lower(std::string_view text);
std::string_view trim(std::string_view text);

}  // namespace voicecmd
