#include "voicecmd/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "voicecmd/stemmer.hpp"

namespace voicecmd {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower_c(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
char lower_c(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

const std::unordered_map<std::string_view, double>& number_words() {
  static const std::unordered_map<std::string_view, double> table = {
      {"zero", 0},      {"one", 1},        {"two", 2},      {"three", 3},
      {"four", 4},      {"five", 5},       {"six", 6},      {"seven", 7},
      {"eight", 8},     {"nine", 9},       {"ten", 10},     {"eleven", 11},
      {"twelve", 12},   {"thirteen", 13},  {"fourteen", 14}, {"fifteen", 15},
      {"sixteen", 16},  {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19},
      {"twenty", 20},   {"thirty", 30},    {"forty", 40},   {"fifty", 50},
      {"sixty", 60},    {"seventy", 70},   {"eighty", 80},  {"ninety", 90},
  };
  return table;
}

Token make_token(std::string raw, bool quoted) {
  Token t;
  t.raw = std::move(raw);
  t.lower = to_lower(t.raw);
  t.stem = stem(t.lower);
  t.numeric_value = parse_number(t.lower);
  t.quoted = quoted;
  return t;
}

Token make_separator(char c) {
  Token t;
  t.raw = std::string(1, c);
  t.lower = t.raw;
  t.stem = t.raw;
  t.separator = true;
  return t;
}

}  // namespace

bool Token::is_integer() const {
  if (!numeric_value) return false;
  double v = *numeric_value;
  return std::abs(v - std::round(v)) < 1e-9 && std::abs(v) < 9.0e15;
}

std::int64_t Token::integer_value() const {
  return static_cast<std::int64_t>(std::llround(*numeric_value));
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(lower_c(c));
  return out;
}

std::string_view trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

WordList split_identifier(std::string_view ident) {
  WordList words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      words.push_back(current);
      current.clear();
    }
  };
  size_t n = ident.size();
  for (size_t i = 0; i < n; ++i) {
    char c = ident[i];
    if (c == '_' || !is_alnum(c)) {
      flush();
      continue;
    }
    if (!current.empty()) {
      char prev = ident[i - 1];
      bool boundary = false;
      if (is_digit(c) != is_digit(prev)) {
        boundary = true;
      } else if (is_upper(c) && is_lower_c(prev)) {
        boundary = true;
      } else if (is_upper(prev) && is_upper(c) && i + 1 < n && is_lower_c(ident[i + 1])) {
        // End of an acronym run: "HDMIInput" splits before "Input".
        boundary = true;
      }
      if (boundary) flush();
    }
    current.push_back(lower_c(c));
  }
  flush();
  return words;
}

TokenSequence tokenize(std::string_view sentence) {
  TokenSequence seq;
  seq.raw_sentence = std::string(sentence);

  std::string current;
  bool in_quote = false;
  bool current_quoted = false;
  size_t n = sentence.size();

  auto flush = [&] {
    if (!current.empty()) {
      seq.tokens.push_back(make_token(std::move(current), current_quoted));
      current.clear();
    }
  };

  for (size_t i = 0; i < n; ++i) {
    char c = sentence[i];
    if (is_alnum(c)) {
      if (current.empty()) current_quoted = in_quote;
      current.push_back(c);
      continue;
    }
    if (is_digit(current.empty() ? '\0' : current.back()) && c == '.' && i + 1 < n &&
        is_digit(sentence[i + 1])) {
      current.push_back(c);  // decimal point inside a numeral
      continue;
    }
    if (c == '\'' || c == '"') {
      bool word_internal = c == '\'' && i > 0 && is_alnum(sentence[i - 1]) && i + 1 < n &&
                           is_alnum(sentence[i + 1]);
      flush();
      if (!word_internal) in_quote = !in_quote;
      continue;
    }
    flush();
    if (c == ',') seq.tokens.push_back(make_separator(c));
  }
  flush();
  return seq;
}

std::optional<double> parse_number(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (is_digit(token.front())) {
    bool seen_dot = false;
    for (char c : token) {
      if (c == '.') {
        if (seen_dot) return std::nullopt;
        seen_dot = true;
      } else if (!is_digit(c)) {
        return std::nullopt;
      }
    }
    if (token.back() == '.') return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
  }
  auto it = number_words().find(token);
  if (it != number_words().end()) return it->second;
  return std::nullopt;
}

}  // namespace voicecmd
