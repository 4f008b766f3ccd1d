#include "voicecmd/matching.hpp"

#include <algorithm>

#include "voicecmd/stemmer.hpp"

namespace voicecmd {

namespace {

struct ValueMatch {
  Value value;
  std::vector<size_t> positions;
  MatchedBy form = MatchedBy::type_only;  // range / all_keyword for collections
};

bool span_free(const std::vector<bool>& consumed, size_t begin, size_t length) {
  for (size_t i = begin; i < begin + length; ++i)
    if (consumed[i]) return false;
  return true;
}

// Longest enum constant whose stemmed words match the tokens starting at pos.
std::optional<std::pair<std::string, size_t>> match_enum_at(const TypeDescriptor& descriptor,
                                                            const TokenSequence& tokens,
                                                            size_t pos,
                                                            const std::vector<bool>& consumed) {
  std::optional<std::pair<std::string, size_t>> best;
  for (const EnumConstant& constant : descriptor.constants()) {
    size_t len = constant.words.size();
    if (pos + len > tokens.size()) continue;
    if (!span_free(consumed, pos, len)) continue;
    bool all = true;
    for (size_t k = 0; k < len; ++k) {
      const Token& t = tokens.tokens[pos + k];
      if (t.separator || t.stem != stem(constant.words[k])) {
        all = false;
        break;
      }
    }
    if (all && (!best || len > best->second)) best = {constant.name, len};
  }
  return best;
}

std::optional<std::string> match_bounded_at(const TypeDescriptor& descriptor, const Token& token,
                                            ResolutionContext& ctx) {
  if (token.separator) return std::nullopt;
  const std::vector<std::string>* values = ctx.provider_values(descriptor);
  if (!values) return std::nullopt;
  std::optional<std::string> found;
  for (const std::string& value : *values) {
    std::string lowered = to_lower(value);
    bool hit = token.quoted ? token.lower == lowered : token.stem == stem(lowered);
    if (hit) {
      if (found) return std::nullopt;  // must match exactly one value
      found = value;
    }
  }
  return found;
}

std::optional<Value> match_mapped_at(const TypeDescriptor& descriptor, const Token& token,
                                     ResolutionContext& ctx) {
  if (token.separator) return std::nullopt;
  const auto* entries = ctx.mapper_entries(descriptor);
  if (!entries) return std::nullopt;
  for (const ResolutionContext::MapperEntry& entry : *entries) {
    if (token.stem == entry.key_stem) return Value::mapped(entry.key, entry.object);
  }
  return std::nullopt;
}

// Scalar element match at one position: value plus consumed span length.
std::optional<std::pair<Value, size_t>> match_element_at(const TypeDescriptor& descriptor,
                                                         const TokenSequence& tokens, size_t pos,
                                                         const std::vector<bool>& consumed,
                                                         ResolutionContext& ctx) {
  if (pos >= tokens.size() || consumed[pos]) return std::nullopt;
  const Token& t = tokens.tokens[pos];
  if (t.separator) return std::nullopt;
  switch (descriptor.kind()) {
    case TypeDescriptor::Kind::integer_number:
      if (t.numeric_value && t.is_integer()) return {{Value::integer(t.integer_value()), 1}};
      return std::nullopt;
    case TypeDescriptor::Kind::real_number:
      if (t.numeric_value) return {{Value::real(*t.numeric_value), 1}};
      return std::nullopt;
    case TypeDescriptor::Kind::enumeration: {
      auto m = match_enum_at(descriptor, tokens, pos, consumed);
      if (m) return {{Value::enum_constant(m->first), m->second}};
      return std::nullopt;
    }
    case TypeDescriptor::Kind::bounded_string: {
      auto m = match_bounded_at(descriptor, t, ctx);
      if (m) return {{Value::text(*m), 1}};
      return std::nullopt;
    }
    case TypeDescriptor::Kind::mapped_object: {
      auto m = match_mapped_at(descriptor, t, ctx);
      if (m) return {{*m, 1}};
      return std::nullopt;
    }
    case TypeDescriptor::Kind::collection:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_list_separator(const Token& t) { return t.separator || t.lower == "and"; }

std::optional<CollectionMatch> match_collection_impl(const TypeDescriptor& descriptor,
                                                     const TokenSequence& tokens,
                                                     size_t start_hint,
                                                     const std::vector<bool>& consumed,
                                                     ResolutionContext& ctx) {
  const TypeDescriptor& element = descriptor.element();
  const size_t n = tokens.size();

  // (a) inclusive integer range "a to b"
  if (descriptor.allow_ranges()) {
    for (size_t i = start_hint; i + 2 < n; ++i) {
      if (!span_free(consumed, i, 3)) continue;
      const Token& a = tokens.tokens[i];
      const Token& to = tokens.tokens[i + 1];
      const Token& b = tokens.tokens[i + 2];
      if (a.is_integer() && !to.separator && to.lower == "to" && b.is_integer() &&
          a.integer_value() <= b.integer_value()) {
        CollectionMatch m;
        m.value = CollectionValue::range(a.integer_value(), b.integer_value());
        m.consumed = {i, i + 1, i + 2};
        m.form = MatchedBy::range;
        return m;
      }
    }
  }

  // (b) element list "v (, v)* (and v)?"
  for (size_t i = start_hint; i < n; ++i) {
    auto first = match_element_at(element, tokens, i, consumed, ctx);
    if (!first) continue;
    std::vector<Value> values{first->first};
    std::vector<size_t> positions;
    for (size_t k = 0; k < first->second; ++k) positions.push_back(i + k);
    size_t pos = i + first->second;
    while (pos + 1 < n && !consumed[pos] && is_list_separator(tokens.tokens[pos])) {
      auto next = match_element_at(element, tokens, pos + 1, consumed, ctx);
      if (!next) break;
      positions.push_back(pos);
      for (size_t k = 0; k < next->second; ++k) positions.push_back(pos + 1 + k);
      if (std::find(values.begin(), values.end(), next->first) == values.end())
        values.push_back(next->first);
      pos = pos + 1 + next->second;
    }
    CollectionMatch m;
    m.value = CollectionValue::list(std::move(values));
    m.consumed = std::move(positions);
    m.form = MatchedBy::type_only;
    return m;
  }

  // (c) "all", when the element value set is enumerable
  if (element.enumerable()) {
    for (size_t i = start_hint; i < n; ++i) {
      if (consumed[i] || tokens.tokens[i].separator) continue;
      if (tokens.tokens[i].stem == "all") {
        CollectionMatch m;
        m.value = CollectionValue::all();
        m.consumed = {i};
        m.form = MatchedBy::all_keyword;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<ValueMatch> match_value(const TypeDescriptor& descriptor,
                                      const TokenSequence& tokens, size_t pos,
                                      const std::vector<bool>& consumed, ResolutionContext& ctx) {
  if (descriptor.kind() == TypeDescriptor::Kind::collection) {
    auto cm = match_collection_impl(descriptor, tokens, pos, consumed, ctx);
    if (!cm) return std::nullopt;
    ValueMatch vm;
    vm.value = Value::collection(std::move(cm->value));
    vm.positions = std::move(cm->consumed);
    vm.form = cm->form;
    return vm;
  }
  auto m = match_element_at(descriptor, tokens, pos, consumed, ctx);
  if (!m) return std::nullopt;
  ValueMatch vm;
  vm.value = std::move(m->first);
  for (size_t k = 0; k < m->second; ++k) vm.positions.push_back(pos + k);
  vm.form = MatchedBy::type_only;
  return vm;
}

// Compatibility bucket used to distinguish type-only from positional
// bindings; int and real compete for the same numeric tokens.
int compat_bucket(const TypeDescriptor& d) {
  switch (d.kind()) {
    case TypeDescriptor::Kind::integer_number:
    case TypeDescriptor::Kind::real_number:
      return 0;
    case TypeDescriptor::Kind::enumeration:
      return 1;
    case TypeDescriptor::Kind::bounded_string:
      return 2;
    case TypeDescriptor::Kind::mapped_object:
      return 3;
    case TypeDescriptor::Kind::collection:
      return 4;
  }
  return -1;
}

bool descriptor_provider_failed(const TypeDescriptor& d, ResolutionContext& ctx,
                                std::string* which) {
  const TypeDescriptor& leaf = d.kind() == TypeDescriptor::Kind::collection ? d.element() : d;
  if (leaf.kind() == TypeDescriptor::Kind::bounded_string) {
    if (ctx.provider_values(leaf) == nullptr) {
      *which = "value provider";
      return true;
    }
  } else if (leaf.kind() == TypeDescriptor::Kind::mapped_object) {
    if (ctx.mapper_entries(leaf) == nullptr) {
      *which = "token mapper";
      return true;
    }
  }
  return false;
}

}  // namespace

const char* matched_by_name(MatchedBy m) {
  switch (m) {
    case MatchedBy::name_adjacency:
      return "name-adjacency";
    case MatchedBy::type_only:
      return "type-only";
    case MatchedBy::position:
      return "position";
    case MatchedBy::all_keyword:
      return "all-keyword";
    case MatchedBy::range:
      return "range";
  }
  return "?";
}

const std::vector<std::string>* ResolutionContext::provider_values(
    const TypeDescriptor& descriptor) {
  auto it = providers_.find(&descriptor);
  if (it == providers_.end()) {
    std::optional<std::vector<std::string>> fetched;
    try {
      std::vector<std::string> raw = descriptor.provider()();
      std::vector<std::string> values;
      for (std::string& v : raw) {
        if (v.empty()) {
          warnings_.push_back("value provider yielded an empty string; ignored");
          continue;
        }
        if (std::find(values.begin(), values.end(), v) == values.end())
          values.push_back(std::move(v));
      }
      fetched = std::move(values);
    } catch (const std::exception& e) {
      warnings_.push_back(std::string("value provider failed: ") + e.what());
    } catch (...) {
      warnings_.push_back("value provider failed");
    }
    it = providers_.emplace(&descriptor, std::move(fetched)).first;
  }
  return it->second ? &*it->second : nullptr;
}

const std::vector<ResolutionContext::MapperEntry>* ResolutionContext::mapper_entries(
    const TypeDescriptor& descriptor) {
  auto it = mappers_.find(&descriptor);
  if (it == mappers_.end()) {
    std::optional<std::vector<MapperEntry>> fetched;
    try {
      std::vector<MapperEntry> entries;
      bool duplicate = false;
      for (auto& [key, object] : descriptor.mapper()()) {
        MapperEntry entry;
        entry.key = key;
        entry.key_stem = stem(to_lower(key));
        entry.object = std::move(object);
        for (const MapperEntry& existing : entries) {
          if (existing.key_stem == entry.key_stem) {
            warnings_.push_back("token mapper keys '" + existing.key + "' and '" + entry.key +
                                "' collide after stemming");
            duplicate = true;
          }
        }
        entries.push_back(std::move(entry));
      }
      if (!duplicate) fetched = std::move(entries);
    } catch (const std::exception& e) {
      warnings_.push_back(std::string("token mapper failed: ") + e.what());
    } catch (...) {
      warnings_.push_back("token mapper failed");
    }
    it = mappers_.emplace(&descriptor, std::move(fetched)).first;
  }
  return it->second ? &*it->second : nullptr;
}

std::optional<std::string> match_enum_token(const TypeDescriptor& enum_descriptor,
                                            const Token& token) {
  if (token.separator) return std::nullopt;
  for (const EnumConstant& constant : enum_descriptor.constants()) {
    if (constant.words.size() != 1) continue;
    if (token.stem == stem(constant.words[0])) return constant.name;
  }
  return std::nullopt;
}

std::optional<std::string> match_bounded_string(const TypeDescriptor& descriptor,
                                                const Token& token, ResolutionContext& ctx) {
  return match_bounded_at(descriptor, token, ctx);
}

std::optional<Value> match_mapped_object(const TypeDescriptor& descriptor, const Token& token,
                                         ResolutionContext& ctx) {
  return match_mapped_at(descriptor, token, ctx);
}

std::optional<CollectionMatch> match_collection(const TypeDescriptor& descriptor,
                                                const TokenSequence& tokens, size_t start_hint,
                                                ResolutionContext& ctx) {
  std::vector<bool> consumed(tokens.size(), false);
  return match_collection_impl(descriptor, tokens, start_hint, consumed, ctx);
}

// Enum constants get first pick of word tokens; runtime-provided strings
// bind last. Same-kind parameters keep declaration order.
std::vector<size_t> parameter_order(const CommandSpec& spec) {
  std::vector<size_t> order(spec.parameters.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto rank = [&](size_t pi) {
    const TypeDescriptor& d = spec.parameters[pi].descriptor;
    const TypeDescriptor& leaf = d.kind() == TypeDescriptor::Kind::collection ? d.element() : d;
    if (leaf.kind() == TypeDescriptor::Kind::enumeration) return 0;
    if (leaf.kind() == TypeDescriptor::Kind::bounded_string) return 2;
    return 1;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return rank(a) < rank(b); });
  return order;
}

MatchOutcome match_parameters(const CommandSpec& spec, const TokenSequence& tokens,
                              ResolutionContext& ctx) {
  const size_t n = tokens.size();
  const size_t param_count = spec.parameters.size();
  std::vector<bool> consumed(n, false);
  std::vector<std::optional<ArgumentBinding>> bound(param_count);
  const std::vector<size_t> order = parameter_order(spec);

  std::set<std::string> command_stems;
  for (const std::string& w : spec.class_words) command_stems.insert(stem(w));
  for (const std::string& w : spec.method_words) command_stems.insert(stem(w));

  auto bind = [&](size_t pi, ValueMatch&& vm, MatchedBy scalar_tag) {
    ArgumentBinding b;
    b.parameter_index = pi;
    b.value = std::move(vm.value);
    b.matched_by = vm.form == MatchedBy::type_only ? scalar_tag : vm.form;
    for (size_t pos : vm.positions) {
      consumed[pos] = true;
      b.consumed.insert(pos);
    }
    bound[pi] = std::move(b);
  };

  // Pass 1: name adjacency. A value is anchored when one of the two tokens
  // immediately before it stems to a parameter name word (or a
  // parameter-local synonym of one). The anchor and any intervening token
  // leave the sentence word set unless they are command words themselves.
  for (size_t pi : order) {
    const ParameterSpec& p = spec.parameters[pi];
    std::set<std::string> name_stems;
    for (const std::string& w : p.name_words) name_stems.insert(stem(w));
    for (const SynonymRule& rule : p.synonyms) {
      if (!name_stems.count(stem(rule.of))) continue;
      for (const std::string& alt : rule.is) name_stems.insert(stem(alt));
    }

    for (size_t i = 0; i < n; ++i) {
      if (consumed[i]) continue;
      auto vm = match_value(p.descriptor, tokens, i, consumed, ctx);
      if (!vm) {
        if (p.descriptor.kind() == TypeDescriptor::Kind::collection) break;
        continue;
      }
      size_t first = *std::min_element(vm->positions.begin(), vm->positions.end());
      std::optional<size_t> anchor;
      for (size_t back = 1; back <= 2 && back <= first; ++back) {
        size_t j = first - back;
        const Token& t = tokens.tokens[j];
        if (!t.separator && name_stems.count(t.stem)) {
          anchor = j;
          break;
        }
      }
      if (!anchor) {
        if (p.descriptor.kind() == TypeDescriptor::Kind::collection) break;
        continue;
      }
      for (size_t j = *anchor; j < first; ++j) {
        if (consumed[j] || tokens.tokens[j].separator) continue;
        if (!command_stems.count(tokens.tokens[j].stem)) {
          consumed[j] = true;
          vm->positions.push_back(j);
        }
      }
      bind(pi, std::move(*vm), MatchedBy::name_adjacency);
      break;
    }
  }

  // Pass 2: leftmost type-compatible value for the remaining parameters, in
  // declaration order. When the command declares several parameters that
  // accept the same kind of token the assignment is positional.
  std::map<int, int> bucket_counts;
  for (size_t pi = 0; pi < param_count; ++pi) {
    ++bucket_counts[compat_bucket(spec.parameters[pi].descriptor)];
  }
  for (size_t pi : order) {
    if (bound[pi]) continue;
    const ParameterSpec& p = spec.parameters[pi];
    MatchedBy tag = bucket_counts[compat_bucket(p.descriptor)] >= 2 ? MatchedBy::position
                                                                    : MatchedBy::type_only;
    for (size_t i = 0; i < n; ++i) {
      if (consumed[i]) continue;
      auto vm = match_value(p.descriptor, tokens, i, consumed, ctx);
      if (!vm) {
        if (p.descriptor.kind() == TypeDescriptor::Kind::collection) break;
        continue;
      }
      bind(pi, std::move(*vm), tag);
      break;
    }
  }

  MatchOutcome outcome;
  for (size_t pi = 0; pi < param_count; ++pi) {
    const ParameterSpec& p = spec.parameters[pi];
    std::string which;
    if (descriptor_provider_failed(p.descriptor, ctx, &which)) {
      outcome.matched = false;
      outcome.elimination_reason = which + " failed for parameter '" + p.identifier + "'";
      return outcome;
    }
    if (p.mandatory && !bound[pi]) {
      outcome.matched = false;
      outcome.elimination_reason = "mandatory parameter '" + p.identifier + "' (" +
                                   p.descriptor.display_name() + ") not found in sentence";
      return outcome;
    }
  }
  outcome.matched = true;
  for (size_t pi = 0; pi < param_count; ++pi) {
    if (bound[pi]) outcome.bindings.push_back(std::move(*bound[pi]));
  }
  return outcome;
}

}  // namespace voicecmd
