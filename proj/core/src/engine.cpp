#include "voicecmd/engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "voicecmd/errors.hpp"
#include "voicecmd/matching.hpp"
#include "voicecmd/stemmer.hpp"
#include "voicecmd/text.hpp"

namespace voicecmd {

namespace {

std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> set_to_vector(const WordSet& s) {
  return std::vector<std::string>(s.begin(), s.end());
}

std::vector<Value> arguments_from_bindings(const CommandSpec& spec,
                                           const std::vector<ArgumentBinding>& bindings) {
  std::vector<Value> args(spec.parameters.size(), Value::none());
  for (const ArgumentBinding& b : bindings) args[b.parameter_index] = b.value;
  return args;
}

ResolvedCall make_call(const ScoredCandidate& sc) {
  ResolvedCall call;
  call.command_id = sc.candidate.command->id;
  call.arguments = arguments_from_bindings(*sc.candidate.command, sc.candidate.bindings);
  call.score = sc.effective_score();
  call.via = ResolvedVia::similarity;
  return call;
}

CommandReport report_for(const ScoredCandidate& sc) {
  CommandReport rep;
  rep.id = sc.candidate.command->id;
  rep.wm = set_to_vector(sc.wm);
  rep.ws = set_to_vector(sc.ws);
  rep.variants_considered = sc.variants_considered;
  rep.best_variant = set_to_vector(sc.best_variant);
  rep.score = sc.score;
  rep.adjusted_score = sc.adjusted_score;
  for (const ArgumentBinding& b : sc.candidate.bindings) {
    BindingReport br;
    br.parameter = sc.candidate.command->parameters[b.parameter_index].identifier;
    br.value = b.value.to_display_string();
    br.matched_by = matched_by_name(b.matched_by);
    br.consumed.assign(b.consumed.begin(), b.consumed.end());
    rep.bindings.push_back(std::move(br));
  }
  return rep;
}

Value expand_all_values(const TypeDescriptor& element) {
  std::vector<Value> items;
  switch (element.kind()) {
    case TypeDescriptor::Kind::enumeration:
      for (const EnumConstant& c : element.constants()) items.push_back(Value::enum_constant(c.name));
      break;
    case TypeDescriptor::Kind::bounded_string: {
      ResolutionContext ctx;
      const std::vector<std::string>* values = ctx.provider_values(element);
      if (!values) throw HandlerError("value provider failed while expanding 'all'");
      for (const std::string& v : *values) items.push_back(Value::text(v));
      break;
    }
    case TypeDescriptor::Kind::mapped_object: {
      ResolutionContext ctx;
      const auto* entries = ctx.mapper_entries(element);
      if (!entries) throw HandlerError("token mapper failed while expanding 'all'");
      for (const auto& e : *entries) items.push_back(Value::mapped(e.key, e.object));
      break;
    }
    default:
      throw HandlerError("'all' collection over a non-enumerable element type");
  }
  return Value::collection(CollectionValue::list(std::move(items)));
}

Value coerce_fallback_argument(const Value& value, const TypeDescriptor& descriptor) {
  if (value.kind() != Value::Kind::text) return value;
  const std::string& text = value.as_text();
  auto parse_real = [&]() -> double {
    std::string_view sv = trim(text);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
    if (ec != std::errc() || ptr != sv.data() + sv.size())
      throw HandlerError("cannot coerce captured text '" + text + "' to a number");
    return out;
  };
  switch (descriptor.kind()) {
    case TypeDescriptor::Kind::integer_number: {
      double v = parse_real();
      if (v != std::floor(v))
        throw HandlerError("cannot coerce captured text '" + text + "' to an integer");
      return Value::integer(static_cast<std::int64_t>(v));
    }
    case TypeDescriptor::Kind::real_number:
      return Value::real(parse_real());
    default:
      return value;
  }
}

}  // namespace

std::string ResolvedCall::to_display_string() const {
  std::ostringstream os;
  os << command_id << '(';
  for (size_t i = 0; i < arguments.size(); ++i) {
    if (i) os << ", ";
    os << arguments[i].to_display_string();
  }
  os << ')';
  return os.str();
}

namespace {

ResolutionResult resolve_impl(const Registry& registry, const std::string& sentence,
                              ExplainReport* report) {
  if (!registry.frozen()) throw std::logic_error("registry must be frozen before resolving");

  ResolutionResult result;
  if (report) report->sentence = sentence;

  // Fallback pass: manual patterns win outright, in registration order.
  std::string trimmed(trim(sentence));
  const std::deque<CommandSpec>& commands = registry.commands();
  for (size_t i = 0; i < commands.size(); ++i) {
    const std::regex* re = registry.fallback_regex(i);
    if (!re) continue;
    std::smatch m;
    if (!std::regex_match(trimmed, m, *re)) continue;
    ResolvedCall call;
    call.command_id = commands[i].id;
    call.score = 1.0;
    call.via = ResolvedVia::fallback_regex;
    for (size_t g = 1; g < m.size(); ++g) call.arguments.push_back(Value::text(m[g].str()));
    result.kind = ResolutionResult::Kind::resolved;
    result.call = std::move(call);
    if (report) {
      report->fallback_matched = true;
      report->fallback_command = commands[i].id;
      for (size_t g = 1; g < m.size(); ++g) report->fallback_arguments.push_back(m[g].str());
      report->outcome = result;
    }
    return result;
  }

  TokenSequence tokens = tokenize(sentence);
  if (report) {
    report->similarity_consulted = true;
    for (const Token& t : tokens.tokens)
      if (!t.separator) report->token_stems.push_back(t.stem);
  }

  ResolutionContext ctx;
  std::vector<ScoredCandidate> candidates;
  for (size_t i = 0; i < commands.size(); ++i) {
    MatchOutcome mo = match_parameters(commands[i], tokens, ctx);
    if (!mo.matched) {
      if (report) {
        CommandReport rep;
        rep.id = commands[i].id;
        rep.eliminated = true;
        rep.elimination_reason = mo.elimination_reason;
        report->commands.push_back(std::move(rep));
      }
      continue;
    }
    ScoredCandidate sc =
        score_command(registry, commands[i], tokens, std::move(mo.bindings), &ctx.warnings());
    if (report) report->commands.push_back(report_for(sc));
    candidates.push_back(std::move(sc));
  }
  result.warnings = ctx.warnings();

  auto publish_reports = [&](const std::vector<ScoredCandidate>& scs) {
    if (!report) return;
    for (const ScoredCandidate& sc : scs) {
      for (CommandReport& rep : report->commands) {
        if (rep.id == sc.candidate.command->id) rep.adjusted_score = sc.adjusted_score;
      }
    }
  };

  const double threshold = registry.threshold();
  if (candidates.empty()) {
    result.kind = ResolutionResult::Kind::no_match;
    result.best_score = 0.0;
    if (report) report->outcome = result;
    return result;
  }

  double top = candidates.front().score;
  for (const ScoredCandidate& sc : candidates) top = std::max(top, sc.score);
  std::vector<ScoredCandidate> tied;
  for (const ScoredCandidate& sc : candidates) {
    if (sc.score >= top - kScoreEpsilon) tied.push_back(sc);
  }

  auto finish_resolved = [&](const ScoredCandidate& sc) {
    result.kind = ResolutionResult::Kind::resolved;
    result.call = make_call(sc);
  };
  auto finish_ambiguous = [&](const std::vector<ScoredCandidate>& scs) {
    result.kind = ResolutionResult::Kind::ambiguous;
    size_t limit = std::min<size_t>(scs.size(), 5);
    for (size_t i = 0; i < limit; ++i) result.options.push_back(make_call(scs[i]));
  };

  if (top >= threshold - kScoreEpsilon) {
    if (tied.size() == 1) {
      finish_resolved(tied.front());
    } else {
      // Tie at the top: let the declared extra/optional words decide.
      tie_break_adjust(tied);
      publish_reports(tied);
      double adjusted_top = *tied.front().adjusted_score;
      std::vector<ScoredCandidate> still_tied;
      for (const ScoredCandidate& sc : tied) {
        if (*sc.adjusted_score >= adjusted_top - kScoreEpsilon) still_tied.push_back(sc);
      }
      if (still_tied.size() == 1) {
        finish_resolved(still_tied.front());
      } else {
        finish_ambiguous(still_tied);
      }
    }
  } else {
    // Top score below threshold: the adjustment reorders the diagnostic
    // ranking but never overrides the threshold gate.
    tie_break_adjust(candidates);
    publish_reports(candidates);
    result.kind = ResolutionResult::Kind::no_match;
    result.best_score = top;
    result.best_command = candidates.front().candidate.command->id;
  }
  if (report) report->outcome = result;
  return result;
}

}  // namespace

ResolutionResult resolve(const Registry& registry, const std::string& sentence) {
  return resolve_impl(registry, sentence, nullptr);
}

ExplainReport explain(const Registry& registry, const std::string& sentence) {
  ExplainReport report;
  resolve_impl(registry, sentence, &report);
  return report;
}

void execute(const Registry& registry, const ResolutionResult& result) {
  if (!result.resolved()) throw NotResolvedError();
  execute(registry, *result.call);
}

void execute(const Registry& registry, const ResolvedCall& call) {
  const CommandSpec* spec = registry.find(call.command_id);
  if (!spec) throw HandlerError("unknown command id: " + call.command_id);
  if (!spec->handler) throw HandlerError("command " + call.command_id + " has no handler");
  if (call.arguments.size() != spec->parameters.size())
    throw HandlerError("argument count mismatch for " + call.command_id);

  std::vector<Value> args = call.arguments;
  for (size_t i = 0; i < args.size(); ++i) {
    const TypeDescriptor& d = spec->parameters[i].descriptor;
    if (call.via == ResolvedVia::fallback_regex) args[i] = coerce_fallback_argument(args[i], d);
    if (args[i].kind() == Value::Kind::collection &&
        args[i].as_collection().kind() == CollectionValue::Kind::all_values) {
      args[i] = expand_all_values(d.element());
    }
  }
  try {
    spec->handler(args);
  } catch (const HandlerError&) {
    throw;
  } catch (const std::exception& e) {
    throw HandlerError(std::string("handler for ") + call.command_id + " failed: " + e.what());
  } catch (...) {
    throw HandlerError("handler for " + call.command_id + " failed");
  }
}

std::string ExplainReport::to_string() const {
  std::ostringstream os;
  os << "sentence: \"" << sentence << "\"\n";
  if (fallback_matched) {
    os << "fallback: matched " << fallback_command << " with [";
    os << join(fallback_arguments, ", ") << "]\n";
    os << "similarity pipeline: not consulted\n";
  } else {
    os << "fallback: no pattern matched\n";
    os << "tokens: " << join(token_stems, " ") << "\n";
    os << "commands:\n";
    for (const CommandReport& rep : commands) {
      os << "  " << rep.id << ": ";
      if (rep.eliminated) {
        os << "eliminated (" << rep.elimination_reason << ")\n";
        continue;
      }
      os << "score=" << format_score(rep.score);
      if (rep.adjusted_score) os << " adjusted=" << format_score(*rep.adjusted_score);
      os << " variants=" << rep.variants_considered;
      os << " W_M={" << join(rep.wm, ",") << "}";
      os << " W_S={" << join(rep.ws, ",") << "}";
      os << " best_variant={" << join(rep.best_variant, ",") << "}";
      os << " bindings=[";
      for (size_t i = 0; i < rep.bindings.size(); ++i) {
        const BindingReport& b = rep.bindings[i];
        if (i) os << ", ";
        os << b.parameter << "=" << b.value << " via " << b.matched_by;
      }
      os << "]\n";
    }
  }
  os << "outcome: ";
  switch (outcome.kind) {
    case ResolutionResult::Kind::resolved:
      os << "resolved " << outcome.call->to_display_string()
         << " score=" << format_score(outcome.call->score)
         << (outcome.call->via == ResolvedVia::fallback_regex ? " via=fallback-regex"
                                                              : " via=similarity");
      break;
    case ResolutionResult::Kind::ambiguous: {
      os << "ambiguous between";
      for (const ResolvedCall& option : outcome.options) {
        os << " " << option.to_display_string() << " score=" << format_score(option.score) << ";";
      }
      break;
    }
    case ResolutionResult::Kind::no_match:
      os << "no match, best score " << format_score(outcome.best_score);
      if (outcome.best_command) os << " (" << *outcome.best_command << ")";
      break;
  }
  os << "\n";
  if (!outcome.warnings.empty()) {
    os << "warnings:\n";
    for (const std::string& w : outcome.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

}  // namespace voicecmd
