// Acceptance suite: one pass/fail line per criterion; exits nonzero when any
// criterion fails. Usage: acceptance_tests [--corpus <path>]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "voicecmd/corpus.hpp"
#include "voicecmd/demo_home.hpp"
#include "voicecmd/engine.hpp"
#include "voicecmd/matching.hpp"
#include "voicecmd/scoring.hpp"
#include "voicecmd/stemmer.hpp"

using namespace voicecmd;

namespace {

std::string g_corpus_path = "data/golden_corpus.jsonl";

struct Checker {
  std::vector<std::string> failures;

  void require(bool condition, const std::string& message) {
    if (!condition) failures.push_back(message);
  }
};

struct DemoFixture {
  demo::HomeState state = demo::HomeState::with_defaults();
  Registry registry = demo::build_demo_registry(state);
};

// ---- criterion 1: golden-corpus exactness ---------------------------------

void criterion_golden_corpus(Checker& check) {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"turn on light", "Light.turnOn()"},
      {"turn on lights", "Light.turnOn()"},
      {"turn lights on", "Light.turnOn()"},
      {"please turn on the light", "Light.turnOn()"},
      {"turn off all lights", "Light.turnOff()"},
      {"light off", "Light.turnOff()"},
      {"turn on light number 1", "Light.turnOn#2(1)"},
      {"turn on light 1", "Light.turnOn#2(1)"},
      {"turn on the left light", "Light.turnOn#3(LEFT)"},
      {"turn on the front light", "Light.turnOn#4(\"front\")"},
      {"set light 1 color to green", "Light.setColor(1, green)"},
      {"set light 1 to brightness 50", "Light.setBrightness(1, 50)"},
      {"set brightness of light number 2 to 30", "Light.setBrightness(2, 30)"},
      {"dim lights 1, 7 and 9", "Light.dim([1, 7, 9])"},
      {"dim lights 6 to 10", "Light.dim([6..10])"},
      {"dim the left and middle light", "Light.dim#2([LEFT, MIDDLE])"},
      {"set screen 1 to on", "Screen.set(1, ON)"},
      {"turn screen 1 on", "Screen.set(1, ON)"},
      {"say 'I like turning off the screens'",
       "Speech.pronounce(\"'I like turning off the screens'\")"},
  };

  DemoFixture demo;
  auto start = std::chrono::steady_clock::now();
  for (const auto& [sentence, display] : expected) {
    ResolutionResult result = resolve(demo.registry, sentence);
    if (!result.resolved()) {
      check.require(false, "'" + sentence + "' did not resolve");
      continue;
    }
    check.require(result.call->to_display_string() == display,
                  "'" + sentence + "' resolved to " + result.call->to_display_string() +
                      ", expected " + display);
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  double ms = std::chrono::duration<double, std::milli>(elapsed).count();
  check.require(ms < 1000.0, "corpus resolution took " + std::to_string(ms) + " ms (limit 1000)");

  CorpusReport report = evaluate_corpus(demo.registry, load_corpus_file(g_corpus_path));
  for (const CorpusEntryResult& er : report.entries) {
    check.require(er.correct, "corpus row '" + er.entry.sentence + "' -> " + er.actual);
  }
  check.require(report.accuracy == 1.0, "corpus accuracy below 1.0");
}

// ---- criterion 2: Jaccard unit suite --------------------------------------

void criterion_jaccard(Checker& check) {
  check.require(jaccard({"a"}, {"a"}) == 1.0, "identity failed");
  check.require(jaccard({"a"}, {"b"}) == 0.0, "disjointness failed");
  check.require(jaccard({}, {}) == 0.0, "empty-set convention failed");

  std::mt19937 rng(2024);
  const std::vector<std::string> pool = {"turn", "on",  "light", "set",    "screen", "dim",
                                         "all",  "off", "say",   "bright", "color",  "name"};
  for (int round = 0; round < 1000; ++round) {
    WordSet a, b;
    for (size_t i = 0, n = rng() % 7; i < n; ++i) a.insert(pool[rng() % pool.size()]);
    for (size_t i = 0, n = rng() % 7; i < n; ++i) b.insert(pool[rng() % pool.size()]);
    std::vector<std::string> inter, uni;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    double expected =
        uni.empty() ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    double actual = jaccard(a, b);
    check.require(actual == expected, "oracle mismatch on randomized pair");
    check.require(actual == jaccard(b, a), "symmetry violated");
    check.require(actual >= 0.0 && actual <= 1.0, "range violated");
    check.require((actual == 1.0) == (!a.empty() && a == b), "identity iff equal violated");
    check.require((actual == 0.0) == inter.empty(), "zero iff disjoint violated");
  }
}

// ---- criterion 3: scoring oracle ------------------------------------------

double oracle_best_score(const WordSet& wm, const std::vector<SynonymRule>& rules,
                         const WordSet& ws) {
  std::vector<std::string> words(wm.begin(), wm.end());
  std::vector<std::vector<std::string>> options;
  for (const std::string& w : words) {
    std::vector<std::string> opts{w};
    for (const SynonymRule& rule : rules) {
      if (stem(rule.of) != w) continue;
      for (const std::string& alt : rule.is) {
        std::string s = stem(to_lower(alt));
        if (std::find(opts.begin(), opts.end(), s) == opts.end()) opts.push_back(s);
      }
    }
    options.push_back(std::move(opts));
  }
  double best = -1.0;
  std::vector<size_t> pick(words.size(), 0);
  while (true) {
    WordSet variant;
    for (size_t i = 0; i < words.size(); ++i) variant.insert(options[i][pick[i]]);
    std::vector<std::string> inter, uni;
    std::set_intersection(variant.begin(), variant.end(), ws.begin(), ws.end(),
                          std::back_inserter(inter));
    std::set_union(variant.begin(), variant.end(), ws.begin(), ws.end(), std::back_inserter(uni));
    double score =
        uni.empty() ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    best = std::max(best, score);
    size_t pos = 0;
    while (pos < pick.size()) {
      if (++pick[pos] < options[pos].size()) break;
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size() || pick.empty()) break;
  }
  return best;
}

void criterion_scoring_oracle(Checker& check) {
  struct Case {
    std::string cls, method, sentence;
    std::vector<SynonymRule> rules;
  };
  const std::vector<Case> cases = {
      {"ScreenService", "set", "turn screen 1 on",
       {{"set", {"turn"}, SynonymScope::command_local},
        {"screen", {"display", "monitor"}, SynonymScope::class_local}}},
      {"LightService", "turnOn", "switch the lamp on",
       {{"turn", {"switch", "flip", "toggle"}, SynonymScope::command_local},
        {"light", {"lamp", "bulb", "led", "lantern"}, SynonymScope::class_local},
        {"on", {"up"}, SynonymScope::registry_global}}},
      {"DoorService", "open", "unlock the door",
       {{"open", {"unlock", "unbar", "unseal", "release", "free"}, SynonymScope::command_local}}},
      {"PumpService", "start", "boot the pump impeller now",
       {{"start", {"boot", "launch", "run", "fire", "spin", "kick", "go"},
         SynonymScope::registry_global},
        {"pump", {"impeller"}, SynonymScope::class_local}}},
  };
  for (const Case& c : cases) {
    size_t alternatives = 0;
    for (const SynonymRule& rule : c.rules) alternatives += rule.is.size();
    check.require(alternatives <= 16, "case exceeds the 16-alternative bound");

    Registry registry;
    CommandBuilder builder(c.cls, c.method);
    for (const SynonymRule& rule : c.rules) {
      if (rule.scope == SynonymScope::registry_global) {
        registry.add_global_synonym(rule.of, rule.is);
      } else if (rule.scope == SynonymScope::class_local) {
        builder.class_synonym(rule.of, rule.is);
      } else {
        builder.synonym(rule.of, rule.is);
      }
    }
    const std::string& id = registry.register_command(builder);
    const CommandSpec& spec = *registry.find(id);
    TokenSequence tokens = tokenize(c.sentence);
    ResolutionContext ctx;
    MatchOutcome outcome = match_parameters(spec, tokens, ctx);
    if (!outcome.matched) {
      check.require(false, "oracle case did not match: " + c.sentence);
      continue;
    }
    ScoredCandidate sc = score_command(registry, spec, tokens, std::move(outcome.bindings));
    double expected = oracle_best_score(sc.wm, c.rules, sc.ws);
    check.require(std::abs(sc.score - expected) <= 1e-12,
                  "score " + std::to_string(sc.score) + " differs from oracle " +
                      std::to_string(expected) + " for '" + c.sentence + "'");
  }
}

// ---- criterion 4: threshold behavior --------------------------------------

void criterion_threshold(Checker& check) {
  DemoFixture at_default;
  ResolutionResult none = resolve(at_default.registry, "recalibrate flux");
  check.require(none.no_match(), "stem-free sentence did not yield NoMatch at threshold 0.2");

  demo::HomeState strict_state = demo::HomeState::with_defaults();
  Registry strict = demo::build_demo_registry(strict_state, 1.0);
  std::vector<CorpusEntry> corpus = load_corpus_file(g_corpus_path);
  for (const CorpusEntry& entry : corpus) {
    ResolutionResult low = resolve(at_default.registry, entry.sentence);
    ResolutionResult high = resolve(strict, entry.sentence);
    if (low.no_match()) {
      check.require(high.no_match(),
                    "raising the threshold resolved '" + entry.sentence + "'");
    }
    if (low.resolved() && low.call->via == ResolvedVia::similarity &&
        low.call->score < 1.0 - kScoreEpsilon) {
      check.require(high.no_match(),
                    "non-exact match '" + entry.sentence + "' survived threshold 1.0");
    }
    if (high.resolved() && high.call->via == ResolvedVia::similarity) {
      check.require(high.call->score >= 1.0 - kScoreEpsilon,
                    "threshold 1.0 resolved a non-exact match");
    }
  }
}

// ---- criterion 5: mandatory-parameter filter -------------------------------

void criterion_mandatory_filter(Checker& check) {
  DemoFixture demo;
  ResolutionResult result = resolve(demo.registry, "turn on light");
  check.require(result.resolved() && result.call->command_id == "Light.turnOn",
                "'turn on light' must resolve to the parameterless overload");

  ExplainReport report = explain(demo.registry, "turn on light");
  for (const CommandReport& rep : report.commands) {
    if (rep.id == "Light.turnOn#2" || rep.id == "Light.turnOn#3" || rep.id == "Light.turnOn#4") {
      check.require(rep.eliminated, rep.id + " was not eliminated");
    }
  }
}

// ---- criterion 6: fallback priority ----------------------------------------

void criterion_fallback_priority(Checker& check) {
  DemoFixture demo;
  const std::vector<std::string> sentences = {
      "say hello",
      "say 'I like turning off the screens'",
      "say turn off all lights and dim the screens",
  };
  for (const std::string& s : sentences) {
    ExplainReport report = explain(demo.registry, s);
    check.require(report.fallback_matched, "'" + s + "' did not take the fallback route");
    check.require(!report.similarity_consulted,
                  "similarity pipeline consulted for '" + s + "'");
    check.require(report.commands.empty(), "commands were scored for '" + s + "'");
    check.require(report.outcome.resolved() &&
                      report.outcome.call->command_id == "Speech.pronounce",
                  "'" + s + "' did not resolve to Speech.pronounce");
  }
}

// ---- criterion 7: range laziness -------------------------------------------

void criterion_range_laziness(Checker& check) {
  Registry registry;
  std::vector<std::int64_t> seen;
  registry.register_command(
      CommandBuilder("LightService", "dim")
          .param("lights", TypeDescriptor::collection_of(TypeDescriptor::integer_number(), true))
          .handler([&seen](const std::vector<Value>& args) {
            seen.clear();
            args[0].as_collection().for_each(
                [&seen](const Value& v) { seen.push_back(v.as_integer()); });
          }));
  registry.freeze();

  auto start = std::chrono::steady_clock::now();
  ResolutionResult big = resolve(registry, "dim lights 6 to 1000000");
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  check.require(big.resolved(), "huge range did not resolve");
  if (big.resolved()) {
    const CollectionValue& c = big.call->arguments[0].as_collection();
    check.require(c.kind() == CollectionValue::Kind::integer_range,
                  "range was materialized during resolution");
    check.require(c.low() == 6 && c.high() == 1000000, "range bounds wrong");
  }
  check.require(ms < 100.0, "resolving a huge range took " + std::to_string(ms) + " ms");

  std::mt19937 rng(77);
  for (int round = 0; round < 60; ++round) {
    std::int64_t a = rng() % 51;
    std::int64_t b = a + rng() % (51 - a);
    ResolutionResult result =
        resolve(registry, "dim lights " + std::to_string(a) + " to " + std::to_string(b));
    if (!result.resolved()) {
      check.require(false, "small range did not resolve");
      continue;
    }
    execute(registry, result);
    check.require(static_cast<std::int64_t>(seen.size()) == b - a + 1,
                  "iteration count != range size for " + std::to_string(a) + ".." +
                      std::to_string(b));
    std::vector<std::int64_t> expected;
    for (std::int64_t v = a; v <= b; ++v) expected.push_back(v);
    check.require(seen == expected, "range values differ from the explicit enumeration");
  }
}

// ---- criterion 8: determinism ----------------------------------------------

void criterion_determinism(Checker& check) {
  DemoFixture demo;
  std::vector<CorpusEntry> corpus = load_corpus_file(g_corpus_path);
  for (const CorpusEntry& entry : corpus) {
    std::string reference = explain(demo.registry, entry.sentence).to_string();
    for (int i = 1; i < 100; ++i) {
      if (explain(demo.registry, entry.sentence).to_string() != reference) {
        check.require(false, "explain drifted for '" + entry.sentence + "' on run " +
                                 std::to_string(i));
        break;
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--corpus") g_corpus_path = argv[i + 1];
  }

  struct Criterion {
    const char* name;
    std::function<void(Checker&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"1 golden-corpus exactness", criterion_golden_corpus},
      {"2 jaccard unit suite + randomized oracle", criterion_jaccard},
      {"3 scoring equals exhaustive variant enumeration", criterion_scoring_oracle},
      {"4 threshold behavior and monotonicity", criterion_threshold},
      {"5 mandatory-parameter filter", criterion_mandatory_filter},
      {"6 fallback priority bypasses similarity", criterion_fallback_priority},
      {"7 range laziness and iteration oracle", criterion_range_laziness},
      {"8 deterministic explain reports (100 runs)", criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    if (check.failures.empty()) {
      std::printf("[PASS] criterion %s\n", criterion.name);
    } else {
      ++failed;
      std::printf("[FAIL] criterion %s\n", criterion.name);
      for (const std::string& f : check.failures) std::printf("       - %s\n", f.c_str());
    }
  }
  std::printf("%zu criteria, %zu passed, %d failed\n", criteria.size(),
              criteria.size() - static_cast<size_t>(failed), failed);
  return failed == 0 ? 0 : 1;
}
