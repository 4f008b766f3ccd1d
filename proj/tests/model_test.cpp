#include <doctest.h>

#include <random>

#include "voicecmd/errors.hpp"
#include "voicecmd/registry.hpp"

using namespace voicecmd;

TEST_CASE("strip_implementation_suffix") {
  CHECK(strip_implementation_suffix("LightService") == "Light");
  CHECK(strip_implementation_suffix("Light") == "Light");
  CHECK(strip_implementation_suffix("Service") == "Service");
  CHECK(strip_implementation_suffix("DoorController") == "Door");
  CHECK(strip_implementation_suffix("AudioManager") == "Audio");
  CHECK(strip_implementation_suffix("SpeakerImpl") == "Speaker");
  CHECK(strip_implementation_suffix("Gadget", {"Gadget"}) == "Gadget");
}

TEST_CASE("strip_implementation_suffix is idempotent over stripped names") {
  std::mt19937 rng(11);
  const std::vector<std::string> bases = {"Light", "Door", "Screen", "Audio", "Garden", "Pump"};
  const std::vector<std::string>& suffixes = default_strippable_suffixes();
  for (int round = 0; round < 200; ++round) {
    std::string base = bases[rng() % bases.size()];
    std::string name = rng() % 2 ? base + suffixes[rng() % suffixes.size()] : base;
    std::string once = strip_implementation_suffix(name);
    CHECK(once == base);
    CHECK(strip_implementation_suffix(once) == once);
  }
}

TEST_CASE("register splits and lowers the suffix-stripped class name") {
  Registry registry;
  const std::string& id = registry.register_command(CommandBuilder("LightService", "turnOn"));
  CHECK(id == "Light.turnOn");
  const CommandSpec* spec = registry.find(id);
  REQUIRE(spec != nullptr);
  CHECK(spec->class_words == WordList{"light"});
  CHECK(spec->method_words == WordList{"turn", "on"});
}

TEST_CASE("class_words round-trip over generated identifiers") {
  std::mt19937 rng(23);
  const std::vector<std::string> parts = {"Light", "Door", "Garden", "Hdmi", "Pump", "Hub"};
  for (int round = 0; round < 200; ++round) {
    std::string base = parts[rng() % parts.size()] + parts[rng() % parts.size()];
    std::string cls = rng() % 2 ? base + "Service" : base;
    Registry registry;
    const std::string& id = registry.register_command(CommandBuilder(cls, "doThing"));
    CHECK(registry.find(id)->class_words == split_identifier(base));
  }
}

TEST_CASE("overloads get distinct generated ids") {
  Registry registry;
  CHECK(registry.register_command(CommandBuilder("LightService", "turnOn")) == "Light.turnOn");
  CHECK(registry.register_command(CommandBuilder("LightService", "turnOn")
                                      .param("number", TypeDescriptor::integer_number())) ==
        "Light.turnOn#2");
  CHECK(registry.register_command(
            CommandBuilder("LightService", "turnOn")
                .param("position", TypeDescriptor::enumeration({"LEFT", "RIGHT"}))) ==
        "Light.turnOn#3");
}

TEST_CASE("duplicate explicit id is rejected") {
  Registry registry;
  registry.register_command(CommandBuilder("LightService", "turnOn").id("x"));
  CHECK_THROWS_AS(registry.register_command(CommandBuilder("DoorService", "open").id("x")),
                  DuplicateIdError);
}

TEST_CASE("lookup by id returns the stored spec") {
  Registry registry;
  registry.register_command(CommandBuilder("ScreenService", "set")
                                .param("screen", TypeDescriptor::integer_number())
                                .synonym("set", {"turn"}));
  const CommandSpec* spec = registry.find("Screen.set");
  REQUIRE(spec != nullptr);
  CHECK(spec->id == "Screen.set");
  CHECK(spec->class_words == WordList{"screen"});
  CHECK(spec->parameters.size() == 1);
  CHECK(spec->parameters[0].identifier == "screen");
  CHECK(spec->synonyms.size() == 1);
  CHECK(registry.find("Screen.unset") == nullptr);
}

TEST_CASE("invalid specs are rejected with the violated invariant") {
  CHECK_THROWS_AS(TypeDescriptor::enumeration({}), InvalidSpecError);
  CHECK_THROWS_AS(
      TypeDescriptor::collection_of(TypeDescriptor::collection_of(TypeDescriptor::integer_number())),
      InvalidSpecError);
  CHECK_THROWS_AS(TypeDescriptor::collection_of(TypeDescriptor::enumeration({"A"}),
                                                /*allow_ranges=*/true),
                  InvalidSpecError);

  Registry registry;
  CHECK_THROWS_AS(registry.set_threshold(1.5), InvalidSpecError);
  CHECK_THROWS_AS(registry.register_command(
                      CommandBuilder("LightService", "turnOff").extra_word("all").optional_word("all")),
                  InvalidSpecError);
  CHECK_THROWS_AS(registry.register_command(
                      CommandBuilder("LightService", "turnOff").synonym("off", {"off"})),
                  InvalidSpecError);
  CHECK_THROWS_AS(CommandBuilder("LightService", "x").param_synonym("a", {"b"}), InvalidSpecError);
}

TEST_CASE("fallback with matching capture count is accepted") {
  Registry registry;
  registry.register_command(
      CommandBuilder("SpeechService", "pronounce")
          .param("sentence", TypeDescriptor::bounded_string([] { return std::vector<std::string>{}; }))
          .fallback("say (.*)"));
  registry.freeze();
  CHECK(registry.fallback_regex(0) != nullptr);
}

TEST_CASE("freeze validates fallback patterns") {
  {
    Registry registry;
    registry.register_command(CommandBuilder("SpeechService", "pronounce").fallback("say ("));
    CHECK_THROWS_AS(registry.freeze(), InvalidSpecError);
  }
  {
    Registry registry;
    registry.register_command(CommandBuilder("SpeechService", "pronounce").fallback("say (.*)"));
    // one capture group, zero parameters
    CHECK_THROWS_AS(registry.freeze(), InvalidSpecError);
  }
}

TEST_CASE("a frozen registry rejects further mutation") {
  Registry registry;
  registry.register_command(CommandBuilder("LightService", "turnOn"));
  registry.freeze();
  CHECK_THROWS_AS(registry.register_command(CommandBuilder("DoorService", "open")),
                  std::logic_error);
  CHECK_THROWS_AS(registry.set_threshold(0.3), std::logic_error);
  CHECK_THROWS_AS(registry.add_global_synonym("a", {"b"}), std::logic_error);
}
