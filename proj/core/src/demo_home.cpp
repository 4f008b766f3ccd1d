#include "voicecmd/demo_home.hpp"

#include <stdexcept>

#include <json.hpp>

#include "voicecmd/errors.hpp"

namespace voicecmd::demo {

namespace {

struct Rgb {
  int r = 0, g = 0, b = 0;
};

LightState& light_at(HomeState& state, std::int64_t id) {
  auto it = state.lights.find(static_cast<int>(id));
  if (it == state.lights.end())
    throw std::out_of_range("no light with number " + std::to_string(id));
  return it->second;
}

void set_brightness_checked(LightState& light, double value) {
  if (value < 0.0 || value > 100.0)
    throw std::invalid_argument("brightness must lie in [0,100]");
  light.brightness = value;
}

void dim_collection(HomeState& state, const Value& lights, bool by_position) {
  lights.as_collection().for_each([&](const Value& element) {
    int id = by_position ? light_for_position(element.as_text())
                         : static_cast<int>(element.as_integer());
    auto it = state.lights.find(id);
    if (it != state.lights.end()) it->second.brightness = kDimLevel;
  });
}

}  // namespace

HomeState HomeState::with_defaults() {
  HomeState state;
  for (int i = 1; i <= 10; ++i) state.lights[i] = LightState{};
  state.named_lights = {{"front", 4}, {"back", 5}};
  for (int i = 1; i <= 3; ++i) state.screens[i] = false;
  return state;
}

int light_for_position(const std::string& position) {
  if (position == "LEFT") return 1;
  if (position == "MIDDLE") return 2;
  if (position == "RIGHT") return 3;
  throw std::out_of_range("unknown position: " + position);
}

Registry build_demo_registry(HomeState& state, double threshold) {
  Registry registry;
  registry.set_threshold(threshold);

  // Light.turnOn
  registry.register_command(
      CommandBuilder("LightService", "turnOn").handler([&state](const std::vector<Value>&) {
        for (auto& [id, light] : state.lights) light.on = true;
      }));

  // Light.turnOn#2 (number)
  registry.register_command(CommandBuilder("LightService", "turnOn")
                                .param("number", TypeDescriptor::integer_number())
                                .handler([&state](const std::vector<Value>& args) {
                                  light_at(state, args[0].as_integer()).on = true;
                                }));

  // Light.turnOn#3 (position)
  registry.register_command(
      CommandBuilder("LightService", "turnOn")
          .param("position", TypeDescriptor::enumeration({"LEFT", "MIDDLE", "RIGHT"}))
          .handler([&state](const std::vector<Value>& args) {
            light_at(state, light_for_position(args[0].as_text())).on = true;
          }));

  // Light.turnOn#4 (name, valid values read from the live configuration)
  registry.register_command(
      CommandBuilder("LightService", "turnOn")
          .param("name", TypeDescriptor::bounded_string([&state] {
                   std::vector<std::string> names;
                   for (const auto& [name, id] : state.named_lights) names.push_back(name);
                   return names;
                 }))
          .handler([&state](const std::vector<Value>& args) {
            auto it = state.named_lights.find(args[0].as_text());
            if (it == state.named_lights.end())
              throw std::out_of_range("no light named " + args[0].as_text());
            light_at(state, it->second).on = true;
          }));

  // Light.turnOff
  registry.register_command(CommandBuilder("LightService", "turnOff")
                                .extra_word("all")
                                .optional_word("turn")
                                .handler([&state](const std::vector<Value>&) {
                                  for (auto& [id, light] : state.lights) light.on = false;
                                }));

  // Light.setColor(number, color)
  registry.register_command(
      CommandBuilder("LightService", "setColor")
          .param("number", TypeDescriptor::integer_number())
          .param("color", TypeDescriptor::mapped_object([] {
                   return std::vector<std::pair<std::string, std::any>>{
                       {"red", Rgb{255, 0, 0}},      {"green", Rgb{0, 255, 0}},
                       {"blue", Rgb{0, 0, 255}},     {"yellow", Rgb{255, 255, 0}},
                       {"white", Rgb{255, 255, 255}},
                   };
                 }))
          .handler([&state](const std::vector<Value>& args) {
            Rgb rgb = std::any_cast<Rgb>(args[1].object());
            light_at(state, args[0].as_integer()).color = {rgb.r, rgb.g, rgb.b};
          }));

  // Light.setBrightness(light, brightness)
  registry.register_command(CommandBuilder("LightService", "setBrightness")
                                .param("light", TypeDescriptor::integer_number())
                                .param("brightness", TypeDescriptor::real_number())
                                .handler([&state](const std::vector<Value>& args) {
                                  set_brightness_checked(light_at(state, args[0].as_integer()),
                                                         args[1].as_real());
                                }));

  // Light.dim(lights: set of int, ranges allowed)
  registry.register_command(
      CommandBuilder("LightService", "dim")
          .param("lights", TypeDescriptor::collection_of(TypeDescriptor::integer_number(),
                                                         /*allow_ranges=*/true))
          .handler([&state](const std::vector<Value>& args) {
            dim_collection(state, args[0], /*by_position=*/false);
          }));

  // Light.dim#2(lights: set of Position)
  registry.register_command(
      CommandBuilder("LightService", "dim")
          .param("lights", TypeDescriptor::collection_of(
                               TypeDescriptor::enumeration({"LEFT", "MIDDLE", "RIGHT"})))
          .handler([&state](const std::vector<Value>& args) {
            dim_collection(state, args[0], /*by_position=*/true);
          }));

  // Screen.set(screen, state)
  registry.register_command(
      CommandBuilder("ScreenService", "set")
          .param("screen", TypeDescriptor::integer_number())
          .param("state", TypeDescriptor::enumeration({"ON", "OFF"}))
          .synonym("set", {"turn"})
          .class_synonym("screen", {"display", "monitor"})
          .handler([&state](const std::vector<Value>& args) {
            auto it = state.screens.find(static_cast<int>(args[0].as_integer()));
            if (it == state.screens.end())
              throw std::out_of_range("no screen with number " +
                                      std::to_string(args[0].as_integer()));
            it->second = args[1].as_text() == "ON";
          }));

  // Speech.pronounce(sentence): a free string can only arrive through the
  // fallback pattern, so the provider stays empty.
  registry.register_command(
      CommandBuilder("SpeechService", "pronounce")
          .param("sentence",
                 TypeDescriptor::bounded_string([] { return std::vector<std::string>{}; }))
          .fallback("say (.*)")
          .handler([&state](const std::vector<Value>& args) {
            state.spoken.push_back(args[0].as_text());
          }));

  registry.freeze();
  return registry;
}

std::string state_to_json(const HomeState& state) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json lights = nlohmann::ordered_json::object();
  for (const auto& [id, light] : state.lights) {
    nlohmann::ordered_json entry;
    entry["power"] = light.on ? "on" : "off";
    entry["brightness"] = light.brightness;
    entry["color"] = {light.color[0], light.color[1], light.color[2]};
    lights[std::to_string(id)] = std::move(entry);
  }
  root["lights"] = std::move(lights);
  nlohmann::ordered_json named = nlohmann::ordered_json::object();
  for (const auto& [name, id] : state.named_lights) named[name] = id;
  root["named_lights"] = std::move(named);
  nlohmann::ordered_json screens = nlohmann::ordered_json::object();
  for (const auto& [id, on] : state.screens) screens[std::to_string(id)] = on ? "on" : "off";
  root["screens"] = std::move(screens);
  root["spoken"] = state.spoken;
  return root.dump(2);
}

}  // namespace voicecmd::demo
