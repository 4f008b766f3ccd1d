#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "voicecmd/registry.hpp"

namespace voicecmd::demo {

struct LightState {
  bool on = false;
  double brightness = 100.0;               // 0..100
  std::array<int, 3> color = {255, 255, 255};  // RGB
};

/// Observable state of the simulated home, mutated only by command handlers.
struct HomeState {
  std::map<int, LightState> lights;          // ten numbered lights by default
  std::map<std::string, int> named_lights;   // name -> light id (runtime-extendable)
  std::map<int, bool> screens;               // screen id -> power
  std::vector<std::string> spoken;           // append-only

  static HomeState with_defaults();
};

/// Brightness a light drops to when dimmed.
inline constexpr double kDimLevel = 20.0;

/// Light ids addressed by position.
int light_for_position(const std::string& position);

/// Registers the simulated Light / Screen / Speech services against the
/// given state and freezes the registry. The state must outlive it.
Registry build_demo_registry(HomeState& state, double threshold = Registry::kDefaultThreshold);

/// JSON dump with stable key order, for assertions and the REPL's :state.
std::string state_to_json(const HomeState& state);

}  // namespace voicecmd::demo
