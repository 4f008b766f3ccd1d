#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "voicecmd/registry.hpp"

namespace voicecmd {

struct ReplOptions {
  bool show_scores = false;
  /// Callback for the :state command; omitted -> :state reports nothing.
  std::function<std::string()> state_dump;
};

/// Line-oriented loop: resolves and executes each sentence, prints numbered
/// options on ambiguity (a number input executes that option), understands
/// :state, :explain <sentence> and :quit. Returns the process exit status
/// (0 on :quit or end of input, 1 on stream failure).
int run_repl(const Registry& registry, std::istream& in, std::ostream& out,
             const ReplOptions& options = {});

}  // namespace voicecmd
