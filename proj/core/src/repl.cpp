#include "voicecmd/repl.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <vector>

#include "voicecmd/engine.hpp"
#include "voicecmd/errors.hpp"
#include "voicecmd/text.hpp"

namespace voicecmd {

namespace {

std::string format_score2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::optional<size_t> parse_option_number(std::string_view line) {
  size_t out = 0;
  auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
  if (ec != std::errc() || ptr != line.data() + line.size()) return std::nullopt;
  return out;
}

void run_call(const Registry& registry, const ResolvedCall& call, std::ostream& out) {
  out << call.to_display_string() << " [score " << format_score2(call.score) << "]\n";
  try {
    execute(registry, call);
  } catch (const HandlerError& e) {
    out << "error: " << e.what() << "\n";
  }
}

}  // namespace

int run_repl(const Registry& registry, std::istream& in, std::ostream& out,
             const ReplOptions& options) {
  std::vector<ResolvedCall> pending_options;
  std::string line;
  out << "voicecmd - type a command sentence, :explain <sentence>, :state or :quit\n";
  while (true) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return in.bad() || out.bad() ? 1 : 0;
    }
    std::string input(trim(line));
    if (input.empty()) continue;

    try {
      if (input == ":quit") return out.bad() ? 1 : 0;
      if (input == ":state") {
        out << (options.state_dump ? options.state_dump() : "(no state attached)") << "\n";
        continue;
      }
      if (input.rfind(":explain", 0) == 0) {
        std::string sentence(trim(std::string_view(input).substr(8)));
        out << explain(registry, sentence).to_string();
        continue;
      }
      if (input[0] == ':') {
        out << "unknown command: " << input << "\n";
        continue;
      }

      if (!pending_options.empty()) {
        if (auto n = parse_option_number(input)) {
          if (*n >= 1 && *n <= pending_options.size()) {
            ResolvedCall chosen = pending_options[*n - 1];
            pending_options.clear();
            run_call(registry, chosen, out);
            continue;
          }
          out << "option out of range (1.." << pending_options.size() << ")\n";
          continue;
        }
        pending_options.clear();
      }

      ResolutionResult result = resolve(registry, input);
      for (const std::string& w : result.warnings) out << "warning: " << w << "\n";
      if (options.show_scores) {
        ExplainReport report = explain(registry, input);
        for (const CommandReport& rep : report.commands) {
          if (rep.eliminated) continue;
          out << "  " << rep.id << " score=" << format_score2(rep.score);
          if (rep.adjusted_score) out << " adjusted=" << format_score2(*rep.adjusted_score);
          out << "\n";
        }
      }
      switch (result.kind) {
        case ResolutionResult::Kind::resolved:
          run_call(registry, *result.call, out);
          break;
        case ResolutionResult::Kind::ambiguous: {
          out << "Ambiguous command. Options:\n";
          for (size_t i = 0; i < result.options.size(); ++i) {
            out << "  " << (i + 1) << ") " << result.options[i].to_display_string() << " [score "
                << format_score2(result.options[i].score) << "]\n";
          }
          out << "Enter a number to execute an option, or rephrase.\n";
          pending_options = result.options;
          break;
        }
        case ResolutionResult::Kind::no_match:
          out << "No match (best score " << format_score2(result.best_score);
          if (result.best_command) out << ": " << *result.best_command;
          out << "). Please reformulate.\n";
          break;
      }
    } catch (const std::exception& e) {
      out << "error: " << e.what() << "\n";
    }
    if (out.bad()) return 1;
  }
}

}  // namespace voicecmd
