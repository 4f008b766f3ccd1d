#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "voicecmd/corpus.hpp"
#include "voicecmd/demo_home.hpp"
#include "voicecmd/registry.hpp"
#include "voicecmd/repl.hpp"

namespace {

int run_eval(const voicecmd::Registry& registry, const std::string& corpus_path, bool as_json) {
  std::vector<voicecmd::CorpusEntry> corpus;
  try {
    corpus = voicecmd::load_corpus_file(corpus_path);
  } catch (const voicecmd::CorpusFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  voicecmd::CorpusReport report = voicecmd::evaluate_corpus(registry, corpus);
  std::cout << report.to_table();
  if (as_json) std::cout << report.to_json() << "\n";
  return report.all_correct() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voicecmd - maps natural-language command sentences to registered API calls,\n"
               "demonstrated on a simulated smart home"};

  double threshold = voicecmd::Registry::kDefaultThreshold;
  bool show_scores = false;
  app.add_option("--threshold", threshold, "Minimum similarity score, in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--show-scores", show_scores, "Print per-command scores after each input");

  CLI::App* repl_cmd = app.add_subcommand("repl", "Interactive sentence loop (default)");
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a JSONL golden corpus");
  std::string corpus_path;
  bool as_json = false;
  eval_cmd->add_option("--corpus", corpus_path, "Path to the JSONL corpus")->required();
  eval_cmd->add_flag("--json", as_json, "Also print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  voicecmd::demo::HomeState state = voicecmd::demo::HomeState::with_defaults();
  voicecmd::Registry registry = voicecmd::demo::build_demo_registry(state, threshold);

  if (eval_cmd->parsed()) return run_eval(registry, corpus_path, as_json);

  (void)repl_cmd;
  voicecmd::ReplOptions options;
  options.show_scores = show_scores;
  options.state_dump = [&state] { return voicecmd::demo::state_to_json(state); };
  return voicecmd::run_repl(registry, std::cin, std::cout, options);
}
