#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command, capturing stdout+stderr.
RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string cli_path() {
  const char* env = std::getenv("VOICECMD_BIN");
  return env ? env : "./tools/voicecmd";
}

std::string corpus_path() {
  const char* env = std::getenv("VOICECMD_CORPUS");
  return env ? env : "../data/golden_corpus.jsonl";
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "cli_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("eval exits 0 on a fully correct corpus") {
  RunResult r = run(cli_path() + " eval --corpus " + shell_quote(corpus_path()));
  CHECK_MESSAGE(r.exit_code == 0, r.output);
  CHECK(r.output.find("accuracy: 23/23 = 1.000000") != std::string::npos);
}

TEST_CASE("eval exits 1 when an expectation fails") {
  std::string path = temp_file(
      "wrong.jsonl",
      "{\"sentence\": \"turn on light\", \"expected\": {\"command\": \"Light.turnOff\"}}\n");
  RunResult r = run(cli_path() + " eval --corpus " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("WRONG") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("eval exits 2 on malformed input, naming the line") {
  std::string path = temp_file("broken.jsonl",
                               "{\"sentence\": \"turn on light\", \"expected\": \"no_match\"}\n"
                               "this is not json\n");
  RunResult r = run(cli_path() + " eval --corpus " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 2") != std::string::npos);
  std::remove(path.c_str());

  RunResult missing = run(cli_path() + " eval --corpus does_not_exist.jsonl");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("eval --json is byte-identical across runs") {
  std::string cmd = cli_path() + " eval --json --corpus " + shell_quote(corpus_path());
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("repl resolves, executes and reports state") {
  std::string script = temp_file("repl_session.txt",
                                 "turn on light\n"
                                 "turn on light number 2\n"
                                 "set brightness of light number 2 to 30\n"
                                 ":state\n"
                                 "light\n"
                                 "1\n"
                                 "recalibrate flux\n"
                                 ":quit\n");
  RunResult r = run(cli_path() + " repl < " + script);
  CHECK_MESSAGE(r.exit_code == 0, r.output);
  CHECK(r.output.find("Light.turnOn() [score 1.00]") != std::string::npos);
  CHECK(r.output.find("Light.turnOn#2(2) [score 1.00]") != std::string::npos);
  CHECK(r.output.find("Light.setBrightness(2, 30) [score 0.60]") != std::string::npos);
  CHECK(r.output.find("\"power\": \"on\"") != std::string::npos);
  CHECK(r.output.find("\"brightness\": 30.0") != std::string::npos);
  CHECK(r.output.find("Ambiguous command") != std::string::npos);
  CHECK(r.output.find("1) Light.turnOn()") != std::string::npos);
  CHECK(r.output.find("Please reformulate") != std::string::npos);
  std::remove(script.c_str());
}

TEST_CASE("repl --show-scores prints the per-command score table") {
  std::string script = temp_file("repl_scores.txt",
                                 "turn on light\n"
                                 ":quit\n");
  RunResult r = run(cli_path() + " --show-scores repl < " + script);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Light.turnOn score=1.00") != std::string::npos);
  CHECK(r.output.find("Light.turnOff score=0.50") != std::string::npos);
  std::remove(script.c_str());
}

TEST_CASE("eval of an empty corpus warns and exits 0") {
  std::string path = temp_file("empty.jsonl", "");
  RunResult r = run(cli_path() + " eval --corpus " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("warning") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("repl :explain prints the diagnostic report") {
  std::string script = temp_file("repl_explain.txt",
                                 ":explain say 'hi there'\n"
                                 ":quit\n");
  RunResult r = run(cli_path() + " repl < " + script);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("similarity pipeline: not consulted") != std::string::npos);
  std::remove(script.c_str());
}

TEST_CASE("repl --threshold is honored") {
  std::string script = temp_file("repl_threshold.txt",
                                 "please turn on the light\n"
                                 ":quit\n");
  RunResult r = run(cli_path() + " --threshold 1.0 repl < " + script);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Please reformulate") != std::string::npos);
  std::remove(script.c_str());
}

TEST_CASE("repl survives arbitrary input") {
  std::mt19937 rng(13);
  std::string session;
  for (int i = 0; i < 200; ++i) {
    size_t len = rng() % 40;
    std::string line;
    for (size_t k = 0; k < len; ++k) {
      char c = static_cast<char>(32 + rng() % 95);
      line += c;
    }
    session += line + "\n";
  }
  session += ":quit\n";
  std::string script = temp_file("repl_fuzz.txt", session);
  RunResult r = run(cli_path() + " repl < " + script);
  CHECK_MESSAGE(r.exit_code == 0, r.output.substr(0, 2000));
  std::remove(script.c_str());
}
