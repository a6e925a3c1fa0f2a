// Copyright 2026 The textdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exercises the textdp binary end to end: exit codes, byte determinism, and
// the documented stdout lines. Usage: cli_contract_test <cli-path> <scratch-dir>.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::filesystem::path g_scratch;
int g_failures = 0;

void Expect(bool condition, const std::string& what) {
  if (condition) {
    std::cout << "[ok] " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "[FAIL] " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

RunResult Run(const std::string& args) {
  const std::filesystem::path out_path = g_scratch / "cmd_stdout.txt";
  const std::filesystem::path err_path = g_scratch / "cmd_stderr.txt";
  std::string command =
      g_cli + " " + args + " >" + out_path.string() + " 2>" + err_path.string();
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  return result;
}

std::string Path(const std::string& name) { return (g_scratch / name).string(); }

// First column of a CoNLL file's first sentence, space-joined.
std::string ConllTokens(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::string tokens;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    if (!tokens.empty()) tokens += ' ';
    tokens += line.substr(0, line.find('\t'));
  }
  return tokens;
}

const char kReferenceConll[] =
    "Hi\tO\nMister\tO\nMiller\tB-PER\n,\tO\nthe\tO\nLufthansa\tB-ORG\nflight\tO\nfrom\tO\n"
    "Frankfurt\tB-LOC\nAirport\tI-LOC\nto\tO\nRome\tB-LOC\nis\tO\nleaving\tO\nby\tO\n"
    "six\tB-TIME\npm\tI-TIME\n\n";

void TestTransformPlaceholderRows() {
  WriteFile(Path("ref.conll"), kReferenceConll);

  RunResult redact = Run("transform --input " + Path("ref.conll") +
                         " --format conll --strategy redact --p 1 --seed 0 --output " +
                         Path("redact.conll") + " --log " + Path("redact.jsonl") + " --report " +
                         Path("redact.json"));
  Expect(redact.exit_code == 0, "transform redact exits 0");
  Expect(ConllTokens(Path("redact.conll")) ==
             "Hi Mister IIIII , the IIIII flight from IIIII to IIIII is leaving by IIIII",
         "redact row reproduced byte-for-byte");
  Expect(redact.out.find("overall_epsilon=0") != std::string::npos,
         "redact at p=1 reports epsilon 0");

  RunResult named = Run("transform --input " + Path("ref.conll") +
                        " --format conll --strategy named_placeholder --p 1 --seed 0"
                        " --exemplar PER=Smith --exemplar ORG=SAP --exemplar LOC=London"
                        " --exemplar TIME=afternoon --output " +
                        Path("named.conll") + " --log " + Path("named.jsonl") + " --report " +
                        Path("named.json"));
  Expect(named.exit_code == 0, "transform named_placeholder exits 0");
  Expect(ConllTokens(Path("named.conll")) ==
             "Hi Mister Smith , the SAP flight from London to London is leaving by afternoon",
         "named placeholder row reproduced byte-for-byte");
}

void TestTransformIdentityAtPZero() {
  RunResult result = Run("transform --input " + Path("ref.conll") +
                         " --format conll --strategy typed_placeholder --p 0 --seed 0 --output " +
                         Path("p0.conll") + " --log " + Path("p0.jsonl") + " --report " +
                         Path("p0.json"));
  Expect(result.exit_code == 0, "transform at p=0 exits 0");
  Expect(ReadFile(Path("p0.conll")) == kReferenceConll, "p=0 output is byte-identical to input");
  std::string report = ReadFile(Path("p0.json"));
  Expect(report.find("\"overall_epsilon\": \"inf\"") != std::string::npos,
         "p=0 report carries infinite epsilon");
  Expect(!ReadFile(Path("p0.jsonl")).empty(), "log written even at p=0");
}

void TestTransformDeterminism() {
  const std::string args = "transform --input " + Path("ref.conll") +
                           " --format conll --strategy word_by_word --policy corpus --p 0.6"
                           " --seed 7 --output ";
  RunResult first =
      Run(args + Path("wbw1.conll") + " --log " + Path("wbw1.jsonl") + " --report " +
          Path("wbw1.json"));
  RunResult second =
      Run(args + Path("wbw2.conll") + " --log " + Path("wbw2.jsonl") + " --report " +
          Path("wbw2.json"));
  Expect(first.exit_code == 0 && second.exit_code == 0, "word_by_word transforms exit 0");
  Expect(ReadFile(Path("wbw1.conll")) == ReadFile(Path("wbw2.conll")),
         "same seed gives byte-identical corpus");
  Expect(ReadFile(Path("wbw1.jsonl")) == ReadFile(Path("wbw2.jsonl")),
         "same seed gives byte-identical log");
  Expect(ReadFile(Path("wbw1.json")) == ReadFile(Path("wbw2.json")),
         "same seed gives byte-identical report");
  Expect(first.out == second.out, "same seed gives byte-identical stdout");

  RunResult other = Run("transform --input " + Path("ref.conll") +
                        " --format conll --strategy word_by_word --policy corpus --p 0.6"
                        " --seed 8 --output " +
                        Path("wbw3.conll") + " --log " + Path("wbw3.jsonl") + " --report " +
                        Path("wbw3.json"));
  Expect(other.exit_code == 0, "different seed exits 0");
  Expect(ReadFile(Path("wbw3.conll")) != ReadFile(Path("wbw1.conll")),
         "different seed changes the output");
}

void TestTransformRecallAnnotation() {
  RunResult result = Run("transform --input " + Path("ref.conll") +
                         " --format conll --strategy word_by_word --policy corpus --p 1"
                         " --recall 0.8 --seed 0 --output " +
                         Path("rec.conll") + " --log " + Path("rec.jsonl") + " --report " +
                         Path("rec.json"));
  Expect(result.exit_code == 0, "transform with recall exits 0");
  Expect(result.out.find("recall-adjusted") != std::string::npos,
         "recall adjustment announced on stdout");
  std::string report = ReadFile(Path("rec.json"));
  Expect(report.find("\"recall_adjusted\": true") != std::string::npos,
         "report marks recall_adjusted");
  Expect(report.find("\"configured_p\": 1.0") != std::string::npos,
         "report keeps the configured p");
}

void TestTransformLabeledFormat() {
  WriteFile(Path("labeled.jsonl"),
            R"({"label":"travel","spans":[{"category":"LOC","end":3,"start":2}],"text":"fly to Rome"})"
            "\n");
  RunResult result = Run("transform --input " + Path("labeled.jsonl") +
                         " --format labeled --strategy typed_placeholder --p 1 --seed 0"
                         " --output " +
                         Path("labeled_out.jsonl") + " --log " + Path("labeled_out_log.jsonl") +
                         " --report " + Path("labeled_out_rep.json"));
  Expect(result.exit_code == 0, "labeled transform exits 0");
  std::string out = ReadFile(Path("labeled_out.jsonl"));
  Expect(out.find("\"label\":\"travel\"") != std::string::npos, "label survives the transform");
  Expect(out.find("fly to LOC") != std::string::npos, "typed placeholder applied");
}

void TestEpsilonCommand() {
  WriteFile(Path("vocab.tsv"), "LOC\ta\nLOC\tb\nLOC\tc\nLOC\td\n");

  RunResult log5 = Run("epsilon --p 0.5 --vocab " + Path("vocab.tsv"));
  Expect(log5.exit_code == 0, "epsilon exits 0");
  Expect(log5.out.find("overall_epsilon=1.6094379124341003") != std::string::npos,
         "uniform K=4 at p=0.5 prints log 5");

  RunResult zero = Run("epsilon --p 1 --vocab " + Path("vocab.tsv"));
  Expect(zero.out.find("overall_epsilon=0\n") != std::string::npos, "p=1 prints epsilon 0");

  RunResult inverse = Run("epsilon --p 0.9 --target-eps 6.75");
  Expect(inverse.out.find("required_min_mass=0.00013025") != std::string::npos,
         "target-eps prints the required mass near 1.3026e-4");

  RunResult bad = Run("epsilon --p 1.5 --vocab " + Path("vocab.tsv"));
  Expect(bad.exit_code == 1, "invalid p exits 1");
}

void TestVerifyCommand() {
  RunResult ok = Run("verify");
  Expect(ok.exit_code == 0, "verify default grid exits 0");
  Expect(ok.out.find("all checks passed") != std::string::npos, "verify prints the summary");
  Expect(ok.out.find("K=4 p=1 theoretical=0 empirical=0 status=pass") != std::string::npos,
         "verify p=1 row is exactly zero");

  RunResult injected = Run("verify --inject-error");
  Expect(injected.exit_code == 1, "injected error exits 1");
  Expect(injected.out.find("FAIL") != std::string::npos, "injected error prints FAIL rows");

  RunResult oversize = Run("verify --k-grid 800");
  Expect(oversize.exit_code == 1, "oversize grid refused with exit 1");
}

void TestGenSynthAndEvaluate() {
  const std::string gen = "gen-synth --train-out " + Path("train.jsonl") + " --test-out " +
                          Path("test.jsonl") +
                          " --train-sentences 300 --test-sentences 100 --seed 5";
  RunResult first = Run(gen);
  Expect(first.exit_code == 0, "gen-synth exits 0");
  std::string train_bytes = ReadFile(Path("train.jsonl"));
  RunResult second = Run(gen);
  Expect(second.exit_code == 0 && ReadFile(Path("train.jsonl")) == train_bytes,
         "gen-synth is byte-deterministic");

  RunResult evaluate = Run("evaluate --train " + Path("train.jsonl") + " --test " +
                           Path("test.jsonl") + " --task classification");
  Expect(evaluate.exit_code == 0, "evaluate exits 0");
  Expect(evaluate.out.rfind("accuracy=", 0) == 0, "evaluate prints the accuracy first");

  RunResult tagging = Run("evaluate --train " + Path("train.jsonl") + " --test " +
                          Path("test.jsonl") + " --task tagging");
  Expect(tagging.out.rfind("entity_f1=", 0) == 0, "evaluate prints the tagging metric first");
}

void TestSweepCommand() {
  const std::string args = "sweep --train " + Path("train.jsonl") + " --test " +
                           Path("test.jsonl") +
                           " --strategies word_by_word --p-grid 0.5,1.0 --seeds 0"
                           " --tasks tagging --output ";
  RunResult first = Run(args + Path("sweep1.csv"));
  Expect(first.exit_code == 0, "sweep exits 0");
  std::string csv = ReadFile(Path("sweep1.csv"));
  Expect(csv.rfind("p,epsilon,strategy,task,metric,value,seed\n", 0) == 0,
         "sweep CSV starts with the documented header");

  RunResult second = Run(args + Path("sweep2.csv"));
  Expect(second.exit_code == 0 && ReadFile(Path("sweep2.csv")) == csv,
         "sweep is byte-deterministic");

  Expect(csv.find("\n1,0,word_by_word") != std::string::npos, "sweep epsilon is 0 at p=1");
}

void TestErrorExitCodes() {
  RunResult missing = Run("transform --input " + Path("no-such-file.conll") +
                          " --format conll --strategy redact --p 1 --seed 0 --output " +
                          Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                          Path("x.json"));
  Expect(missing.exit_code == 2, "missing input exits 2");
  Expect(missing.err.find("no-such-file.conll") != std::string::npos,
         "error message names the file");

  WriteFile(Path("broken.conll"), "good\tO\nbroken-line\n\n");
  RunResult malformed = Run("transform --input " + Path("broken.conll") +
                            " --format conll --strategy redact --p 1 --seed 0 --output " +
                            Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                            Path("x.json"));
  Expect(malformed.exit_code == 2, "malformed input exits 2");
  Expect(malformed.err.find("line 2") != std::string::npos, "parse error names the line");

  RunResult bad_p = Run("transform --input " + Path("ref.conll") +
                        " --format conll --strategy redact --p 1.5 --seed 0 --output " +
                        Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                        Path("x.json"));
  Expect(bad_p.exit_code == 1, "out-of-range p exits 1");

  RunResult bad_strategy = Run("transform --input " + Path("ref.conll") +
                               " --format conll --strategy shred --p 1 --seed 0 --output " +
                               Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                               Path("x.json"));
  Expect(bad_strategy.exit_code == 1, "unknown strategy exits 1");

  RunResult no_exemplars = Run("transform --input " + Path("ref.conll") +
                               " --format conll --strategy named_placeholder --p 1 --seed 0"
                               " --output " +
                               Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                               Path("x.json"));
  Expect(no_exemplars.exit_code == 1, "named placeholder without exemplars exits 1");

  RunResult bad_consistent = Run("transform --input " + Path("ref.conll") +
                                 " --format conll --strategy word_by_word --policy corpus"
                                 " --consistent --p 1 --seed 0 --output " +
                                 Path("x.conll") + " --log " + Path("x.jsonl") + " --report " +
                                 Path("x.json"));
  Expect(bad_consistent.exit_code == 1, "consistent mapping outside full_entity exits 1");

  RunResult no_args = Run("");
  Expect(no_args.exit_code == 1, "missing subcommand exits 1");

  RunResult help = Run("--help");
  Expect(help.exit_code == 0, "help exits 0");
  Expect(help.out.find("transform") != std::string::npos, "help lists subcommands");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_contract_test <cli-path> <scratch-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_scratch = argv[2];
  std::filesystem::create_directories(g_scratch);

  TestTransformPlaceholderRows();
  TestTransformIdentityAtPZero();
  TestTransformDeterminism();
  TestTransformRecallAnnotation();
  TestTransformLabeledFormat();
  TestEpsilonCommand();
  TestVerifyCommand();
  TestGenSynthAndEvaluate();
  TestSweepCommand();
  TestErrorExitCodes();

  if (g_failures > 0) {
    std::cout << g_failures << " contract check(s) failed\n";
    return 1;
  }
  std::cout << "all contract checks passed\n";
  return 0;
}
