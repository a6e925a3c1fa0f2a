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
// textdp: batch de-identification with exact differential privacy accounting.
//
// Exit codes: 0 success, 1 verification or validation failure, 2 I/O or
// parse error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "textdp/corpus.h"
#include "textdp/mechanism.h"
#include "textdp/metrics.h"
#include "textdp/model.h"
#include "textdp/policy.h"
#include "textdp/privacy.h"
#include "textdp/strings.h"
#include "textdp/sweep.h"
#include "textdp/synth.h"

namespace {

using textdp::Corpus;
using textdp::EntityCategory;
using textdp::FormatDouble;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIoError = 2;

// Distinguishes file-system and parse problems (exit 2) from validation
// failures (exit 1, via std::invalid_argument).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  return in;
}

void WriteFileOrThrow(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << content;
  if (!out) throw IoError(path + ": write failed");
}

void CheckFormat(const std::string& format) {
  if (format != "conll" && format != "labeled") {
    throw std::invalid_argument("format must be conll or labeled, got \"" + format + "\"");
  }
}

Corpus LoadCorpus(const std::string& path, const std::string& format) {
  CheckFormat(format);
  std::ifstream in = OpenOrThrow(path);
  try {
    if (format == "conll") {
      std::vector<textdp::ParseWarning> warnings;
      Corpus corpus = textdp::ParseConll(in, &warnings, path);
      for (const textdp::ParseWarning& warning : warnings) {
        std::cerr << "warning: " << path << ":" << warning.line << ": " << warning.message
                  << "\n";
      }
      return corpus;
    }
    return textdp::ParseLabeled(in, path);
  } catch (const textdp::ParseError& error) {
    throw IoError(path + ": " + error.what());
  }
}

std::string SerializeCorpus(const Corpus& corpus, const std::string& format) {
  return format == "conll" ? textdp::WriteConll(corpus) : textdp::WriteLabeled(corpus);
}

std::vector<double> ParseDoubleList(const std::vector<std::string>& items, const char* what) {
  std::vector<double> out;
  for (const std::string& item : items) {
    try {
      std::size_t consumed = 0;
      double value = std::stod(item, &consumed);
      if (consumed != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + " value \"" + item + "\" is not a number");
    }
  }
  return out;
}

std::vector<std::uint64_t> ParseSeedList(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : items) {
    try {
      std::size_t consumed = 0;
      unsigned long long value = std::stoull(item, &consumed);
      if (consumed != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("seed \"" + item + "\" is not an unsigned integer");
    }
  }
  return out;
}

// "PER=Smith" pairs from repeated --exemplar flags.
std::map<EntityCategory, std::string> ParseExemplars(const std::vector<std::string>& items) {
  std::map<EntityCategory, std::string> exemplars;
  for (const std::string& item : items) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("exemplar \"" + item + "\" is not CATEGORY=token");
    }
    EntityCategory category(item.substr(0, eq));
    auto [it, inserted] = exemplars.emplace(category, item.substr(eq + 1));
    if (!inserted) {
      throw std::invalid_argument("duplicate exemplar for category " + category.name());
    }
  }
  return exemplars;
}

std::vector<EntityCategory> CorpusCategories(const Corpus& corpus) {
  textdp::CategoryLexicon lexicon = textdp::BuildCategoryLexicon(corpus, textdp::Granularity::kEntity);
  std::vector<EntityCategory> categories;
  for (const auto& [category, table] : lexicon.counts) categories.push_back(category);
  if (categories.empty()) {
    throw std::invalid_argument("corpus has no entity spans; nothing to replace");
  }
  return categories;
}

// --- transform ---------------------------------------------------------------

struct TransformConfig {
  std::string input;
  std::string format = "conll";
  std::string strategy;
  double p = 1.0;
  std::string policy_source = "corpus";
  std::string gazetteer;
  std::vector<std::string> exemplars;
  std::string placeholder = textdp::kRedactPlaceholder;
  bool consistent = false;
  std::uint64_t seed = 0;
  std::optional<double> recall;
  std::string output;
  std::string log;
  std::string report;
};

textdp::ReplacementPolicy BuildSourcedPolicy(const TransformConfig& config, const Corpus& corpus,
                                             textdp::Granularity granularity) {
  if (config.policy_source == "corpus") {
    return textdp::FrequencyPolicy(textdp::BuildCategoryLexicon(corpus, granularity));
  }
  if (config.policy_source == "uniform") {
    return textdp::UniformPolicy(
        textdp::VocabularyFromLexicon(textdp::BuildCategoryLexicon(corpus, granularity)));
  }
  if (config.policy_source == "gazetteer") {
    if (config.gazetteer.empty()) {
      throw std::invalid_argument("--policy gazetteer needs --gazetteer FILE");
    }
    std::ifstream in = OpenOrThrow(config.gazetteer);
    try {
      return textdp::GazetteerPolicy(in);
    } catch (const textdp::ParseError& error) {
      throw IoError(config.gazetteer + ": " + error.what());
    }
  }
  throw std::invalid_argument("policy source must be corpus, uniform or gazetteer, got \"" +
                              config.policy_source + "\"");
}

textdp::ReplacementStrategy BuildStrategy(const TransformConfig& config, const Corpus& corpus) {
  textdp::StrategyName name = textdp::StrategyNameFromString(config.strategy);
  switch (name) {
    case textdp::StrategyName::kNoReplacement:
      return textdp::NoReplacementStrategy();
    case textdp::StrategyName::kRedact:
      return textdp::RedactStrategy(config.p, CorpusCategories(corpus), config.placeholder);
    case textdp::StrategyName::kTypedPlaceholder:
      return textdp::TypedPlaceholderStrategy(config.p, CorpusCategories(corpus));
    case textdp::StrategyName::kNamedPlaceholder: {
      if (config.exemplars.empty()) {
        throw std::invalid_argument("named_placeholder needs at least one --exemplar CAT=token");
      }
      return textdp::NamedPlaceholderStrategy(config.p, ParseExemplars(config.exemplars));
    }
    case textdp::StrategyName::kWordByWord:
      return textdp::WordByWordStrategy(
          config.p, BuildSourcedPolicy(config, corpus, textdp::Granularity::kWord));
    case textdp::StrategyName::kFullEntity:
      return textdp::FullEntityStrategy(
          config.p, BuildSourcedPolicy(config, corpus, textdp::Granularity::kEntity),
          config.consistent);
  }
  throw std::invalid_argument("unknown strategy \"" + config.strategy + "\"");
}

int RunTransform(const TransformConfig& config) {
  Corpus corpus = LoadCorpus(config.input, config.format);
  textdp::ReplacementStrategy strategy = BuildStrategy(config, corpus);
  if (config.consistent && strategy.name != textdp::StrategyName::kFullEntity) {
    throw std::invalid_argument("--consistent is only available for full_entity");
  }

  textdp::TransformResult result = textdp::TransformCorpus(corpus, strategy, config.seed);
  textdp::PrivacyReport report = config.recall.has_value()
                                     ? textdp::AdjustForRecall(result.report, *config.recall)
                                     : result.report;

  WriteFileOrThrow(config.output, SerializeCorpus(result.corpus, config.format));
  WriteFileOrThrow(config.log, textdp::WriteLog(result.log));
  WriteFileOrThrow(config.report, textdp::WriteReport(report));

  std::cout << "sentences=" << result.corpus.sentences.size() << " units=" << result.log.size()
            << " overall_epsilon=" << FormatDouble(report.overall_epsilon) << "\n";
  if (report.recall_adjusted) {
    std::cout << "recall-adjusted: configured_p="
              << FormatDouble(report.configured_p.value_or(report.p))
              << " recall=" << FormatDouble(report.recall.value_or(1)) << " effective_p="
              << FormatDouble(report.p) << "\n";
  }
  return kExitSuccess;
}

// --- epsilon -----------------------------------------------------------------

struct EpsilonConfig {
  double p = 0;
  std::string policy_source = "uniform";
  std::string gazetteer;
  std::string vocab;
  std::string corpus_path;
  std::string format = "conll";
  std::string granularity = "word";
  std::optional<double> target_eps;
  std::optional<double> recall;
};

textdp::Granularity ParseGranularity(const std::string& text) {
  if (text == "word") return textdp::Granularity::kWord;
  if (text == "entity") return textdp::Granularity::kEntity;
  throw std::invalid_argument("granularity must be word or entity, got \"" + text + "\"");
}

// Vocabulary file: one `category<TAB>token` line per private token.
textdp::PrivateVocabulary ParseVocabFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  textdp::PrivateVocabulary vocab;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = textdp::SplitChar(line, '\t');
    if (fields.size() != 2) {
      throw IoError(path + ": line " + std::to_string(line_number) +
                    ": expected category<TAB>token");
    }
    try {
      vocab.forms[EntityCategory(fields[0])].insert(fields[1]);
    } catch (const std::invalid_argument& error) {
      throw IoError(path + ": line " + std::to_string(line_number) + ": " + error.what());
    }
  }
  if (vocab.forms.empty()) throw IoError(path + ": vocabulary file contains no entries");
  return vocab;
}

int RunEpsilon(const EpsilonConfig& config) {
  if (config.target_eps.has_value()) {
    double mass = textdp::MinPolicyMassForEpsilon(config.p, *config.target_eps);
    std::cout << "required_min_mass=" << FormatDouble(mass) << "\n";
    if (mass > 1.0) {
      std::cerr << "warning: no policy reaches epsilon=" << FormatDouble(*config.target_eps)
                << " at p=" << FormatDouble(config.p)
                << "; the floor at this p is log(1/p)=" << FormatDouble(std::log(1.0 / config.p))
                << "\n";
    }
  }

  const bool have_vocab = !config.vocab.empty() || !config.corpus_path.empty();
  if (!have_vocab) {
    if (!config.target_eps.has_value()) {
      throw std::invalid_argument("nothing to compute: give --vocab or --corpus, or --target-eps");
    }
    return kExitSuccess;
  }

  textdp::Granularity granularity = ParseGranularity(config.granularity);
  std::optional<Corpus> corpus;
  if (!config.corpus_path.empty()) {
    corpus = LoadCorpus(config.corpus_path, config.format);
  }

  textdp::PrivateVocabulary vocab;
  if (!config.vocab.empty()) {
    vocab = ParseVocabFile(config.vocab);
  } else {
    vocab = textdp::VocabularyFromLexicon(textdp::BuildCategoryLexicon(*corpus, granularity));
    if (vocab.forms.empty()) throw std::invalid_argument("corpus has no entity spans");
  }

  textdp::ReplacementPolicy policy = textdp::ReplacementPolicy::Empty();
  if (config.policy_source == "uniform") {
    policy = textdp::UniformPolicy(vocab);
  } else if (config.policy_source == "corpus") {
    if (!corpus.has_value()) {
      throw std::invalid_argument("--policy corpus needs --corpus FILE");
    }
    policy = textdp::FrequencyPolicy(textdp::BuildCategoryLexicon(*corpus, granularity));
  } else if (config.policy_source == "gazetteer") {
    if (config.gazetteer.empty()) {
      throw std::invalid_argument("--policy gazetteer needs --gazetteer FILE");
    }
    std::ifstream in = OpenOrThrow(config.gazetteer);
    try {
      policy = textdp::GazetteerPolicy(in);
    } catch (const textdp::ParseError& error) {
      throw IoError(config.gazetteer + ": " + error.what());
    }
  } else {
    throw std::invalid_argument("policy source must be uniform, corpus or gazetteer, got \"" +
                                config.policy_source + "\"");
  }

  double p = config.p;
  if (config.recall.has_value()) {
    p = textdp::EffectiveP(config.p, *config.recall);
    std::cout << "recall-adjusted: configured_p=" << FormatDouble(config.p)
              << " recall=" << FormatDouble(*config.recall)
              << " effective_p=" << FormatDouble(p) << "\n";
  }

  double overall = 0;
  for (const auto& [category, forms] : vocab.forms) {
    double min_mass = textdp::MinMass(policy, vocab, category);
    double epsilon = textdp::Epsilon(p, min_mass);
    overall = std::max(overall, epsilon);
    std::cout << "category=" << category.name() << " min_mass=" << FormatDouble(min_mass)
              << " epsilon=" << FormatDouble(epsilon) << "\n";
  }
  std::cout << "overall_epsilon=" << FormatDouble(overall) << "\n";
  return kExitSuccess;
}

// --- verify ------------------------------------------------------------------

struct VerifyConfig {
  std::vector<std::string> p_grid = {"0.25", "0.5", "0.9", "1.0"};
  std::vector<std::string> k_grid = {"2", "4", "16"};
  bool inject_error = false;
};

int RunVerify(const VerifyConfig& config) {
  std::vector<double> p_grid = ParseDoubleList(config.p_grid, "p grid");
  std::vector<double> k_values = ParseDoubleList(config.k_grid, "K grid");
  if (p_grid.size() > 64 || k_values.size() > 64) {
    throw std::invalid_argument("verification grid refused: more than 64 values per axis");
  }

  const EntityCategory category("CAT");
  std::size_t failures = 0;
  for (double k_value : k_values) {
    const auto k = static_cast<std::size_t>(k_value);
    if (k_value != static_cast<double>(k) || k < 2 || k > 400) {
      throw std::invalid_argument("K must be an integer in [2, 400], got " +
                                  FormatDouble(k_value));
    }
    textdp::PrivateVocabulary vocab;
    for (std::size_t i = 0; i < k; ++i) {
      vocab.forms[category].insert("t" + std::to_string(1000 + i));
    }
    textdp::ReplacementPolicy policy = textdp::UniformPolicy(vocab);
    for (double p : p_grid) {
      textdp::BoundCheck check = textdp::VerifyBound(p, policy, vocab, category);
      if (config.inject_error) {
        // Negative-control hook: bias the closed form and re-judge, so the
        // comparison machinery itself is exercised.
        check.theoretical += 0.125;
        check.pass = std::isinf(check.theoretical) == std::isinf(check.empirical) &&
                     (std::isinf(check.theoretical) ||
                      std::fabs(check.theoretical - check.empirical) <= 1e-9);
      }
      if (!check.pass) ++failures;
      std::cout << "K=" << k << " p=" << FormatDouble(p)
                << " theoretical=" << FormatDouble(check.theoretical)
                << " empirical=" << FormatDouble(check.empirical)
                << " status=" << (check.pass ? "pass" : "FAIL") << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " check(s) failed\n";
    return kExitFailure;
  }
  std::cout << "all checks passed\n";
  return kExitSuccess;
}

// --- sweep -------------------------------------------------------------------

struct SweepCliConfig {
  std::string train;
  std::string test;
  std::string format = "labeled";
  std::vector<std::string> strategies = {"redact", "typed_placeholder", "named_placeholder",
                                         "word_by_word", "full_entity"};
  std::vector<std::string> p_grid = {"0.25", "0.5", "0.75", "1.0"};
  std::vector<std::string> seeds;
  std::uint64_t num_seeds = 10;
  std::vector<std::string> tasks;
  std::string output;
};

int RunSweep(const SweepCliConfig& config) {
  Corpus train = LoadCorpus(config.train, config.format);
  Corpus test = LoadCorpus(config.test, config.format);

  textdp::SweepConfig sweep;
  for (const std::string& name : config.strategies) {
    sweep.strategies.push_back(textdp::StrategyNameFromString(name));
  }
  sweep.p_grid = ParseDoubleList(config.p_grid, "p grid");
  sweep.seeds = config.seeds.empty() ? std::vector<std::uint64_t>() : ParseSeedList(config.seeds);
  if (sweep.seeds.empty()) {
    if (config.num_seeds == 0) throw std::invalid_argument("--num-seeds must be positive");
    for (std::uint64_t seed = 0; seed < config.num_seeds; ++seed) sweep.seeds.push_back(seed);
  }
  if (!config.tasks.empty()) {
    sweep.tasks = config.tasks;
  } else if (config.format == "conll") {
    sweep.tasks = {textdp::kTaskTagging};
  } else {
    sweep.tasks = {textdp::kTaskClassification, textdp::kTaskTagging};
  }

  std::string csv = textdp::WriteSweepCsv(textdp::Sweep(train, test, sweep));
  if (config.output.empty()) {
    std::cout << csv;
  } else {
    WriteFileOrThrow(config.output, csv);
    std::cout << "wrote " << config.output << "\n";
  }
  return kExitSuccess;
}

// --- evaluate ----------------------------------------------------------------

struct EvaluateConfig {
  std::string train;
  std::string test;
  std::string format = "labeled";
  std::string task = textdp::kTaskTagging;
};

int RunEvaluate(const EvaluateConfig& config) {
  Corpus train = LoadCorpus(config.train, config.format);
  Corpus test = LoadCorpus(config.test, config.format);

  textdp::EvalMetrics metrics;
  if (config.task == textdp::kTaskClassification) {
    metrics = textdp::EvaluateClassifier(textdp::SentenceClassifier::Train(train), test);
    std::cout << "accuracy=" << FormatDouble(metrics.accuracy) << "\n";
  } else if (config.task == textdp::kTaskTagging) {
    metrics = textdp::EvaluateTagger(textdp::TokenTagger::Train(train), test);
    std::cout << "entity_f1=" << FormatDouble(metrics.entity_f1) << "\n";
  } else {
    throw std::invalid_argument("task must be classification or tagging, got \"" + config.task +
                                "\"");
  }
  for (const auto& [name, cls] : metrics.per_class) {
    std::cout << "class=" << name << " precision=" << FormatDouble(cls.precision)
              << " recall=" << FormatDouble(cls.recall) << " f1=" << FormatDouble(cls.f1)
              << " support=" << cls.support << "\n";
  }
  return kExitSuccess;
}

// --- gen-synth ---------------------------------------------------------------

struct GenSynthConfig {
  std::string train_out;
  std::string test_out;
  std::string format = "labeled";
  std::uint64_t seed = 0;
  std::size_t train_sentences = 0;
  std::size_t test_sentences = 0;
  std::size_t lexicon_size = 0;
  std::size_t filler_vocabulary = 0;
};

int RunGenSynth(const GenSynthConfig& config) {
  CheckFormat(config.format);
  textdp::SynthSpec spec = textdp::DefaultSynthSpec();
  if (config.train_sentences > 0) spec.train_sentences = config.train_sentences;
  if (config.test_sentences > 0) spec.test_sentences = config.test_sentences;
  if (config.filler_vocabulary > 0) spec.filler_vocabulary = config.filler_vocabulary;
  if (config.lexicon_size > 0) {
    for (auto& [category, size] : spec.lexicon_sizes) size = config.lexicon_size;
  }

  textdp::SynthCorpora corpora = textdp::GenSyntheticCorpus(spec, config.seed);
  if (config.format == "conll") {
    std::cerr << "note: conll output keeps spans but drops sentence labels\n";
  }
  WriteFileOrThrow(config.train_out, SerializeCorpus(corpora.train, config.format));
  WriteFileOrThrow(config.test_out, SerializeCorpus(corpora.test, config.format));
  std::cout << "train_sentences=" << corpora.train.sentences.size()
            << " test_sentences=" << corpora.test.sentences.size() << "\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  int result = kExitSuccess;
  CLI::App app{"Text de-identification with differential privacy accounting"};
  app.require_subcommand(1);

  TransformConfig transform;
  CLI::App* cmd = app.add_subcommand("transform", "Replace annotated entities in a corpus");
  cmd->add_option("--input", transform.input, "Input corpus file")->required();
  cmd->add_option("--format", transform.format, "Corpus format: conll or labeled")
      ->capture_default_str();
  cmd->add_option("--strategy", transform.strategy,
                  "Strategy: no_replacement, redact, typed_placeholder, named_placeholder, "
                  "word_by_word or full_entity")
      ->required();
  cmd->add_option("--p", transform.p, "Replacement probability in [0,1]")->capture_default_str();
  cmd->add_option("--policy", transform.policy_source,
                  "Policy source for word_by_word/full_entity: corpus, uniform or gazetteer")
      ->capture_default_str();
  cmd->add_option("--gazetteer", transform.gazetteer,
                  "Gazetteer file (category<TAB>token<TAB>weight)");
  cmd->add_option("--exemplar", transform.exemplars,
                  "Exemplar CATEGORY=token for named_placeholder (repeatable)");
  cmd->add_option("--placeholder", transform.placeholder, "Redaction placeholder token")
      ->capture_default_str();
  cmd->add_flag("--consistent", transform.consistent,
                "Reuse one surrogate per original (full_entity only; voids the guarantee)");
  cmd->add_option("--seed", transform.seed, "Master random seed")->capture_default_str();
  cmd->add_option("--recall", transform.recall,
                  "Identifier recall in [0,1]; reports effective p = recall * p");
  cmd->add_option("--output", transform.output, "Transformed corpus path")->required();
  cmd->add_option("--log", transform.log, "Transformation log path (JSONL)")->required();
  cmd->add_option("--report", transform.report, "Privacy report path (JSON)")->required();
  cmd->callback([&result, &transform]() { result = RunTransform(transform); });

  EpsilonConfig epsilon;
  cmd = app.add_subcommand("epsilon", "Closed-form epsilon for a policy and vocabulary");
  cmd->add_option("--p", epsilon.p, "Replacement probability in [0,1]")->required();
  cmd->add_option("--policy", epsilon.policy_source,
                  "Policy source: uniform, corpus or gazetteer")
      ->capture_default_str();
  cmd->add_option("--gazetteer", epsilon.gazetteer,
                  "Gazetteer file (category<TAB>token<TAB>weight)");
  cmd->add_option("--vocab", epsilon.vocab, "Vocabulary file (category<TAB>token lines)");
  cmd->add_option("--corpus", epsilon.corpus_path, "Corpus file giving the private vocabulary");
  cmd->add_option("--format", epsilon.format, "Corpus format: conll or labeled")
      ->capture_default_str();
  cmd->add_option("--granularity", epsilon.granularity,
                  "Vocabulary granularity from a corpus: word or entity")
      ->capture_default_str();
  cmd->add_option("--target-eps", epsilon.target_eps,
                  "Also print the minimum per-token policy mass achieving this epsilon");
  cmd->add_option("--recall", epsilon.recall,
                  "Identifier recall in [0,1]; computes epsilon at effective p");
  cmd->callback([&result, &epsilon]() { result = RunEpsilon(epsilon); });

  VerifyConfig verify;
  cmd = app.add_subcommand("verify",
                           "Check the closed-form epsilon against exhaustive enumeration");
  cmd->add_option("--p-grid", verify.p_grid, "Comma-separated p values (repeatable)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--k-grid", verify.k_grid, "Vocabulary sizes to check (repeatable)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_flag("--inject-error", verify.inject_error, "Bias the closed form (negative control)")
      ->group("");
  cmd->callback([&result, &verify]() { result = RunVerify(verify); });

  SweepCliConfig sweep;
  cmd = app.add_subcommand("sweep", "Privacy/utility grid over p, strategies and seeds");
  cmd->add_option("--train", sweep.train, "Training corpus file")->required();
  cmd->add_option("--test", sweep.test, "Test corpus file (never transformed)")->required();
  cmd->add_option("--format", sweep.format, "Corpus format: conll or labeled")
      ->capture_default_str();
  cmd->add_option("--strategies", sweep.strategies, "Strategies to sweep")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--p-grid", sweep.p_grid, "Replacement probabilities to sweep")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--seeds", sweep.seeds, "Explicit master seeds (overrides --num-seeds)")
      ->delimiter(',');
  cmd->add_option("--num-seeds", sweep.num_seeds, "Number of seeds 0..N-1")
      ->capture_default_str();
  cmd->add_option("--tasks", sweep.tasks,
                  "Tasks: classification and/or tagging (default depends on format)")
      ->delimiter(',');
  cmd->add_option("--output", sweep.output, "CSV output path (stdout when omitted)");
  cmd->callback([&result, &sweep]() { result = RunSweep(sweep); });

  EvaluateConfig evaluate;
  cmd = app.add_subcommand("evaluate", "Train on one corpus, score on another");
  cmd->add_option("--train", evaluate.train, "Training corpus file")->required();
  cmd->add_option("--test", evaluate.test, "Test corpus file")->required();
  cmd->add_option("--format", evaluate.format, "Corpus format: conll or labeled")
      ->capture_default_str();
  cmd->add_option("--task", evaluate.task, "Task: classification or tagging")
      ->capture_default_str();
  cmd->callback([&result, &evaluate]() { result = RunEvaluate(evaluate); });

  GenSynthConfig gensynth;
  cmd = app.add_subcommand("gen-synth", "Generate synthetic train/test corpora");
  cmd->add_option("--train-out", gensynth.train_out, "Training corpus output path")->required();
  cmd->add_option("--test-out", gensynth.test_out, "Test corpus output path")->required();
  cmd->add_option("--format", gensynth.format, "Output format: labeled or conll")
      ->capture_default_str();
  cmd->add_option("--seed", gensynth.seed, "Generator seed")->capture_default_str();
  cmd->add_option("--train-sentences", gensynth.train_sentences,
                  "Training sentence count (default spec: 2000)");
  cmd->add_option("--test-sentences", gensynth.test_sentences,
                  "Test sentence count (default spec: 400)");
  cmd->add_option("--lexicon-size", gensynth.lexicon_size,
                  "Surface forms per category (default spec: 16)");
  cmd->add_option("--filler-vocabulary", gensynth.filler_vocabulary,
                  "Filler word pool size (default spec: 2000)");
  cmd->callback([&result, &gensynth]() { result = RunGenSynth(gensynth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitFailure;
  } catch (const IoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitIoError;
  } catch (const textdp::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitFailure;
  }
  return result;
}
