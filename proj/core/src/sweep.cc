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

#include "textdp/sweep.h"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "textdp/metrics.h"
#include "textdp/strings.h"

namespace textdp {
namespace {

std::map<EntityCategory, std::string> MostFrequentForms(const CategoryLexicon& lexicon) {
  std::map<EntityCategory, std::string> exemplars;
  for (const auto& [category, table] : lexicon.counts) {
    const std::string* best_form = nullptr;
    std::uint64_t best_count = 0;
    // Map order is lexicographic, so ties go to the smallest form.
    for (const auto& [form, count] : table) {
      if (best_form == nullptr || count > best_count) {
        best_form = &form;
        best_count = count;
      }
    }
    exemplars.emplace(category, *best_form);
  }
  return exemplars;
}

void ValidateConfig(const SweepConfig& config) {
  if (config.strategies.empty()) throw std::invalid_argument("sweep needs at least one strategy");
  if (config.p_grid.empty()) throw std::invalid_argument("sweep needs a non-empty p grid");
  if (config.seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
  if (config.tasks.empty()) throw std::invalid_argument("sweep needs at least one task");
  for (double p : config.p_grid) {
    if (!(p >= 0 && p <= 1)) {
      throw std::invalid_argument("sweep grid value " + FormatDouble(p) + " is outside [0, 1]");
    }
  }
  for (const std::string& task : config.tasks) {
    if (task != kTaskClassification && task != kTaskTagging) {
      throw std::invalid_argument("unknown sweep task \"" + task + "\"");
    }
  }
}

}  // namespace

ReplacementStrategy StrategyForCorpus(StrategyName name, double p, const Corpus& corpus,
                                      bool consistent_mapping) {
  switch (name) {
    case StrategyName::kNoReplacement:
      return NoReplacementStrategy();
    case StrategyName::kRedact: {
      CategoryLexicon lexicon = BuildCategoryLexicon(corpus, Granularity::kEntity);
      std::vector<EntityCategory> categories;
      for (const auto& [category, table] : lexicon.counts) categories.push_back(category);
      return RedactStrategy(p, categories);
    }
    case StrategyName::kTypedPlaceholder: {
      CategoryLexicon lexicon = BuildCategoryLexicon(corpus, Granularity::kEntity);
      std::vector<EntityCategory> categories;
      for (const auto& [category, table] : lexicon.counts) categories.push_back(category);
      return TypedPlaceholderStrategy(p, categories);
    }
    case StrategyName::kNamedPlaceholder:
      return NamedPlaceholderStrategy(
          p, MostFrequentForms(BuildCategoryLexicon(corpus, Granularity::kEntity)));
    case StrategyName::kWordByWord:
      return WordByWordStrategy(
          p, FrequencyPolicy(BuildCategoryLexicon(corpus, Granularity::kWord)));
    case StrategyName::kFullEntity:
      return FullEntityStrategy(
          p, FrequencyPolicy(BuildCategoryLexicon(corpus, Granularity::kEntity)),
          consistent_mapping);
  }
  throw std::invalid_argument("unknown strategy name");
}

std::vector<SweepRow> Sweep(const Corpus& train, const Corpus& test, const SweepConfig& config) {
  ValidateConfig(config);

  std::vector<SweepRow> rows;
  for (StrategyName name : config.strategies) {
    for (double p : config.p_grid) {
      ReplacementStrategy strategy = StrategyForCorpus(name, p, train);
      for (std::uint64_t seed : config.seeds) {
        TransformResult result = TransformCorpus(train, strategy, seed);
        const double epsilon = result.report.overall_epsilon;
        for (const std::string& task : config.tasks) {
          SweepRow row;
          row.p = p;
          row.epsilon = epsilon;
          row.strategy = ToString(name);
          row.task = task;
          row.seed = seed;
          if (task == kTaskClassification) {
            row.metric = "accuracy";
            row.value =
                EvaluateClassifier(SentenceClassifier::Train(result.corpus), test).accuracy;
          } else {
            row.metric = "entity_f1";
            row.value = EvaluateTagger(TokenTagger::Train(result.corpus), test).entity_f1;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "p,epsilon,strategy,task,metric,value,seed\n";
  for (const SweepRow& row : rows) {
    out << FormatDouble(row.p) << ',' << FormatDouble(row.epsilon) << ',' << row.strategy << ','
        << row.task << ',' << row.metric << ',' << FormatDouble(row.value) << ',' << row.seed
        << '\n';
  }
}

std::string WriteSweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  WriteSweepCsv(rows, out);
  return out.str();
}

std::vector<SweepSummary> SummarizeSweep(const std::vector<SweepRow>& rows) {
  std::map<std::tuple<std::string, double, std::string, std::string>, std::vector<double>> groups;
  for (const SweepRow& row : rows) {
    groups[{row.strategy, row.p, row.task, row.metric}].push_back(row.value);
  }
  std::vector<SweepSummary> summaries;
  summaries.reserve(groups.size());
  for (const auto& [key, values] : groups) {
    SweepSummary summary;
    summary.strategy = std::get<0>(key);
    summary.p = std::get<1>(key);
    summary.task = std::get<2>(key);
    summary.metric = std::get<3>(key);
    summary.runs = values.size();
    double sum = 0;
    for (double value : values) sum += value;
    summary.mean = sum / static_cast<double>(values.size());
    double squares = 0;
    for (double value : values) squares += (value - summary.mean) * (value - summary.mean);
    summary.stddev = std::sqrt(squares / static_cast<double>(values.size()));
    summaries.push_back(std::move(summary));
  }
  return summaries;
}

}  // namespace textdp
