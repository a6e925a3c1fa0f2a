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

#include "textdp/metrics.h"

#include <algorithm>
#include <stdexcept>

namespace textdp {
namespace {

struct TallyCounts {
  std::uint64_t true_positive = 0;
  std::uint64_t false_positive = 0;
  std::uint64_t false_negative = 0;
};

ClassMetrics ToClassMetrics(const TallyCounts& tally, std::uint64_t support) {
  ClassMetrics metrics;
  metrics.support = support;
  const std::uint64_t predicted = tally.true_positive + tally.false_positive;
  const std::uint64_t actual = tally.true_positive + tally.false_negative;
  metrics.precision =
      predicted == 0 ? 0 : static_cast<double>(tally.true_positive) / predicted;
  metrics.recall = actual == 0 ? 0 : static_cast<double>(tally.true_positive) / actual;
  metrics.f1 = metrics.precision + metrics.recall == 0
                   ? 0
                   : 2 * metrics.precision * metrics.recall /
                         (metrics.precision + metrics.recall);
  return metrics;
}

}  // namespace

EvalMetrics EntityF1(const Corpus& gold, const Corpus& predicted) {
  if (gold.sentences.size() != predicted.sentences.size()) {
    throw std::invalid_argument("gold and predicted corpora have different sentence counts");
  }

  TallyCounts micro;
  std::map<std::string, TallyCounts> per_category;
  for (std::size_t i = 0; i < gold.sentences.size(); ++i) {
    const AnnotatedSentence& gold_sentence = gold.sentences[i];
    const AnnotatedSentence& predicted_sentence = predicted.sentences[i];
    if (gold_sentence.tokens.size() != predicted_sentence.tokens.size()) {
      throw std::invalid_argument("token count mismatch at sentence " + std::to_string(i));
    }
    std::vector<EntitySpan> gold_spans = gold_sentence.spans;
    std::vector<EntitySpan> predicted_spans = predicted_sentence.spans;
    std::sort(gold_spans.begin(), gold_spans.end());
    std::sort(predicted_spans.begin(), predicted_spans.end());
    for (const EntitySpan& span : predicted_spans) {
      const bool hit = std::binary_search(gold_spans.begin(), gold_spans.end(), span);
      TallyCounts& tally = per_category[span.category.name()];
      if (hit) {
        ++micro.true_positive;
        ++tally.true_positive;
      } else {
        ++micro.false_positive;
        ++tally.false_positive;
      }
    }
    for (const EntitySpan& span : gold_spans) {
      if (!std::binary_search(predicted_spans.begin(), predicted_spans.end(), span)) {
        ++micro.false_negative;
        ++per_category[span.category.name()].false_negative;
      }
    }
  }

  EvalMetrics metrics;
  metrics.entity_f1 = ToClassMetrics(micro, 0).f1;
  for (const auto& [category, tally] : per_category) {
    metrics.per_class.emplace(
        category, ToClassMetrics(tally, tally.true_positive + tally.false_negative));
  }
  return metrics;
}

EvalMetrics EvaluateClassifier(const SentenceClassifier& model, const Corpus& test) {
  if (test.sentences.empty()) throw std::invalid_argument("test corpus is empty");

  std::uint64_t correct = 0;
  std::map<std::string, TallyCounts> per_label;
  std::map<std::string, std::uint64_t> supports;
  for (const AnnotatedSentence& sentence : test.sentences) {
    if (!sentence.label.has_value() || sentence.label->empty()) {
      throw std::invalid_argument("test corpus has an unlabeled sentence");
    }
    const std::string& gold = *sentence.label;
    const std::string predicted = model.Predict(sentence.tokens);
    ++supports[gold];
    if (predicted == gold) {
      ++correct;
      ++per_label[gold].true_positive;
    } else {
      ++per_label[predicted].false_positive;
      ++per_label[gold].false_negative;
    }
  }

  EvalMetrics metrics;
  metrics.accuracy = static_cast<double>(correct) / test.sentences.size();
  for (const auto& [label, tally] : per_label) {
    metrics.per_class.emplace(label, ToClassMetrics(tally, supports[label]));
  }
  return metrics;
}

EvalMetrics EvaluateTagger(const TokenTagger& model, const Corpus& test) {
  if (test.sentences.empty()) throw std::invalid_argument("test corpus is empty");

  Corpus predicted;
  predicted.name = test.name;
  predicted.sentences.reserve(test.sentences.size());
  for (const AnnotatedSentence& sentence : test.sentences) {
    predicted.sentences.push_back(model.Predict(sentence.tokens));
  }
  return EntityF1(test, predicted);
}

}  // namespace textdp
