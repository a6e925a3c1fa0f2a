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

#ifndef TEXTDP_MODEL_H_
#define TEXTDP_MODEL_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "textdp/corpus.h"

namespace textdp {

// Closed-form count-based models. Both are multinomial naive Bayes with
// add-one smoothing, so training and prediction are exact arithmetic over
// integer counts: deterministic, no optimizer, no randomness. Ties break
// toward the lexicographically smallest class.

// Sentence classifier over a bag of lowercased unigrams.
class SentenceClassifier {
 public:
  // Throws std::invalid_argument if any sentence is unlabeled or the corpus
  // is empty.
  static SentenceClassifier Train(const Corpus& train);

  // Unseen tokens fall back to the smoothed likelihood; prediction never
  // fails on out-of-vocabulary input.
  std::string Predict(const std::vector<std::string>& tokens) const;

  const std::set<std::string>& labels() const { return labels_; }

 private:
  SentenceClassifier() = default;

  std::set<std::string> labels_;
  std::map<std::string, std::uint64_t> label_counts_;
  std::map<std::string, std::map<std::string, std::uint64_t>> token_counts_;
  std::map<std::string, std::uint64_t> token_totals_;
  std::set<std::string> vocabulary_;
  std::uint64_t total_sentences_ = 0;
};

// Per-token BIO tagger. Each token is classified independently from the
// features (current token, previous token, next token), with synthetic
// boundary markers at sentence edges; illegal I-without-B predictions are
// repaired by coercion to B when converting back to spans.
class TokenTagger {
 public:
  static TokenTagger Train(const Corpus& train);

  // One BIO tag per token, before any sequence repair.
  std::vector<std::string> PredictTags(const std::vector<std::string>& tokens) const;

  // Tags, then converts to spans under the repair rule. The result keeps the
  // input tokens and label and carries only predicted spans.
  AnnotatedSentence Predict(const std::vector<std::string>& tokens) const;

  const std::set<std::string>& tags() const { return tags_; }

 private:
  TokenTagger() = default;

  // feature slot (0 = current, 1 = previous, 2 = next) -> tag -> word -> count.
  struct Slot {
    std::map<std::string, std::map<std::string, std::uint64_t>> counts;
    std::map<std::string, std::uint64_t> totals;
    std::set<std::string> vocabulary;
  };

  std::set<std::string> tags_;
  std::map<std::string, std::uint64_t> tag_counts_;
  std::uint64_t total_tokens_ = 0;
  Slot slots_[3];
};

inline constexpr char kSentenceStartMarker[] = "<s>";
inline constexpr char kSentenceEndMarker[] = "</s>";

}  // namespace textdp

#endif  // TEXTDP_MODEL_H_
