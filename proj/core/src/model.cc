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

#include "textdp/model.h"

#include <cmath>
#include <stdexcept>

#include "textdp/strings.h"

namespace textdp {
namespace {

// log((count + 1) / (total + vocabulary)), the add-one smoothed likelihood.
double SmoothedLogLikelihood(const std::map<std::string, std::uint64_t>& counts,
                             std::uint64_t total, std::size_t vocabulary,
                             const std::string& value) {
  auto it = counts.find(value);
  const std::uint64_t count = it == counts.end() ? 0 : it->second;
  return std::log(static_cast<double>(count + 1)) -
         std::log(static_cast<double>(total + vocabulary));
}

}  // namespace

SentenceClassifier SentenceClassifier::Train(const Corpus& train) {
  if (train.sentences.empty()) {
    throw std::invalid_argument("classifier training corpus is empty");
  }
  SentenceClassifier model;
  for (const AnnotatedSentence& sentence : train.sentences) {
    if (!sentence.label.has_value() || sentence.label->empty()) {
      throw std::invalid_argument("classifier training corpus has an unlabeled sentence");
    }
    const std::string& label = *sentence.label;
    model.labels_.insert(label);
    ++model.label_counts_[label];
    ++model.total_sentences_;
    for (const std::string& token : sentence.tokens) {
      std::string word = ToLowerAscii(token);
      ++model.token_counts_[label][word];
      ++model.token_totals_[label];
      model.vocabulary_.insert(std::move(word));
    }
  }
  return model;
}

std::string SentenceClassifier::Predict(const std::vector<std::string>& tokens) const {
  const std::size_t vocabulary = vocabulary_.size();
  std::string best_label;
  double best_score = 0;
  bool first = true;
  // Map order is lexicographic, so ties resolve to the smallest label.
  for (const std::string& label : labels_) {
    double score = std::log(static_cast<double>(label_counts_.at(label))) -
                   std::log(static_cast<double>(total_sentences_));
    const auto& counts = token_counts_.at(label);
    const std::uint64_t total = token_totals_.at(label);
    for (const std::string& token : tokens) {
      score += SmoothedLogLikelihood(counts, total, vocabulary, ToLowerAscii(token));
    }
    if (first || score > best_score) {
      best_label = label;
      best_score = score;
      first = false;
    }
  }
  return best_label;
}

TokenTagger TokenTagger::Train(const Corpus& train) {
  TokenTagger model;
  for (const AnnotatedSentence& sentence : train.sentences) {
    ValidateSentence(sentence);
    const std::vector<std::string> tags = ToBioTags(sentence);
    const std::size_t n = sentence.tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& tag = tags[i];
      model.tags_.insert(tag);
      ++model.tag_counts_[tag];
      ++model.total_tokens_;
      const std::string& current = sentence.tokens[i];
      const std::string& previous = i > 0 ? sentence.tokens[i - 1] : kSentenceStartMarker;
      const std::string& next = i + 1 < n ? sentence.tokens[i + 1] : kSentenceEndMarker;
      const std::string* features[3] = {&current, &previous, &next};
      for (int slot = 0; slot < 3; ++slot) {
        ++model.slots_[slot].counts[tag][*features[slot]];
        ++model.slots_[slot].totals[tag];
        model.slots_[slot].vocabulary.insert(*features[slot]);
      }
    }
  }
  return model;
}

std::vector<std::string> TokenTagger::PredictTags(const std::vector<std::string>& tokens) const {
  const std::size_t n = tokens.size();
  if (tags_.empty()) return std::vector<std::string>(n, "O");

  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& current = tokens[i];
    const std::string& previous = i > 0 ? tokens[i - 1] : kSentenceStartMarker;
    const std::string& next = i + 1 < n ? tokens[i + 1] : kSentenceEndMarker;
    const std::string* features[3] = {&current, &previous, &next};

    std::string best_tag;
    double best_score = 0;
    bool first = true;
    for (const std::string& tag : tags_) {
      double score = std::log(static_cast<double>(tag_counts_.at(tag))) -
                     std::log(static_cast<double>(total_tokens_));
      for (int slot = 0; slot < 3; ++slot) {
        score += SmoothedLogLikelihood(slots_[slot].counts.at(tag), slots_[slot].totals.at(tag),
                                       slots_[slot].vocabulary.size(), *features[slot]);
      }
      if (first || score > best_score) {
        best_tag = tag;
        best_score = score;
        first = false;
      }
    }
    out.push_back(best_tag);
  }
  return out;
}

AnnotatedSentence TokenTagger::Predict(const std::vector<std::string>& tokens) const {
  AnnotatedSentence out;
  out.tokens = tokens;
  out.spans = SpansFromBioTags(PredictTags(tokens));
  return out;
}

}  // namespace textdp
