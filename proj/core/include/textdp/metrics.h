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

#ifndef TEXTDP_METRICS_H_
#define TEXTDP_METRICS_H_

#include <cstdint>
#include <map>
#include <string>

#include "textdp/corpus.h"
#include "textdp/model.h"

namespace textdp {

struct ClassMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::uint64_t support = 0;

  bool operator==(const ClassMetrics&) const = default;
};

// Shared result shape for both tasks. Classification fills accuracy and
// per-class rows keyed by label; tagging fills entity_f1 and per-class rows
// keyed by category. Every value lies in [0, 1]; empty denominators yield 0.
struct EvalMetrics {
  double accuracy = 0;
  double entity_f1 = 0;
  std::map<std::string, ClassMetrics> per_class;

  bool operator==(const EvalMetrics&) const = default;
};

// Exact-span scoring: a predicted span is correct iff its (start, end,
// category) triple matches a gold span; entity_f1 is the micro average over
// all spans. Throws std::invalid_argument when sentence counts or any
// per-sentence token counts differ.
EvalMetrics EntityF1(const Corpus& gold, const Corpus& predicted);

// Runs the model over `test` and scores against its annotations. Both
// evaluate against the corpus they are given; callers enforce that it is the
// untransformed test set.
EvalMetrics EvaluateClassifier(const SentenceClassifier& model, const Corpus& test);
EvalMetrics EvaluateTagger(const TokenTagger& model, const Corpus& test);

}  // namespace textdp

#endif  // TEXTDP_METRICS_H_
