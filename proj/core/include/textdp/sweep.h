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

#ifndef TEXTDP_SWEEP_H_
#define TEXTDP_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "textdp/corpus.h"
#include "textdp/mechanism.h"

namespace textdp {

// Privacy/utility trade-off harness: transform the training corpus at each
// grid point, train on the transformed data, evaluate on the untransformed
// test set, and pair every utility number with the exact epsilon of the
// transformation that produced it.

struct SweepRow {
  double p = 0;
  double epsilon = 0;
  std::string strategy;
  std::string task;    // "classification" or "tagging".
  std::string metric;  // "accuracy" or "entity_f1".
  double value = 0;
  std::uint64_t seed = 0;

  bool operator==(const SweepRow&) const = default;
};

inline constexpr char kTaskClassification[] = "classification";
inline constexpr char kTaskTagging[] = "tagging";

struct SweepConfig {
  std::vector<StrategyName> strategies;
  std::vector<double> p_grid;        // Each value in [0, 1].
  std::vector<std::uint64_t> seeds;  // Master seeds, one transform per seed.
  std::vector<std::string> tasks;    // Subset of {classification, tagging}.
};

// Derives a strategy's policy from the corpus itself: frequency policies at
// the strategy's granularity for word-by-word and full-entity, fixed
// placeholders for redact and typed, and for named placeholders the most
// frequent whole-span form per category (lexicographically smallest on
// ties).
ReplacementStrategy StrategyForCorpus(StrategyName name, double p, const Corpus& corpus,
                                      bool consistent_mapping = false);

// One row per (strategy, p, seed, task), emitted in exactly that nesting
// order. Cells are pure given their seed, so execution may be reordered or
// parallelized without changing the output. The test corpus is never
// transformed. Throws std::invalid_argument on an empty or invalid config.
std::vector<SweepRow> Sweep(const Corpus& train, const Corpus& test, const SweepConfig& config);

// Header `p,epsilon,strategy,task,metric,value,seed`; infinite epsilon is
// written as "inf"; doubles use shortest round-trip formatting.
void WriteSweepCsv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string WriteSweepCsv(const std::vector<SweepRow>& rows);

// Mean and (population) standard deviation of `value` over rows grouped by
// (strategy, p, task, metric), in group-sorted order.
struct SweepSummary {
  std::string strategy;
  double p = 0;
  std::string task;
  std::string metric;
  double mean = 0;
  double stddev = 0;
  std::uint64_t runs = 0;
};

std::vector<SweepSummary> SummarizeSweep(const std::vector<SweepRow>& rows);

}  // namespace textdp

#endif  // TEXTDP_SWEEP_H_
