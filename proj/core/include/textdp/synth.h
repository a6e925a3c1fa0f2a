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

#ifndef TEXTDP_SYNTH_H_
#define TEXTDP_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "textdp/corpus.h"

namespace textdp {

// Synthetic slot-filling corpus generator. Sentences are built from
// label-specific templates whose slots are filled from per-category lexicons
// of invented surface forms, so labels depend on both template words and
// slot categories and entity information carries classification signal.

// One template token is either a literal word, an entity slot "{CAT}" for a
// category named CAT in the spec's lexicons, or a filler slot "{F}" drawn
// from a shared pool of non-entity words.
struct LabelSpec {
  std::string label;
  std::vector<std::vector<std::string>> templates;

  bool operator==(const LabelSpec&) const = default;
};

struct SynthSpec {
  std::size_t train_sentences = 0;
  std::size_t test_sentences = 0;
  // Distinct surface forms generated per category. Every form is unique
  // across categories and disjoint from the filler pool; one form per
  // category is two words long so entity and word granularity differ.
  std::map<EntityCategory, std::size_t> lexicon_sizes;
  std::size_t filler_vocabulary = 0;
  std::vector<LabelSpec> labels;

  bool operator==(const SynthSpec&) const = default;
};

// Four labels over PER/LOC/DATE/TIME. Two labels are distinguished only by
// their slot categories, so a classifier that cannot see entity values loses
// them; all entity slots are flanked by filler words, so token context alone
// carries no tagging signal.
SynthSpec DefaultSynthSpec();

struct SynthCorpora {
  Corpus train;
  Corpus test;
};

// Deterministic in (spec, seed). Lexicons and the filler pool depend only on
// the spec, not on `seed`, so policies derived from them are stable across
// corpus draws. Train and test are disjoint: no sentence (token sequence)
// appears in both. Throws std::invalid_argument on a degenerate spec
// (< 2 labels, < 2 forms in some category, empty templates, unknown slot,
// adjacent entity slots, or zero sentence counts).
SynthCorpora GenSyntheticCorpus(const SynthSpec& spec, std::uint64_t seed);

}  // namespace textdp

#endif  // TEXTDP_SYNTH_H_
