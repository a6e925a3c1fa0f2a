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

#ifndef TEXTDP_MECHANISM_H_
#define TEXTDP_MECHANISM_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "textdp/corpus.h"
#include "textdp/policy.h"
#include "textdp/privacy.h"

namespace textdp {

// The replacement mechanism. Each annotated unit (a word inside a span, or a
// whole span, depending on granularity) is independently replaced with
// probability p by a draw from the strategy's policy; otherwise it passes
// through unchanged. Unannotated tokens always pass through.

enum class StrategyName {
  kNoReplacement,
  kRedact,
  kTypedPlaceholder,
  kNamedPlaceholder,
  kWordByWord,
  kFullEntity,
};

// "no_replacement", "redact", "typed_placeholder", "named_placeholder",
// "word_by_word", "full_entity".
std::string ToString(StrategyName name);

// Accepts both '_' and '-' separators. Throws std::invalid_argument on
// unknown names.
StrategyName StrategyNameFromString(const std::string& text);

struct ReplacementStrategy {
  StrategyName name = StrategyName::kNoReplacement;
  double p = 0;
  ReplacementPolicy policy = ReplacementPolicy::Empty();
  Granularity granularity = Granularity::kWord;
  // Reuse one surrogate for every occurrence of the same original. Improves
  // readability but voids the (epsilon, 0) guarantee.
  bool consistent_mapping = false;

  bool operator==(const ReplacementStrategy&) const = default;
};

// Validates and assembles a strategy:
//   - p in [0, 1]; no_replacement forces p = 0,
//   - redact/typed/named placeholders get degenerate policies and entity
//     granularity,
//   - word_by_word requires a word-granularity policy, full_entity an
//     entity-granularity one (granularity is fixed by the name),
//   - when p > 0 the policy must be nonempty.
// Throws std::invalid_argument on violations.
ReplacementStrategy MakeStrategy(StrategyName name, double p, ReplacementPolicy policy,
                                 bool consistent_mapping = false);

inline constexpr char kRedactPlaceholder[] = "IIIII";

ReplacementStrategy NoReplacementStrategy();

// Every category maps to the same fixed placeholder token.
ReplacementStrategy RedactStrategy(double p, const std::vector<EntityCategory>& categories,
                                   const std::string& placeholder = kRedactPlaceholder);

// Each category maps to its own name ("PER" emits "PER").
ReplacementStrategy TypedPlaceholderStrategy(double p,
                                             const std::vector<EntityCategory>& categories);

// Each category maps to one fixed exemplar surface form.
ReplacementStrategy NamedPlaceholderStrategy(
    double p, const std::map<EntityCategory, std::string>& exemplars);

// Per-word replacement from a word-granularity policy (frequency, gazetteer,
// or uniform).
ReplacementStrategy WordByWordStrategy(double p, ReplacementPolicy policy);

// Whole-span replacement from an entity-granularity policy.
ReplacementStrategy FullEntityStrategy(double p, ReplacementPolicy policy,
                                       bool consistent_mapping = false);

// One decision made by the mechanism, sufficient to replay it.
struct TransformationRecord {
  std::uint64_t sentence = 0;  // Sentence index within the corpus.
  std::uint64_t unit = 0;      // Unit index within the sentence.
  std::string category;
  std::string original;
  std::string emitted;
  bool replaced = false;
  double draw = 0;  // The uniform r compared against p.

  bool operator==(const TransformationRecord&) const = default;
};

using TransformationLog = std::vector<TransformationRecord>;

// JSONL, one record per line, fields sentence, unit, category, original,
// emitted, replaced, r.
void WriteLog(const TransformationLog& log, std::ostream& out);
std::string WriteLog(const TransformationLog& log);

// Applies the strategy to one sentence. Consumes exactly one UnitOpen draw
// per annotated unit, plus one policy draw per replacement, in unit order;
// the consumption pattern does not depend on consistent_mapping. Appends one
// record per unit to `log` when non-null. Entity granularity may change
// token count; spans and BIO structure stay consistent. Under consistent
// mapping the surrogate for an original comes from a stream derived from
// (consistent_seed, category, original), so every occurrence maps alike
// without shared state.
AnnotatedSentence TransformSentence(const AnnotatedSentence& sentence,
                                    const ReplacementStrategy& strategy, std::mt19937_64& rng,
                                    TransformationLog* log = nullptr,
                                    std::uint64_t sentence_index = 0,
                                    std::uint64_t consistent_seed = 0);

struct TransformResult {
  Corpus corpus;
  TransformationLog log;
  PrivacyReport report;
};

// Applies the strategy to every sentence. Each sentence gets its own RNG
// stream derived from `master_seed`, so results do not depend on corpus
// order or parallel scheduling. The attached report's vocabulary is the
// corpus's own surface forms at the strategy's granularity.
TransformResult TransformCorpus(const Corpus& corpus, const ReplacementStrategy& strategy,
                                std::uint64_t master_seed);

}  // namespace textdp

#endif  // TEXTDP_MECHANISM_H_
