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

#include "textdp/mechanism.h"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "textdp/random.h"
#include "textdp/strings.h"

namespace textdp {
namespace {

using nlohmann::json;

// Domain separator between sentence streams and consistent-mapping streams.
constexpr std::uint64_t kConsistentMappingSalt = 0x636f6e736d6170ULL;

Granularity GranularityFor(StrategyName name) {
  switch (name) {
    case StrategyName::kNoReplacement:
    case StrategyName::kWordByWord:
      return Granularity::kWord;
    case StrategyName::kRedact:
    case StrategyName::kTypedPlaceholder:
    case StrategyName::kNamedPlaceholder:
    case StrategyName::kFullEntity:
      return Granularity::kEntity;
  }
  throw std::invalid_argument("unknown strategy name");
}

std::string ConsistentSurrogate(const ReplacementPolicy& policy, const EntityCategory& category,
                                const std::string& original, std::uint64_t consistent_seed) {
  std::string key = category.name();
  key += '\x1f';
  key += original;
  std::mt19937_64 stream(DeriveSeed(consistent_seed ^ kConsistentMappingSalt, HashBytes(key)));
  return policy.SampleAt(category, UnitHalfOpen(stream));
}

void CheckCoverage(const AnnotatedSentence& sentence, const ReplacementStrategy& strategy) {
  if (strategy.p == 0) return;
  for (const EntitySpan& span : sentence.spans) {
    if (!strategy.policy.Covers(span.category)) {
      throw std::invalid_argument("strategy policy does not cover category " +
                                  span.category.name());
    }
  }
}

}  // namespace

std::string ToString(StrategyName name) {
  switch (name) {
    case StrategyName::kNoReplacement:
      return "no_replacement";
    case StrategyName::kRedact:
      return "redact";
    case StrategyName::kTypedPlaceholder:
      return "typed_placeholder";
    case StrategyName::kNamedPlaceholder:
      return "named_placeholder";
    case StrategyName::kWordByWord:
      return "word_by_word";
    case StrategyName::kFullEntity:
      return "full_entity";
  }
  throw std::invalid_argument("unknown strategy name");
}

StrategyName StrategyNameFromString(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == '-') c = '_';
  }
  if (normalized == "no_replacement") return StrategyName::kNoReplacement;
  if (normalized == "redact") return StrategyName::kRedact;
  if (normalized == "typed_placeholder") return StrategyName::kTypedPlaceholder;
  if (normalized == "named_placeholder") return StrategyName::kNamedPlaceholder;
  if (normalized == "word_by_word") return StrategyName::kWordByWord;
  if (normalized == "full_entity") return StrategyName::kFullEntity;
  throw std::invalid_argument(
      "unknown strategy \"" + text +
      "\"; expected one of no_replacement, redact, typed_placeholder, named_placeholder, "
      "word_by_word, full_entity");
}

ReplacementStrategy MakeStrategy(StrategyName name, double p, ReplacementPolicy policy,
                                 bool consistent_mapping) {
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument("p must lie in [0, 1], got " + FormatDouble(p));
  }
  if (consistent_mapping && name != StrategyName::kFullEntity) {
    throw std::invalid_argument("consistent_mapping is only available for full_entity");
  }
  ReplacementStrategy strategy;
  strategy.name = name;
  strategy.granularity = GranularityFor(name);
  strategy.consistent_mapping = consistent_mapping;
  if (name == StrategyName::kNoReplacement) {
    strategy.p = 0;
    strategy.policy = ReplacementPolicy::Empty();
    return strategy;
  }
  strategy.p = p;
  if (p > 0 && policy.empty()) {
    throw std::invalid_argument("strategy " + ToString(name) +
                                " with p > 0 needs a non-empty policy");
  }
  if (strategy.granularity == Granularity::kWord) {
    for (const EntityCategory& category : policy.Categories()) {
      for (const auto& [token, mass] : policy.DistributionFor(category)) {
        if (ContainsWhitespace(token)) {
          throw std::invalid_argument("word-granularity policy token \"" + token +
                                      "\" contains whitespace");
        }
      }
    }
  }
  strategy.policy = std::move(policy);
  return strategy;
}

ReplacementStrategy NoReplacementStrategy() {
  return MakeStrategy(StrategyName::kNoReplacement, 0, ReplacementPolicy::Empty());
}

ReplacementStrategy RedactStrategy(double p, const std::vector<EntityCategory>& categories,
                                   const std::string& placeholder) {
  std::map<EntityCategory, std::string> mapping;
  for (const EntityCategory& category : categories) mapping.emplace(category, placeholder);
  return MakeStrategy(StrategyName::kRedact, p, DegeneratePolicy(mapping));
}

ReplacementStrategy TypedPlaceholderStrategy(double p,
                                             const std::vector<EntityCategory>& categories) {
  std::map<EntityCategory, std::string> mapping;
  for (const EntityCategory& category : categories) mapping.emplace(category, category.name());
  return MakeStrategy(StrategyName::kTypedPlaceholder, p, DegeneratePolicy(mapping));
}

ReplacementStrategy NamedPlaceholderStrategy(
    double p, const std::map<EntityCategory, std::string>& exemplars) {
  return MakeStrategy(StrategyName::kNamedPlaceholder, p, DegeneratePolicy(exemplars));
}

ReplacementStrategy WordByWordStrategy(double p, ReplacementPolicy policy) {
  return MakeStrategy(StrategyName::kWordByWord, p, std::move(policy));
}

ReplacementStrategy FullEntityStrategy(double p, ReplacementPolicy policy,
                                       bool consistent_mapping) {
  return MakeStrategy(StrategyName::kFullEntity, p, std::move(policy), consistent_mapping);
}

void WriteLog(const TransformationLog& log, std::ostream& out) {
  for (const TransformationRecord& record : log) {
    json line = {{"sentence", record.sentence}, {"unit", record.unit},
                 {"category", record.category}, {"original", record.original},
                 {"emitted", record.emitted},   {"replaced", record.replaced},
                 {"r", record.draw}};
    out << line.dump() << '\n';
  }
}

std::string WriteLog(const TransformationLog& log) {
  std::ostringstream out;
  WriteLog(log, out);
  return out.str();
}

AnnotatedSentence TransformSentence(const AnnotatedSentence& sentence,
                                    const ReplacementStrategy& strategy, std::mt19937_64& rng,
                                    TransformationLog* log, std::uint64_t sentence_index,
                                    std::uint64_t consistent_seed) {
  ValidateSentence(sentence);
  CheckCoverage(sentence, strategy);

  auto emit_record = [&](std::uint64_t unit, const EntityCategory& category,
                         const std::string& original, const std::string& emitted, bool replaced,
                         double draw) {
    if (log == nullptr) return;
    log->push_back(
        {sentence_index, unit, category.name(), original, emitted, replaced, draw});
  };

  AnnotatedSentence out;
  out.label = sentence.label;
  std::uint64_t unit = 0;

  if (strategy.granularity == Granularity::kWord) {
    out = sentence;
    for (const EntitySpan& span : sentence.spans) {
      for (std::size_t i = span.start; i < span.end; ++i) {
        const std::string& original = sentence.tokens[i];
        double r = UnitOpen(rng);
        bool replaced = r <= strategy.p;
        std::string emitted = original;
        if (replaced) {
          emitted = strategy.policy.SampleAt(span.category, UnitHalfOpen(rng));
          out.tokens[i] = emitted;
        }
        emit_record(unit, span.category, original, emitted, replaced, r);
        ++unit;
      }
    }
    return out;
  }

  // Entity granularity: spans are replaced as whole units and may change
  // length, so tokens and spans are rebuilt with a running offset.
  std::size_t cursor = 0;
  for (const EntitySpan& span : sentence.spans) {
    for (std::size_t i = cursor; i < span.start; ++i) out.tokens.push_back(sentence.tokens[i]);
    const std::string original = SpanText(sentence, span);
    double r = UnitOpen(rng);
    bool replaced = r <= strategy.p;
    std::string emitted = original;
    if (replaced) {
      double u = UnitHalfOpen(rng);
      emitted = strategy.consistent_mapping
                    ? ConsistentSurrogate(strategy.policy, span.category, original,
                                          consistent_seed)
                    : strategy.policy.SampleAt(span.category, u);
    }
    const std::size_t new_start = out.tokens.size();
    for (std::string& piece : SplitWhitespace(emitted)) out.tokens.push_back(std::move(piece));
    out.spans.push_back({new_start, out.tokens.size(), span.category});
    emit_record(unit, span.category, original, emitted, replaced, r);
    ++unit;
    cursor = span.end;
  }
  for (std::size_t i = cursor; i < sentence.tokens.size(); ++i) {
    out.tokens.push_back(sentence.tokens[i]);
  }
  return out;
}

TransformResult TransformCorpus(const Corpus& corpus, const ReplacementStrategy& strategy,
                                std::uint64_t master_seed) {
  TransformResult result;
  result.corpus.name = corpus.name;
  result.corpus.sentences.reserve(corpus.sentences.size());
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    std::mt19937_64 rng(DeriveSeed(master_seed, i));
    result.corpus.sentences.push_back(
        TransformSentence(corpus.sentences[i], strategy, rng, &result.log, i, master_seed));
  }
  CategoryLexicon lexicon = BuildCategoryLexicon(corpus, strategy.granularity);
  PrivateVocabulary vocab = VocabularyFromLexicon(lexicon);
  result.report = MakePrivacyReport(ToString(strategy.name), strategy.p, strategy.policy, vocab,
                                    strategy.consistent_mapping);
  return result;
}

}  // namespace textdp
