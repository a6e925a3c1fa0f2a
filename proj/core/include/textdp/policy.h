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

#ifndef TEXTDP_POLICY_H_
#define TEXTDP_POLICY_H_

#include <iosfwd>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "textdp/corpus.h"

namespace textdp {

enum class PolicyKind { kDegenerate, kUniform, kFrequency, kGazetteer };

std::string_view ToString(PolicyKind kind);

// Per-category set of surface forms considered possible originals. The
// privacy bound of a strategy is governed by the minimum policy mass over
// this set.
struct PrivateVocabulary {
  std::map<EntityCategory, std::set<std::string>> forms;

  bool Covers(const EntityCategory& category) const;
};

PrivateVocabulary VocabularyFromLexicon(const CategoryLexicon& lexicon);

// A token replacement distribution per category. By construction nothing in
// here can depend on the token being replaced: the distribution is a fixed
// per-category table, which is exactly the independence hypothesis the
// closed-form privacy accounting requires.
//
// Invariants, enforced at construction: per category the masses are strictly
// positive and sum to 1 within 1e-12. Instances are immutable; identical
// construction inputs yield bit-identical distributions (ordered storage,
// fixed arithmetic order).
class ReplacementPolicy {
 public:
  using Distribution = std::map<std::string, double>;

  ReplacementPolicy(PolicyKind kind, std::map<EntityCategory, Distribution> mass);

  // Policy with no categories, for the no-replacement strategy.
  static ReplacementPolicy Empty();

  PolicyKind kind() const { return kind_; }
  bool empty() const { return mass_.empty(); }
  bool Covers(const EntityCategory& category) const;
  std::vector<EntityCategory> Categories() const;

  // Throws std::invalid_argument for an unknown category.
  const Distribution& DistributionFor(const EntityCategory& category) const;

  // Mass of `token` under `category`; 0 for tokens outside the support.
  double MassAt(const EntityCategory& category, const std::string& token) const;

  // Deterministic sampling contract: cumulative-sum inversion over the
  // category's tokens in lexicographic order. Returns the first token whose
  // cumulative mass exceeds `unit`; `unit` must be in [0, 1).
  const std::string& SampleAt(const EntityCategory& category, double unit) const;

  // One draw from the category's distribution. The caller owns the stream,
  // so concurrency means one independent stream per task.
  const std::string& Sample(const EntityCategory& category, std::mt19937_64& rng) const;

  friend bool operator==(const ReplacementPolicy&, const ReplacementPolicy&) = default;

 private:
  PolicyKind kind_;
  std::map<EntityCategory, Distribution> mass_;
};

// Mass 1 on a single surrogate per category (redaction placeholders, typed
// and named placeholders). Throws on an empty mapping.
ReplacementPolicy DegeneratePolicy(const std::map<EntityCategory, std::string>& category_to_token);

// Mass 1/K on each of the K vocabulary forms of a category.
ReplacementPolicy UniformPolicy(const PrivateVocabulary& vocab);

// Mass proportional to occurrence counts, i.e. surrogates keep the corpus's
// own frequency distribution. Throws on an empty lexicon.
ReplacementPolicy FrequencyPolicy(const CategoryLexicon& lexicon);

// External lexicon: `category<TAB>token<TAB>weight` lines, weights > 0,
// normalized per category. Malformed lines and non-positive weights are
// ParseErrors carrying the line number; an empty file is an error.
ReplacementPolicy GazetteerPolicy(std::istream& in);
ReplacementPolicy GazetteerPolicy(const std::string& text);

// min over t in vocab[category] of the policy mass at t, with mass 0 for
// tokens absent from the policy support. Throws when the vocabulary does not
// cover `category`.
double MinMass(const ReplacementPolicy& policy, const PrivateVocabulary& vocab,
               const EntityCategory& category);

}  // namespace textdp

#endif  // TEXTDP_POLICY_H_
