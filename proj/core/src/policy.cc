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

#include "textdp/policy.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <utility>

#include "textdp/random.h"
#include "textdp/strings.h"

namespace textdp {
namespace {

constexpr double kMassSumTolerance = 1e-12;

std::map<EntityCategory, ReplacementPolicy::Distribution> NormalizeCounts(
    const std::map<EntityCategory, std::map<std::string, long double>>& weights) {
  std::map<EntityCategory, ReplacementPolicy::Distribution> mass;
  for (const auto& [category, table] : weights) {
    long double total = 0;
    for (const auto& [token, weight] : table) total += weight;
    ReplacementPolicy::Distribution& dist = mass[category];
    for (const auto& [token, weight] : table) {
      dist[token] = static_cast<double>(weight / total);
    }
  }
  return mass;
}

}  // namespace

std::string_view ToString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kDegenerate:
      return "degenerate";
    case PolicyKind::kUniform:
      return "uniform";
    case PolicyKind::kFrequency:
      return "frequency";
    case PolicyKind::kGazetteer:
      return "gazetteer";
  }
  throw std::invalid_argument("unknown policy kind");
}

bool PrivateVocabulary::Covers(const EntityCategory& category) const {
  auto it = forms.find(category);
  return it != forms.end() && !it->second.empty();
}

PrivateVocabulary VocabularyFromLexicon(const CategoryLexicon& lexicon) {
  PrivateVocabulary vocab;
  for (const auto& [category, table] : lexicon.counts) {
    std::set<std::string>& forms = vocab.forms[category];
    for (const auto& [form, count] : table) forms.insert(form);
  }
  return vocab;
}

ReplacementPolicy::ReplacementPolicy(PolicyKind kind,
                                     std::map<EntityCategory, Distribution> mass)
    : kind_(kind), mass_(std::move(mass)) {
  for (const auto& [category, dist] : mass_) {
    if (dist.empty()) {
      throw std::invalid_argument("policy has an empty distribution for category " +
                                  category.name());
    }
    long double sum = 0;
    for (const auto& [token, probability] : dist) {
      if (token.empty()) {
        throw std::invalid_argument("policy for category " + category.name() +
                                    " contains an empty token");
      }
      if (!(probability > 0) || !std::isfinite(probability)) {
        throw std::invalid_argument("policy mass for \"" + token + "\" in category " +
                                    category.name() + " must be strictly positive");
      }
      sum += probability;
    }
    if (std::fabs(static_cast<double>(sum - 1.0L)) > kMassSumTolerance) {
      throw std::invalid_argument("policy masses for category " + category.name() +
                                  " sum to " + FormatDouble(static_cast<double>(sum)) +
                                  ", expected 1");
    }
  }
}

ReplacementPolicy ReplacementPolicy::Empty() {
  return ReplacementPolicy(PolicyKind::kDegenerate, {});
}

bool ReplacementPolicy::Covers(const EntityCategory& category) const {
  return mass_.find(category) != mass_.end();
}

std::vector<EntityCategory> ReplacementPolicy::Categories() const {
  std::vector<EntityCategory> out;
  out.reserve(mass_.size());
  for (const auto& [category, dist] : mass_) out.push_back(category);
  return out;
}

const ReplacementPolicy::Distribution& ReplacementPolicy::DistributionFor(
    const EntityCategory& category) const {
  auto it = mass_.find(category);
  if (it == mass_.end()) {
    throw std::invalid_argument("policy has no distribution for category " + category.name());
  }
  return it->second;
}

double ReplacementPolicy::MassAt(const EntityCategory& category, const std::string& token) const {
  auto it = mass_.find(category);
  if (it == mass_.end()) return 0;
  auto jt = it->second.find(token);
  return jt == it->second.end() ? 0 : jt->second;
}

const std::string& ReplacementPolicy::SampleAt(const EntityCategory& category,
                                               double unit) const {
  if (!(unit >= 0 && unit < 1)) {
    throw std::invalid_argument("sampling unit must lie in [0, 1), got " + FormatDouble(unit));
  }
  const Distribution& dist = DistributionFor(category);
  // Lexicographic cumulative inversion; map order is lexicographic already.
  long double cumulative = 0;
  for (const auto& [token, probability] : dist) {
    cumulative += probability;
    if (unit < static_cast<double>(cumulative)) return dist.find(token)->first;
  }
  // Floating-point shortfall at the top of the scale lands on the last token.
  return std::prev(dist.end())->first;
}

const std::string& ReplacementPolicy::Sample(const EntityCategory& category,
                                             std::mt19937_64& rng) const {
  return SampleAt(category, UnitHalfOpen(rng));
}

ReplacementPolicy DegeneratePolicy(
    const std::map<EntityCategory, std::string>& category_to_token) {
  if (category_to_token.empty()) {
    throw std::invalid_argument("degenerate policy needs at least one category");
  }
  std::map<EntityCategory, ReplacementPolicy::Distribution> mass;
  for (const auto& [category, token] : category_to_token) {
    mass[category] = {{token, 1.0}};
  }
  return ReplacementPolicy(PolicyKind::kDegenerate, std::move(mass));
}

ReplacementPolicy UniformPolicy(const PrivateVocabulary& vocab) {
  if (vocab.forms.empty()) {
    throw std::invalid_argument("uniform policy needs a non-empty vocabulary");
  }
  std::map<EntityCategory, ReplacementPolicy::Distribution> mass;
  for (const auto& [category, forms] : vocab.forms) {
    if (forms.empty()) {
      throw std::invalid_argument("vocabulary for category " + category.name() + " is empty");
    }
    const double share = 1.0 / static_cast<double>(forms.size());
    for (const std::string& form : forms) mass[category][form] = share;
  }
  return ReplacementPolicy(PolicyKind::kUniform, std::move(mass));
}

ReplacementPolicy FrequencyPolicy(const CategoryLexicon& lexicon) {
  if (lexicon.empty()) {
    throw std::invalid_argument("frequency policy needs a non-empty lexicon");
  }
  std::map<EntityCategory, std::map<std::string, long double>> weights;
  for (const auto& [category, table] : lexicon.counts) {
    if (table.empty()) {
      throw std::invalid_argument("lexicon for category " + category.name() + " is empty");
    }
    for (const auto& [form, count] : table) {
      if (count == 0) {
        throw std::invalid_argument("lexicon count for \"" + form + "\" in category " +
                                    category.name() + " is zero");
      }
      weights[category][form] = static_cast<long double>(count);
    }
  }
  return ReplacementPolicy(PolicyKind::kFrequency, NormalizeCounts(weights));
}

ReplacementPolicy GazetteerPolicy(std::istream& in) {
  std::map<EntityCategory, std::map<std::string, long double>> weights;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = SplitChar(line, '\t');
    if (fields.size() != 3) {
      throw ParseError(line_number, "expected category<TAB>token<TAB>weight, got " +
                                        std::to_string(fields.size()) + " field(s)");
    }
    EntityCategory category{"UNSET"};
    try {
      category = EntityCategory(fields[0]);
    } catch (const std::invalid_argument& error) {
      throw ParseError(line_number, error.what());
    }
    const std::string& token = fields[1];
    if (token.empty()) throw ParseError(line_number, "empty token");
    double weight = 0;
    const char* begin = fields[2].data();
    const char* end = begin + fields[2].size();
    auto [ptr, ec] = std::from_chars(begin, end, weight);
    if (ec != std::errc() || ptr != end) {
      throw ParseError(line_number, "weight \"" + fields[2] + "\" is not a number");
    }
    if (!(weight > 0) || !std::isfinite(weight)) {
      throw ParseError(line_number, "weight must be strictly positive, got " + fields[2]);
    }
    auto [it, inserted] = weights[category].emplace(token, weight);
    if (!inserted) {
      throw ParseError(line_number,
                       "duplicate entry for \"" + token + "\" in category " + category.name());
    }
  }
  if (weights.empty()) throw ParseError(line_number, "gazetteer contains no entries");
  return ReplacementPolicy(PolicyKind::kGazetteer, NormalizeCounts(weights));
}

ReplacementPolicy GazetteerPolicy(const std::string& text) {
  std::istringstream in(text);
  return GazetteerPolicy(in);
}

double MinMass(const ReplacementPolicy& policy, const PrivateVocabulary& vocab,
               const EntityCategory& category) {
  if (!vocab.Covers(category)) {
    throw std::invalid_argument("private vocabulary does not cover category " + category.name());
  }
  double min_mass = 1.0;
  for (const std::string& form : vocab.forms.at(category)) {
    double mass = policy.MassAt(category, form);
    if (mass < min_mass) min_mass = mass;
  }
  return min_mass;
}

}  // namespace textdp
