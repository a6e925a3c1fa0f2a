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

#include "textdp/privacy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "textdp/strings.h"

namespace textdp {
namespace {

using nlohmann::json;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void CheckProbability(double value, const char* what) {
  if (!(value >= 0 && value <= 1)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                FormatDouble(value));
  }
}

json EpsilonJson(double epsilon) {
  if (std::isinf(epsilon)) return json("inf");
  return json(epsilon);
}

}  // namespace

double Epsilon(double p, double pi_min) {
  CheckProbability(p, "p");
  CheckProbability(pi_min, "pi_min");
  // At p = 1 every output is a policy draw regardless of the original, so the
  // two output distributions coincide even when some mass is zero.
  if (p == 1) return 0;
  if (p == 0) return kInfinity;
  if (pi_min == 0) return kInfinity;
  // log((1 - p + p*m) / (p*m)) == log1p((1 - p) / (p*m)), which stays
  // accurate when the ratio is close to 1.
  return std::log1p((1 - p) / (p * pi_min));
}

double MinPolicyMassForEpsilon(double p, double target_eps) {
  if (!(p > 0 && p < 1)) {
    throw std::invalid_argument("p must lie strictly inside (0, 1), got " + FormatDouble(p));
  }
  if (!(target_eps > 0) || !std::isfinite(target_eps)) {
    throw std::invalid_argument("target epsilon must be positive and finite, got " +
                                FormatDouble(target_eps));
  }
  return (1 - p) / (p * std::expm1(target_eps));
}

double EffectiveP(double configured_p, double identifier_recall) {
  CheckProbability(configured_p, "p");
  CheckProbability(identifier_recall, "recall");
  return configured_p * identifier_recall;
}

double EmpiricalEpsilonOracle(double p, const ReplacementPolicy& policy,
                              const PrivateVocabulary& vocab, const EntityCategory& category) {
  CheckProbability(p, "p");
  if (!vocab.Covers(category)) {
    throw std::invalid_argument("private vocabulary does not cover category " + category.name());
  }

  const std::set<std::string>& originals = vocab.forms.at(category);
  std::set<std::string> outputs = originals;
  if (policy.Covers(category)) {
    for (const auto& [token, mass] : policy.DistributionFor(category)) outputs.insert(token);
  }
  if (originals.size() + outputs.size() > kOracleSizeGuard) {
    throw std::invalid_argument("oracle refuses vocabularies this large (" +
                                std::to_string(originals.size() + outputs.size()) + " > " +
                                std::to_string(kOracleSizeGuard) + " tokens)");
  }

  // Exact output distribution for original t: Pr[o | t] = p*pi(o) + (1-p)*[o == t].
  auto probability = [&](const std::string& output, const std::string& original) {
    double mass = p * policy.MassAt(category, output);
    if (output == original) mass += 1 - p;
    return mass;
  };

  double worst = 0;
  for (const std::string& t1 : originals) {
    for (const std::string& t2 : originals) {
      if (t1 == t2) continue;
      for (const std::string& output : outputs) {
        double pr1 = probability(output, t1);
        double pr2 = probability(output, t2);
        if (pr1 == 0 && pr2 == 0) continue;  // Output impossible under both.
        if (pr1 == 0 || pr2 == 0) return kInfinity;
        worst = std::max(worst, std::fabs(std::log(pr1 / pr2)));
      }
    }
  }
  return worst;
}

BoundCheck VerifyBound(double p, const ReplacementPolicy& policy, const PrivateVocabulary& vocab,
                       const EntityCategory& category) {
  BoundCheck check;
  check.theoretical = Epsilon(p, MinMass(policy, vocab, category));
  check.empirical = EmpiricalEpsilonOracle(p, policy, vocab, category);
  if (std::isinf(check.theoretical) || std::isinf(check.empirical)) {
    check.pass = std::isinf(check.theoretical) && std::isinf(check.empirical);
  } else {
    check.pass = std::fabs(check.theoretical - check.empirical) <= kVerifyTolerance;
  }
  return check;
}

PrivacyReport MakePrivacyReport(std::string strategy, double p, const ReplacementPolicy& policy,
                                const PrivateVocabulary& vocab, bool guarantee_void) {
  CheckProbability(p, "p");
  PrivacyReport report;
  report.strategy = std::move(strategy);
  report.p = p;
  report.delta = 0;
  report.guarantee_void = guarantee_void;
  report.overall_epsilon = 0;
  for (const auto& [category, forms] : vocab.forms) {
    if (forms.empty()) continue;
    CategoryPrivacy entry;
    entry.min_mass = MinMass(policy, vocab, category);
    entry.epsilon = Epsilon(p, entry.min_mass);
    report.overall_epsilon = std::max(report.overall_epsilon, entry.epsilon);
    report.per_category.emplace(category, entry);
  }
  return report;
}

PrivacyReport AdjustForRecall(const PrivacyReport& report, double recall) {
  CheckProbability(recall, "recall");
  PrivacyReport adjusted = report;
  adjusted.recall_adjusted = true;
  adjusted.configured_p = report.configured_p.value_or(report.p);
  adjusted.recall = recall;
  adjusted.p = EffectiveP(*adjusted.configured_p, recall);
  adjusted.overall_epsilon = 0;
  for (auto& [category, entry] : adjusted.per_category) {
    entry.epsilon = Epsilon(adjusted.p, entry.min_mass);
    adjusted.overall_epsilon = std::max(adjusted.overall_epsilon, entry.epsilon);
  }
  return adjusted;
}

void WriteReport(const PrivacyReport& report, std::ostream& out) {
  json per_category = json::array();
  for (const auto& [category, entry] : report.per_category) {
    per_category.push_back({{"name", category.name()},
                            {"min_mass", entry.min_mass},
                            {"epsilon", EpsilonJson(entry.epsilon)}});
  }
  json body = {{"strategy", report.strategy},
               {"p", report.p},
               {"per_category", std::move(per_category)},
               {"overall_epsilon", EpsilonJson(report.overall_epsilon)},
               {"delta", report.delta},
               {"guarantee_void", report.guarantee_void}};
  if (report.recall_adjusted) {
    body["recall_adjusted"] = true;
    body["configured_p"] = report.configured_p.value_or(report.p);
    body["recall"] = report.recall.value_or(1.0);
  }
  out << body.dump(2) << '\n';
}

std::string WriteReport(const PrivacyReport& report) {
  std::ostringstream out;
  WriteReport(report, out);
  return out.str();
}

}  // namespace textdp
