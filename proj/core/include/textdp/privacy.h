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

#ifndef TEXTDP_PRIVACY_H_
#define TEXTDP_PRIVACY_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "textdp/policy.h"

namespace textdp {

// Exact (epsilon, 0) accounting for the replacement mechanism: a sensitive
// unit is replaced with probability p by a draw from a token-independent
// policy pi. The privacy loss between corpora differing in one token is
//
//   epsilon = max over originals t of log((1 - p + p*pi(t)) / (p*pi(t)))
//
// and the max is attained at the minimum policy mass over the private
// vocabulary. All functions here are pure and freely parallel.

// Agreement required between the closed form and the exhaustive oracle.
inline constexpr double kVerifyTolerance = 1e-9;

// The oracle enumerates |vocab| * (|vocab| - 1) ordered pairs against
// |vocab union support| outputs; refuse anything past this combined size.
inline constexpr std::size_t kOracleSizeGuard = 1000;

// Closed-form epsilon at the worst-case mass `pi_min`.
//   p = 1            -> 0 (an unreplaced token can never be observed)
//   p = 0            -> +infinity
//   pi_min = 0, p<1  -> +infinity (some original is impossible to emit)
// Throws std::invalid_argument outside [0, 1].
double Epsilon(double p, double pi_min);

// Algebraic inverse of Epsilon in pi_min: the smallest per-token mass a
// policy must put on every private token so that the mechanism at `p` meets
// `target_eps`. Requires 0 < p < 1 and target_eps > 0. Whenever the result
// is a valid mass (target_eps >= log(1/p)) it round-trips through Epsilon to
// target_eps within 1e-9; a result above 1 means no policy can reach the
// target at this p.
double MinPolicyMassForEpsilon(double p, double target_eps);

// When sensitive tokens are found by an imperfect identifier, its recall
// bounds the probability that a token is replaced at all.
double EffectiveP(double configured_p, double identifier_recall);

// Brute-force verifier. Enumerates every pair of neighboring single-token
// datasets (t1, t2) from the vocabulary and every possible output token, and
// returns the exact maximum log-ratio of output probabilities,
//   Pr[t | original o] = p*pi(t) + (1-p)*[t == o],
// computed in closed form rather than sampled. Returns +infinity when some
// output is possible under one dataset and impossible under the other.
// Guards against blowup: throws when |vocab + support| > 1000.
double EmpiricalEpsilonOracle(double p, const ReplacementPolicy& policy,
                              const PrivateVocabulary& vocab,
                              const EntityCategory& category);

struct BoundCheck {
  double theoretical = 0;
  double empirical = 0;
  bool pass = false;
};

// pass <=> |theoretical - empirical| <= 1e-9, or both infinite.
BoundCheck VerifyBound(double p, const ReplacementPolicy& policy,
                       const PrivateVocabulary& vocab, const EntityCategory& category);

struct CategoryPrivacy {
  double min_mass = 0;
  double epsilon = 0;
};

// The privacy statement for one configured strategy: per-category epsilon
// plus their maximum as the worst case. delta is always 0. guarantee_void is
// set when the run used consistent same-surrogate mapping, which the
// closed-form bound does not cover.
struct PrivacyReport {
  std::string strategy;
  double p = 0;
  double delta = 0;
  std::map<EntityCategory, CategoryPrivacy> per_category;
  double overall_epsilon = 0;
  bool guarantee_void = false;

  // Set when the reported p is configured_p * recall of an automatic
  // identifier rather than the configured value itself.
  bool recall_adjusted = false;
  std::optional<double> configured_p;
  std::optional<double> recall;
};

PrivacyReport MakePrivacyReport(std::string strategy, double p,
                                const ReplacementPolicy& policy,
                                const PrivateVocabulary& vocab, bool guarantee_void);

// Recomputes the report at EffectiveP(report.p, recall) and marks it
// recall-adjusted. Loudly opt-in: silently weakening epsilon would be a
// reporting hazard.
PrivacyReport AdjustForRecall(const PrivacyReport& report, double recall);

// JSON object with fields strategy, p, per_category (name, min_mass,
// epsilon), overall_epsilon, delta, guarantee_void. Infinite epsilon is
// serialized as the string "inf".
void WriteReport(const PrivacyReport& report, std::ostream& out);
std::string WriteReport(const PrivacyReport& report);

}  // namespace textdp

#endif  // TEXTDP_PRIVACY_H_
