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

#include "textdp/synth.h"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "textdp/random.h"
#include "textdp/strings.h"

namespace textdp {
namespace {

// Lexicons are a function of the spec alone; this fixed seed keeps them
// stable across corpus draws so derived policies and exemplars never shift.
constexpr std::uint64_t kLexiconSeed = 0x6c657869636f6e73ULL;
constexpr std::uint64_t kSentenceSalt = 0x73656e74656e6365ULL;
constexpr char kFillerSlot[] = "{F}";
constexpr std::size_t kMaxRetries = 10000;

bool IsSlot(const std::string& token) { return token.size() >= 2 && token.front() == '{'; }

// Slot category name, e.g. "{LOC}" -> "LOC". Throws on malformed braces.
std::string SlotName(const std::string& token) {
  if (token.size() < 3 || token.back() != '}') {
    throw std::invalid_argument("malformed template slot \"" + token + "\"");
  }
  return token.substr(1, token.size() - 2);
}

class WordFactory {
 public:
  explicit WordFactory(std::uint64_t seed) : rng_(seed) {}

  // Reserves a name so generated words can never collide with it, compared
  // case-insensitively because the classifier lowercases its features.
  void Reserve(const std::string& word) { used_.insert(ToLowerAscii(word)); }

  std::string MakeWord(bool capitalized) {
    static const char* kSyllables[] = {"ba", "be", "bi", "bo", "bu", "da", "de", "di", "do",
                                       "du", "fa", "fe", "fi", "fo", "fu", "ga", "ge", "gi",
                                       "go", "gu", "ka", "ke", "ki", "ko", "ku", "la", "le",
                                       "li", "lo", "lu", "ma", "me", "mi", "mo", "mu", "na",
                                       "ne", "ni", "no", "nu", "pa", "pe", "pi", "po", "pu",
                                       "ra", "re", "ri", "ro", "ru", "sa", "se", "si", "so",
                                       "su", "ta", "te", "ti", "to", "tu", "va", "ve", "vi",
                                       "vo", "vu", "za", "ze", "zi", "zo", "zu"};
    constexpr std::size_t kSyllableCount = sizeof(kSyllables) / sizeof(kSyllables[0]);
    for (std::size_t attempt = 0; attempt < kMaxRetries; ++attempt) {
      std::size_t syllables = 2 + rng_() % 2;
      std::string word;
      for (std::size_t i = 0; i < syllables; ++i) word += kSyllables[rng_() % kSyllableCount];
      if (!used_.insert(word).second) continue;
      if (capitalized) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      return word;
    }
    throw std::runtime_error("word factory exhausted its namespace");
  }

 private:
  std::mt19937_64 rng_;
  std::set<std::string> used_;
};

struct Pools {
  std::vector<std::string> fillers;
  std::map<EntityCategory, std::vector<std::string>> lexicons;
};

Pools BuildPools(const SynthSpec& spec) {
  WordFactory factory(kLexiconSeed);
  for (const LabelSpec& label : spec.labels) {
    for (const auto& tokens : label.templates) {
      for (const std::string& token : tokens) {
        if (!IsSlot(token)) factory.Reserve(token);
      }
    }
  }

  Pools pools;
  pools.fillers.reserve(spec.filler_vocabulary);
  for (std::size_t i = 0; i < spec.filler_vocabulary; ++i) {
    pools.fillers.push_back(factory.MakeWord(/*capitalized=*/false));
  }
  for (const auto& [category, size] : spec.lexicon_sizes) {
    std::vector<std::string>& lexicon = pools.lexicons[category];
    lexicon.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      if (i + 1 == size) {
        // Exactly one multi-word form per category, so entity and word
        // granularity genuinely differ.
        std::string first = factory.MakeWord(/*capitalized=*/true);
        std::string second = factory.MakeWord(/*capitalized=*/true);
        lexicon.push_back(first + " " + second);
      } else {
        lexicon.push_back(factory.MakeWord(/*capitalized=*/true));
      }
    }
  }
  return pools;
}

void ValidateSpec(const SynthSpec& spec) {
  if (spec.labels.size() < 2) throw std::invalid_argument("spec needs at least 2 labels");
  if (spec.train_sentences == 0 || spec.test_sentences == 0) {
    throw std::invalid_argument("spec needs positive train and test sentence counts");
  }
  for (const auto& [category, size] : spec.lexicon_sizes) {
    if (size < 2) {
      throw std::invalid_argument("category " + category.name() +
                                  " needs at least 2 surface forms");
    }
  }
  std::set<std::string> label_names;
  bool uses_filler = false;
  for (const LabelSpec& label : spec.labels) {
    if (label.label.empty()) throw std::invalid_argument("empty label name");
    if (!label_names.insert(label.label).second) {
      throw std::invalid_argument("duplicate label \"" + label.label + "\"");
    }
    if (label.templates.empty()) {
      throw std::invalid_argument("label \"" + label.label + "\" has no templates");
    }
    for (const auto& tokens : label.templates) {
      if (tokens.empty()) {
        throw std::invalid_argument("label \"" + label.label + "\" has an empty template");
      }
      bool previous_was_entity = false;
      for (const std::string& token : tokens) {
        if (token.empty() || ContainsWhitespace(token)) {
          throw std::invalid_argument("bad template token \"" + token + "\" in label \"" +
                                      label.label + "\"");
        }
        if (!IsSlot(token)) {
          previous_was_entity = false;
          continue;
        }
        if (token == kFillerSlot) {
          uses_filler = true;
          previous_was_entity = false;
          continue;
        }
        EntityCategory category(SlotName(token));
        if (spec.lexicon_sizes.find(category) == spec.lexicon_sizes.end()) {
          throw std::invalid_argument("template slot " + token +
                                      " names a category without a lexicon");
        }
        if (previous_was_entity) {
          throw std::invalid_argument("adjacent entity slots in a template of label \"" +
                                      label.label + "\"");
        }
        previous_was_entity = true;
      }
    }
  }
  if (uses_filler && spec.filler_vocabulary < 2) {
    throw std::invalid_argument("templates use {F} but the filler vocabulary is smaller than 2");
  }
}

AnnotatedSentence Realize(const std::vector<std::string>& template_tokens, const Pools& pools,
                          const std::string& label, std::mt19937_64& rng) {
  AnnotatedSentence sentence;
  sentence.label = label;
  for (const std::string& token : template_tokens) {
    if (!IsSlot(token)) {
      sentence.tokens.push_back(token);
      continue;
    }
    if (token == kFillerSlot) {
      sentence.tokens.push_back(pools.fillers[rng() % pools.fillers.size()]);
      continue;
    }
    EntityCategory category(SlotName(token));
    const std::vector<std::string>& lexicon = pools.lexicons.at(category);
    const std::string& form = lexicon[rng() % lexicon.size()];
    std::size_t start = sentence.tokens.size();
    for (std::string& piece : SplitWhitespace(form)) {
      sentence.tokens.push_back(std::move(piece));
    }
    sentence.spans.push_back({start, sentence.tokens.size(), category});
  }
  return sentence;
}

}  // namespace

SynthSpec DefaultSynthSpec() {
  SynthSpec spec;
  spec.train_sentences = 2000;
  spec.test_sentences = 400;
  spec.filler_vocabulary = 2000;
  spec.lexicon_sizes = {{kPer, 16}, {kLoc, 16}, {kDate, 16}, {kTime, 16}};

  // Entity slots sit away from sentence edges and are flanked by filler
  // draws on both sides, so token context alone carries no tagging signal.
  // The last two labels share their word material and differ only in the
  // slot category: telling them apart requires entity values.
  auto f = std::string(kFillerSlot);
  spec.labels = {
      {"transport_query",
       {{f, f, "ride", f, f, f, "{LOC}", f, f, f, f, f},
        {f, f, f, "travel", f, f, f, "{DATE}", f, f, f, f, f},
        {f, "ride", f, f, f, f, f, "{LOC}", f, f, f, f, f, f}}},
      {"meeting_setup",
       {{f, f, "agenda", f, f, f, "{PER}", f, f, f, f, f},
        {f, f, f, "meeting", f, f, f, "{DATE}", f, f, f, f, f},
        {f, "meeting", f, f, f, f, f, "{PER}", f, f, f, f, f, f}}},
      {"about_time",
       {{f, f, "detail", f, f, f, "{TIME}", f, f, f, f, f},
        {f, f, f, "info", f, f, f, "{TIME}", f, f, f, f, f},
        {f, "info", f, f, f, f, f, "{TIME}", f, f, f, f, f, f}}},
      {"about_place",
       {{f, f, "detail", f, f, f, "{LOC}", f, f, f, f, f},
        {f, f, f, "info", f, f, f, "{LOC}", f, f, f, f, f},
        {f, "info", f, f, f, f, f, "{LOC}", f, f, f, f, f, f}}},
  };
  return spec;
}

SynthCorpora GenSyntheticCorpus(const SynthSpec& spec, std::uint64_t seed) {
  ValidateSpec(spec);
  Pools pools = BuildPools(spec);

  std::mt19937_64 rng(MixBits(seed ^ kSentenceSalt));
  std::set<std::string> seen;

  SynthCorpora out;
  out.train.name = "synthetic-train";
  out.test.name = "synthetic-test";

  const std::size_t total = spec.train_sentences + spec.test_sentences;
  for (std::size_t i = 0; i < total; ++i) {
    const LabelSpec& label = spec.labels[i % spec.labels.size()];
    AnnotatedSentence sentence;
    bool fresh = false;
    for (std::size_t attempt = 0; attempt < kMaxRetries && !fresh; ++attempt) {
      const auto& template_tokens = label.templates[rng() % label.templates.size()];
      sentence = Realize(template_tokens, pools, label.label, rng);
      fresh = seen.insert(JoinTokens(sentence.tokens)).second;
    }
    if (!fresh) {
      throw std::invalid_argument("spec is too small to generate " + std::to_string(total) +
                                  " distinct sentences");
    }
    ValidateSentence(sentence);
    Corpus& target = i < spec.train_sentences ? out.train : out.test;
    target.sentences.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace textdp
