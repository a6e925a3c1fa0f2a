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

#ifndef TEXTDP_CORPUS_H_
#define TEXTDP_CORPUS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace textdp {

// Entity category identifier such as PER, LOC, ORG, DATE, TIME. The canonical
// five are predefined below, but any non-empty whitespace-free name works.
class EntityCategory {
 public:
  explicit EntityCategory(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const EntityCategory&, const EntityCategory&) = default;
  friend auto operator<=>(const EntityCategory&, const EntityCategory&) = default;

 private:
  std::string name_;
};

inline const EntityCategory kPer{"PER"};
inline const EntityCategory kLoc{"LOC"};
inline const EntityCategory kOrg{"ORG"};
inline const EntityCategory kDate{"DATE"};
inline const EntityCategory kTime{"TIME"};

// Half-open token range [start, end) tagged with a category.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  EntityCategory category{"UNSET"};

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

// A tokenized sentence with non-overlapping entity spans, sorted by start,
// and an optional class label (intent / dialog act).
struct AnnotatedSentence {
  std::vector<std::string> tokens;
  std::vector<EntitySpan> spans;
  std::optional<std::string> label;

  friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

// Throws std::invalid_argument when the sentence breaks an invariant:
// empty token list, whitespace inside a token, or bad spans.
void ValidateSentence(const AnnotatedSentence& sentence);

struct Corpus {
  std::string name;
  std::vector<AnnotatedSentence> sentences;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class Granularity { kWord, kEntity };

std::string_view ToString(Granularity granularity);

// Per-category occurrence counts of entity surface forms. At word granularity
// each in-span token counts once per occurrence; at entity granularity each
// full span string (tokens joined by single spaces) counts once.
struct CategoryLexicon {
  std::map<EntityCategory, std::map<std::string, std::uint64_t>> counts;

  bool empty() const { return counts.empty(); }
  std::uint64_t Total(const EntityCategory& category) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

// --- CoNLL format -----------------------------------------------------------
//
// UTF-8, one `token<TAB>tag` pair per line, sentences separated by a blank
// line. Tags follow BIO2: B-CAT opens a span, I-CAT continues it, O is
// outside. A lone I-CAT (no matching open span before it) is coerced to B-CAT
// and reported through `warnings`. A line with the wrong number of tab fields
// is a ParseError carrying the 1-based line number. Empty input is an empty
// corpus.

Corpus ParseConll(std::istream& in, std::vector<ParseWarning>* warnings = nullptr,
                  std::string name = "");
Corpus ParseConll(const std::string& text, std::vector<ParseWarning>* warnings = nullptr,
                  std::string name = "");

// Inverse of ParseConll on its image: each sentence is emitted as
// `token<TAB>tag` lines followed by one blank line, which round-trips
// byte-identically for input already in that canonical form.
void WriteConll(const Corpus& corpus, std::ostream& out);
std::string WriteConll(const Corpus& corpus);

// --- Labeled format ---------------------------------------------------------
//
// UTF-8, one JSON record per line with fields `text` (string), `label`
// (string) and `spans` (array of {start, end, category} over the whitespace
// tokens of `text`). Missing fields and out-of-range spans are ParseErrors
// with the offending 1-based line number.

Corpus ParseLabeled(std::istream& in, std::string name = "");
Corpus ParseLabeled(const std::string& text, std::string name = "");

void WriteLabeled(const Corpus& corpus, std::ostream& out);
std::string WriteLabeled(const Corpus& corpus);

// -----------------------------------------------------------------------------

CategoryLexicon BuildCategoryLexicon(const Corpus& corpus, Granularity granularity);

// Span tokens joined by single spaces, e.g. "Frankfurt Airport".
std::string SpanText(const AnnotatedSentence& sentence, const EntitySpan& span);

// BIO2 tags for a sentence ("O", "B-PER", "I-PER", ...). Adjacent spans of
// the same category yield B-.../B-..., never a spurious I-.
std::vector<std::string> ToBioTags(const AnnotatedSentence& sentence);

// Reconstructs spans from BIO2 tags. Lone I-CAT tags are coerced to B-CAT;
// the positions where that happened are appended to `coerced` when given.
// Throws std::invalid_argument for tags that are not O / B-CAT / I-CAT.
std::vector<EntitySpan> SpansFromBioTags(const std::vector<std::string>& tags,
                                         std::vector<std::size_t>* coerced = nullptr);

}  // namespace textdp

#endif  // TEXTDP_CORPUS_H_
