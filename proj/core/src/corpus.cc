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

#include "textdp/corpus.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "textdp/strings.h"

namespace textdp {
namespace {

using nlohmann::json;

std::string DescribeTag(const std::string& tag) { return "tag \"" + tag + "\""; }

// "B-PER" -> ('B', "PER"). Returns false for anything that is not O / B-CAT /
// I-CAT with a non-empty category.
bool ParseBioTag(const std::string& tag, char* kind, std::string* category) {
  if (tag == "O") {
    *kind = 'O';
    category->clear();
    return true;
  }
  if (tag.size() < 3 || (tag[0] != 'B' && tag[0] != 'I') || tag[1] != '-') return false;
  std::string name = tag.substr(2);
  if (ContainsWhitespace(name)) return false;
  *kind = tag[0];
  *category = std::move(name);
  return true;
}

}  // namespace

EntityCategory::EntityCategory(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("entity category name must be non-empty");
  if (ContainsWhitespace(name_)) {
    throw std::invalid_argument("entity category name must not contain whitespace: \"" + name_ +
                                "\"");
  }
}

void ValidateSentence(const AnnotatedSentence& sentence) {
  if (sentence.tokens.empty()) throw std::invalid_argument("sentence has no tokens");
  for (const std::string& token : sentence.tokens) {
    if (token.empty()) throw std::invalid_argument("sentence contains an empty token");
    if (ContainsWhitespace(token)) {
      throw std::invalid_argument("token contains whitespace: \"" + token + "\"");
    }
  }
  std::size_t previous_end = 0;
  for (const EntitySpan& span : sentence.spans) {
    if (span.start >= span.end) {
      throw std::invalid_argument("span is empty or inverted at token " +
                                  std::to_string(span.start));
    }
    if (span.end > sentence.tokens.size()) {
      throw std::invalid_argument("span ends past the sentence at token " +
                                  std::to_string(span.end));
    }
    if (span.start < previous_end) {
      throw std::invalid_argument("spans overlap or are unsorted at token " +
                                  std::to_string(span.start));
    }
    previous_end = span.end;
  }
}

std::string_view ToString(Granularity granularity) {
  switch (granularity) {
    case Granularity::kWord:
      return "word";
    case Granularity::kEntity:
      return "entity";
  }
  throw std::invalid_argument("unknown granularity");
}

std::uint64_t CategoryLexicon::Total(const EntityCategory& category) const {
  auto it = counts.find(category);
  if (it == counts.end()) return 0;
  std::uint64_t total = 0;
  for (const auto& [form, count] : it->second) total += count;
  return total;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Corpus ParseConll(std::istream& in, std::vector<ParseWarning>* warnings, std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);

  std::vector<std::string> tokens;
  std::vector<std::string> tags;
  std::vector<std::size_t> token_lines;

  auto flush_sentence = [&]() {
    if (tokens.empty()) return;
    AnnotatedSentence sentence;
    sentence.tokens = std::move(tokens);
    std::vector<std::size_t> coerced;
    sentence.spans = SpansFromBioTags(tags, &coerced);
    if (warnings != nullptr) {
      for (std::size_t position : coerced) {
        warnings->push_back({token_lines[position],
                             DescribeTag(tags[position]) + " opens no span, coerced to B"});
      }
    }
    corpus.sentences.push_back(std::move(sentence));
    tokens.clear();
    tags.clear();
    token_lines.clear();
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    std::vector<std::string> fields = SplitChar(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(line_number, "expected token<TAB>tag, got " +
                                        std::to_string(fields.size()) + " field(s)");
    }
    const std::string& token = fields[0];
    const std::string& tag = fields[1];
    if (token.empty()) throw ParseError(line_number, "empty token");
    if (ContainsWhitespace(token)) {
      throw ParseError(line_number, "token contains whitespace: \"" + token + "\"");
    }
    char kind = 0;
    std::string category;
    if (!ParseBioTag(tag, &kind, &category)) {
      throw ParseError(line_number, DescribeTag(tag) + " is not O, B-CAT or I-CAT");
    }
    tokens.push_back(token);
    tags.push_back(tag);
    token_lines.push_back(line_number);
  }
  flush_sentence();
  return corpus;
}

Corpus ParseConll(const std::string& text, std::vector<ParseWarning>* warnings, std::string name) {
  std::istringstream in(text);
  return ParseConll(in, warnings, std::move(name));
}

void WriteConll(const Corpus& corpus, std::ostream& out) {
  for (const AnnotatedSentence& sentence : corpus.sentences) {
    std::vector<std::string> tags = ToBioTags(sentence);
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      out << sentence.tokens[i] << '\t' << tags[i] << '\n';
    }
    out << '\n';
  }
}

std::string WriteConll(const Corpus& corpus) {
  std::ostringstream out;
  WriteConll(corpus, out);
  return out.str();
}

Corpus ParseLabeled(std::istream& in, std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw ParseError(line_number, "not a JSON object");
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      throw ParseError(line_number, "missing string field \"text\"");
    }
    if (!record.contains("label") || !record["label"].is_string()) {
      throw ParseError(line_number, "missing string field \"label\"");
    }
    if (!record.contains("spans") || !record["spans"].is_array()) {
      throw ParseError(line_number, "missing array field \"spans\"");
    }

    AnnotatedSentence sentence;
    sentence.tokens = SplitWhitespace(record["text"].get<std::string>());
    sentence.label = record["label"].get<std::string>();
    for (const json& span_json : record["spans"]) {
      if (!span_json.is_object() || !span_json.contains("start") || !span_json.contains("end") ||
          !span_json.contains("category") || !span_json["start"].is_number_unsigned() ||
          !span_json["end"].is_number_unsigned() || !span_json["category"].is_string()) {
        throw ParseError(line_number, "span needs unsigned start/end and string category");
      }
      EntitySpan span;
      span.start = span_json["start"].get<std::size_t>();
      span.end = span_json["end"].get<std::size_t>();
      try {
        span.category = EntityCategory(span_json["category"].get<std::string>());
      } catch (const std::invalid_argument& error) {
        throw ParseError(line_number, error.what());
      }
      sentence.spans.push_back(std::move(span));
    }
    std::sort(sentence.spans.begin(), sentence.spans.end());
    try {
      ValidateSentence(sentence);
    } catch (const std::invalid_argument& error) {
      throw ParseError(line_number, error.what());
    }
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

Corpus ParseLabeled(const std::string& text, std::string name) {
  std::istringstream in(text);
  return ParseLabeled(in, std::move(name));
}

void WriteLabeled(const Corpus& corpus, std::ostream& out) {
  for (const AnnotatedSentence& sentence : corpus.sentences) {
    json spans = json::array();
    for (const EntitySpan& span : sentence.spans) {
      spans.push_back({{"start", span.start}, {"end", span.end}, {"category", span.category.name()}});
    }
    json record = {{"text", JoinTokens(sentence.tokens)},
                   {"label", sentence.label.value_or("")},
                   {"spans", std::move(spans)}};
    out << record.dump() << '\n';
  }
}

std::string WriteLabeled(const Corpus& corpus) {
  std::ostringstream out;
  WriteLabeled(corpus, out);
  return out.str();
}

CategoryLexicon BuildCategoryLexicon(const Corpus& corpus, Granularity granularity) {
  CategoryLexicon lexicon;
  for (const AnnotatedSentence& sentence : corpus.sentences) {
    for (const EntitySpan& span : sentence.spans) {
      if (granularity == Granularity::kWord) {
        for (std::size_t i = span.start; i < span.end; ++i) {
          ++lexicon.counts[span.category][sentence.tokens[i]];
        }
      } else {
        ++lexicon.counts[span.category][SpanText(sentence, span)];
      }
    }
  }
  return lexicon;
}

std::string SpanText(const AnnotatedSentence& sentence, const EntitySpan& span) {
  std::string text;
  for (std::size_t i = span.start; i < span.end; ++i) {
    if (i > span.start) text += ' ';
    text += sentence.tokens[i];
  }
  return text;
}

std::vector<std::string> ToBioTags(const AnnotatedSentence& sentence) {
  std::vector<std::string> tags(sentence.tokens.size(), "O");
  for (const EntitySpan& span : sentence.spans) {
    tags[span.start] = "B-" + span.category.name();
    for (std::size_t i = span.start + 1; i < span.end; ++i) {
      tags[i] = "I-" + span.category.name();
    }
  }
  return tags;
}

std::vector<EntitySpan> SpansFromBioTags(const std::vector<std::string>& tags,
                                         std::vector<std::size_t>* coerced) {
  std::vector<EntitySpan> spans;
  bool open = false;
  std::size_t open_start = 0;
  std::string open_category;

  auto close = [&](std::size_t end) {
    if (!open) return;
    spans.push_back({open_start, end, EntityCategory(open_category)});
    open = false;
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    char kind = 0;
    std::string category;
    if (!ParseBioTag(tags[i], &kind, &category)) {
      throw std::invalid_argument(DescribeTag(tags[i]) + " is not O, B-CAT or I-CAT");
    }
    switch (kind) {
      case 'O':
        close(i);
        break;
      case 'B':
        close(i);
        open = true;
        open_start = i;
        open_category = category;
        break;
      case 'I':
        if (open && open_category == category) break;  // Continues the span.
        if (coerced != nullptr) coerced->push_back(i);
        close(i);
        open = true;
        open_start = i;
        open_category = category;
        break;
    }
  }
  close(tags.size());
  return spans;
}

}  // namespace textdp
