// Copyright 2026 parlapol authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARLAPOL_SENTIMENT_H_
#define PARLAPOL_SENTIMENT_H_

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "parlapol/types.h"

namespace parlapol {

enum class ScoreSource { kExternal, kLexicon };

const char* to_string(ScoreSource s);

struct SentimentScore {
  std::string speech_id;
  double score = 2.5;  // always in [0, 5]
  ScoreSource source = ScoreSource::kExternal;
};

// Word lists for the built-in fallback scorer. positive and negative must
// be disjoint (checked by the loader).
struct Lexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
};

// Plain text, one lowercase token per line, sections introduced by
// "#positive" / "#negative" lines.
Lexicon load_lexicon(const std::string& path);
Lexicon parse_lexicon(std::string_view text);

// Sentences [1 .. n-2] joined with single spaces; first and last sentences
// are procedural boilerplate and never contribute to scoring. Throws
// kTooShortToTrim below 3 sentences (unreachable after the length filter).
std::string trim_procedural(const Speech& speech);

// P = positive-token count, N = negative-token count over lowercased
// maximal alphabetic runs: clamp(2.5 + 2.5*(P-N)/max(1,P+N), 0, 5).
double score_lexicon(std::string_view text, const Lexicon& lexicon);

struct ScoredSpeech {
  const Speech* speech = nullptr;  // borrowed from the input corpus
  double score = 2.5;
  ScoreSource source = ScoreSource::kExternal;
};

struct AttachResult {
  std::vector<ScoredSpeech> scored;  // sorted by speech_id
  size_t unscored = 0;               // dropped: no external entry, no lexicon
};

// External scores win over the lexicon; lexicon scoring runs on the
// trimmed text. Never invents speeches: output is a subset of the input.
AttachResult attach_scores(const Corpus& corpus,
                           const std::map<std::string, double>* external,
                           const Lexicon* lexicon, int threads = 0);

}  // namespace parlapol

#endif  // PARLAPOL_SENTIMENT_H_
