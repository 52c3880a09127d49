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

#include "parlapol/sentiment.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "parlapol/error.h"
#include "parlapol/parallel.h"
#include "parlapol/text.h"

namespace parlapol {

const char* to_string(ScoreSource s) {
  return s == ScoreSource::kExternal ? "external" : "lexicon";
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  std::unordered_set<std::string>* section = nullptr;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    if (line == "#positive") {
      section = &lex.positive;
      continue;
    }
    if (line == "#negative") {
      section = &lex.negative;
      continue;
    }
    if (line[0] == '#') continue;  // plain comment
    if (!section)
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(lineno) +
                      ": token before any #positive/#negative section");
    auto toks = letter_tokens(line, /*fold=*/false);
    if (toks.size() != 1)
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(lineno) +
                      ": expected one token per line");
    section->insert(toks[0]);
  }
  for (const auto& w : lex.positive) {
    if (lex.negative.count(w))
      throw Error(ErrorCode::kValidation,
                  "lexicon token in both sections: " + w);
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lexicon(ss.str());
}

std::string trim_procedural(const Speech& speech) {
  const size_t n = speech.sentences.size();
  if (n < 3)
    throw Error(ErrorCode::kTooShortToTrim,
                "speech " + speech.speech_id + " has " + std::to_string(n) +
                    " sentences; trimming needs at least 3");
  std::string out;
  for (size_t i = 1; i + 1 < n; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += speech.sentences[i].text;
  }
  return out;
}

double score_lexicon(std::string_view text, const Lexicon& lexicon) {
  size_t pos = 0, neg = 0;
  for (const auto& tok : letter_tokens(text, /*fold=*/false)) {
    if (lexicon.positive.count(tok)) ++pos;
    if (lexicon.negative.count(tok)) ++neg;
  }
  const double total = std::max<size_t>(1, pos + neg);
  const double score =
      2.5 + 2.5 * (static_cast<double>(pos) - static_cast<double>(neg)) / total;
  return std::clamp(score, 0.0, 5.0);
}

AttachResult attach_scores(const Corpus& corpus,
                           const std::map<std::string, double>* external,
                           const Lexicon* lexicon, int threads) {
  if (!external && !lexicon)
    throw Error(ErrorCode::kConfig,
                "attach_scores: need an external score map or a lexicon");
  const size_t n = corpus.speeches.size();
  // -1 marks "unscored"; scores themselves are always >= 0.
  std::vector<double> score(n, -1.0);
  std::vector<ScoreSource> source(n, ScoreSource::kExternal);
  parallel_for(n, threads, [&](size_t i) {
    const Speech& sp = corpus.speeches[i];
    if (external) {
      auto it = external->find(sp.speech_id);
      if (it != external->end()) {
        score[i] = it->second;
        source[i] = ScoreSource::kExternal;
        return;
      }
    }
    if (lexicon) {
      score[i] = score_lexicon(trim_procedural(sp), *lexicon);
      source[i] = ScoreSource::kLexicon;
    }
  });
  AttachResult out;
  out.scored.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (score[i] < 0.0) {
      ++out.unscored;
      continue;
    }
    out.scored.push_back({&corpus.speeches[i], score[i], source[i]});
  }
  std::sort(out.scored.begin(), out.scored.end(),
            [](const ScoredSpeech& a, const ScoredSpeech& b) {
              return a.speech->speech_id < b.speech->speech_id;
            });
  return out;
}

}  // namespace parlapol
