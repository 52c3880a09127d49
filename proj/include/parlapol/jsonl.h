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

#ifndef PARLAPOL_JSONL_H_
#define PARLAPOL_JSONL_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "parlapol/types.h"

namespace parlapol {

// One JSON object per line. Readers attribute every failure to its 1-based
// line number ("line N: missing field speech_id"). Writers emit keys in
// sorted order so that write -> read -> write is byte-stable.

std::vector<MpRecord> read_roster_jsonl(const std::string& path);
void write_roster_jsonl(const std::vector<MpRecord>& roster,
                        const std::string& path);

std::vector<Speech> read_speeches_jsonl(const std::string& path);
void write_speeches_jsonl(const std::vector<Speech>& speeches,
                          const std::string& path);

// Assembles and validates a corpus from the two files; duplicate speech
// ids and invalid spans are validation errors, unknown speakers warnings.
Corpus read_corpus_jsonl(const std::string& speeches_path,
                         const std::string& roster_path,
                         const std::string& parliament_code,
                         std::vector<std::string>* warnings = nullptr);
void write_corpus_jsonl(const Corpus& corpus, const std::string& speeches_path,
                        const std::string& roster_path);

// Stream variants used by tests.
std::vector<MpRecord> read_roster_stream(std::istream& in);
std::vector<Speech> read_speeches_stream(std::istream& in);
void write_roster_stream(const std::vector<MpRecord>& roster,
                         std::ostream& out);
void write_speeches_stream(const std::vector<Speech>& speeches,
                           std::ostream& out);

// Score file: {"speech_id": ..., "score": ...} per line, range-checked to
// [0,5]; duplicate speech ids rejected.
std::map<std::string, double> read_scores_jsonl(const std::string& path);
std::map<std::string, double> read_scores_stream(std::istream& in);
void write_scores_jsonl(const std::map<std::string, double>& scores,
                        const std::string& path);

}  // namespace parlapol

#endif  // PARLAPOL_JSONL_H_
