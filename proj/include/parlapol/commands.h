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

#ifndef PARLAPOL_COMMANDS_H_
#define PARLAPOL_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parlapol/filter.h"
#include "parlapol/mention.h"
#include "parlapol/error.h"
#include "parlapol/report.h"

namespace parlapol {

// Shared configuration for all subcommands; unused fields are ignored by
// commands that do not need them. Data always goes to files under
// out_dir, diagnostics to the stream passed to each command.
struct RunConfig {
  std::string parliament_code = "XX";

  // Inputs: exactly one of tei_dir / corpus_path for ingest; analyze,
  // mentions, score and report consume corpus_path + roster_path.
  std::string tei_dir;
  std::string corpus_path;
  std::string roster_path;
  std::string scores_path;
  std::string lexicon_path;
  std::string synth_config_path;

  // TEI ingest: the subset carries neither a term nor a date, so the term
  // comes from here and dates from YYYY-MM-DD filename stamps (or the
  // override below).
  std::string term_id = "T1";
  std::string date_override;

  int match_threshold = 100;
  int min_mentions = 3;
  int min_per_direction = 1;
  bool keep_diacritics = false;
  bool per_term_profiles = false;
  std::string mp_aggregate = "mean";  // or "median"
  int histogram_bins = 50;
  int review_sample = 0;  // mentions: export a review CSV of this size

  std::string out_dir = ".";
  uint64_t seed = 0;
  int threads = 0;  // 0 = auto
};

struct IngestOutput {
  FilterCounts counts;
  std::vector<std::string> warnings;
  std::string corpus_out;
};

struct ScoreOutput {
  size_t scored = 0;
  size_t unscored = 0;
  size_t unmatched_external = 0;  // score entries matching no speech
  std::string scores_out;
};

struct MentionsOutput {
  MentionStats stats;
  std::string resolutions_out;
  std::string stats_out;
  std::string review_out;  // empty unless review_sample > 0
};

// ingest: TEI dir or corpus JSONL -> filtered corpus + drop counts.
IngestOutput run_ingest(const RunConfig& config, std::ostream& diag);

// score: filtered corpus + external scores and/or lexicon -> scored.jsonl.
ScoreOutput run_score(const RunConfig& config, std::ostream& diag);

// mentions: filtered corpus -> resolutions.jsonl + mention_stats.csv.
MentionsOutput run_mentions(const RunConfig& config, std::ostream& diag);

// analyze: full in-memory pipeline -> analysis.json (returned verbatim).
std::string run_analyze(const RunConfig& config, std::ostream& diag);

// report: full pipeline -> CSV bundle for plotting.
void run_report(const RunConfig& config, std::ostream& diag);

// synth: config + seed -> corpus/roster/scores JSONL + truth.json sidecar.
void run_synth(const RunConfig& config, std::ostream& diag);

// Shared pipeline: load, filter, score, resolve, compute all metrics.
AnalysisBundle build_analysis(const RunConfig& config, Corpus& corpus_storage,
                              std::ostream& diag);

// Exit-code mapping: 0 success, 2 usage/config (kConfig, kIo), 1 data.
int exit_code_for(const Error& e);

}  // namespace parlapol

#endif  // PARLAPOL_COMMANDS_H_
