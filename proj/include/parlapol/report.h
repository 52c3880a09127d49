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

#ifndef PARLAPOL_REPORT_H_
#define PARLAPOL_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parlapol/filter.h"
#include "parlapol/mention.h"
#include "parlapol/polarization.h"
#include "parlapol/sentiment.h"
#include "parlapol/stats.h"

namespace parlapol {

// Streaming JSON writer with a fixed layout contract: two-space indent,
// keys emitted in the order the caller provides (we always pass them
// sorted), and doubles rendered at exactly four decimal places. Output is
// byte-stable across runs, which the golden-file tests rely on.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(const std::string& s);
  void value(const char* s);
  void value(double d);
  void value_int(long long v);
  void value(bool b);
  void value_null();

 private:
  void prefix();
  void indent();
  static std::string escape(const std::string& s);

  std::ostream& out_;
  struct Level {
    bool is_object = false;
    bool first = true;
    bool key_pending = false;
  };
  std::vector<Level> stack_;
};

// Everything cmd_analyze derives from one corpus; the inputs for both the
// JSON report and the CSV bundle.
struct AnalysisBundle {
  std::string parliament_code;
  FilterCounts filter_counts;
  size_t unscored = 0;
  std::vector<ScoredSpeech> scored;  // borrowed from `corpus`
  GroupScores groups;
  DirectedDistributions directed;
  std::vector<MpProfile> profiles;
  ActivityCorrelations correlations;
  std::optional<ReciprocityResult> reciprocity;
  std::string reciprocity_error;
  MentionStats mention_statistics;
  // Table-1-style counters.
  size_t speeches_coalition = 0;
  size_t speeches_opposition = 0;
  size_t mps_coalition = 0;
  size_t mps_opposition = 0;
  double words_per_speech = 0.0;
  // Echoed parameters.
  int match_threshold = 100;
  size_t min_mentions = 3;
  int min_per_direction = 1;
  bool keep_diacritics = false;
  std::string mp_aggregate = "mean";
};

// Deterministic report document: sorted keys, 4-decimal numbers.
std::string render_analysis_json(const AnalysisBundle& bundle);

// Plot-data CSV bundle.
void write_distributions_csv(const AnalysisBundle& bundle, std::ostream& out);
void write_histograms_csv(const AnalysisBundle& bundle, std::ostream& out,
                          int bins);
void write_profiles_csv(const AnalysisBundle& bundle, std::ostream& out);
void write_reciprocity_pairs_csv(const AnalysisBundle& bundle,
                                 std::ostream& out);
void write_summary_csv(const AnalysisBundle& bundle, std::ostream& out);
void write_mention_stats_csv(const std::string& parliament_code,
                             const MentionStats& stats, std::ostream& out);

}  // namespace parlapol

#endif  // PARLAPOL_REPORT_H_
