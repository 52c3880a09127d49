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

#ifndef PARLAPOL_POLARIZATION_H_
#define PARLAPOL_POLARIZATION_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parlapol/mention.h"
#include "parlapol/sentiment.h"
#include "parlapol/stats.h"
#include "parlapol/types.h"

namespace parlapol {

// Speaker group to target group. Array order is fixed for reports.
enum class Direction { kC2C = 0, kC2O = 1, kO2O = 2, kO2C = 3 };

const char* to_string(Direction d);

struct GroupScores {
  std::vector<double> coalition;
  std::vector<double> opposition;
  KsResult ks;  // coalition vs opposition
};

// Partitions scores by speaker group at the speech date (Other speakers
// dropped). Throws kMissingGroup when either side ends up empty.
GroupScores group_distributions(const std::vector<ScoredSpeech>& scored,
                                const RosterLookup& lookup);

struct DirectedDistributions {
  std::array<std::vector<double>, 4> scores;  // indexed by Direction
  std::optional<KsResult> ks_coalition;       // C2C vs C2O
  std::optional<KsResult> ks_opposition;      // O2O vs O2C

  const std::vector<double>& of(Direction d) const {
    return scores[static_cast<size_t>(d)];
  }
};

// Routes each Resolved speech with a group relation into exactly one of
// C2C/C2O/O2O/O2C. KS results are absent when a side is empty.
DirectedDistributions directed_distributions(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup);

enum class MpAggregate { kMean, kMedian };

struct MpProfile {
  std::string mp_id;
  Group group = Group::kOther;  // group of the dominant term
  size_t activity = 0;          // speeches visible to the analysis
  double mean_sentiment = 0.0;  // aggregate over all scored speeches
  size_t n_in = 0;
  size_t n_out = 0;
  std::optional<double> in_group_mean;
  std::optional<double> out_group_mean;
  // in_group_mean - out_group_mean; present only when both means are
  // backed by at least `min_mentions` speeches.
  std::optional<double> affective_polarization;
  std::string term_id;  // set when per-term profiles are requested
};

// One profile per MP (or per MP and term with per_term = true). Cross-term
// merging weights by speech counts.
std::vector<MpProfile> mp_profiles(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup, size_t min_mentions,
    MpAggregate aggregate = MpAggregate::kMean, bool per_term = false);

struct CorrOutcome {
  std::optional<CorrResult> result;
  std::string error;  // non-empty when the correlation was not computable
};

struct ActivityCorrelations {
  CorrOutcome activity_vs_sentiment;
  CorrOutcome activity_vs_ap;
};

ActivityCorrelations activity_correlations(
    const std::vector<MpProfile>& profiles);

struct ReciprocityPair {
  std::string mp_a;
  std::string mp_b;
  size_t n_ab = 0;
  size_t n_ba = 0;
  double s_ab = 0.0;  // mean sentiment of a's speeches targeting b
  double s_ba = 0.0;
};

struct ReciprocityResult {
  double rho = 0.0;
  double p_value = 1.0;
  size_t n_pairs = 0;
  int min_per_direction = 1;
  std::vector<ReciprocityPair> pairs;
};

// Spearman over the symmetric point set {(s_ab, s_ba), (s_ba, s_ab)} of
// all unordered pairs with >= min_per_direction resolved speeches each
// way; the p-value uses the unordered pair count. Throws
// kInsufficientPairs below 3 qualifying pairs.
ReciprocityResult reciprocity(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup, int min_per_direction);

// speech_id -> resolution view used by the functions above.
std::map<std::string, const MentionResolution*> index_resolutions(
    const std::vector<MentionResolution>& resolutions);

}  // namespace parlapol

#endif  // PARLAPOL_POLARIZATION_H_
