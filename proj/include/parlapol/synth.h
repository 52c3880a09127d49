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

#ifndef PARLAPOL_SYNTH_H_
#define PARLAPOL_SYNTH_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parlapol/types.h"

namespace parlapol {

// Generator configuration, loadable from a flat key=value file. Scores are
// drawn as normal noise around planted group means and clamped to [0,5];
// speeches that mention an out-group MP are shifted down by `delta`.
struct SynthConfig {
  std::string parliament_code = "SYN";
  std::string term_id = "T1";
  int n_coalition = 0;
  int n_opposition = 0;
  int n_other = 0;
  int speeches_per_mp = 0;   // used when speeches_min/max are not set
  int speeches_min = 0;      // per-MP activity drawn uniformly from
  int speeches_max = 0;      // [speeches_min, speeches_max] when max > 0
  int sentences_per_speech = 6;
  double base_mean_coalition = 2.8;
  double base_mean_opposition = 2.6;
  double delta = 0.0;
  double mention_probability = 0.5;
  double noise = 0.1;
  // Monotone sentiment shift in [-slope, +slope] across the activity range.
  double activity_sentiment_slope = 0.0;
  // Mutually-mentioning pairs with coupled per-direction means:
  // mu_ba = baseline + coupling * (mu_ab - baseline) + noise.
  int reciprocity_pairs = 0;
  double reciprocity_coupling = 0.0;
  double reciprocity_baseline = 2.5;
  double reciprocity_mean_spread = 0.5;
  int reciprocity_speeches_per_direction = 5;

  static SynthConfig from_file(const std::string& path);
  static SynthConfig from_string(std::string_view text);
  void validate() const;  // throws kConfig
};

struct PairTruth {
  std::string mp_a;
  std::string mp_b;
  double mu_ab = 0.0;
  double mu_ba = 0.0;
};

struct SynthResult {
  Corpus corpus;
  std::map<std::string, double> scores;   // planted per-speech truth
  std::vector<PairTruth> pair_truth;
  std::map<std::string, double> mp_shift;  // activity-linked shift per MP
};

// Deterministic for a given (config, seed): identical corpora byte for
// byte, independent of platform thread count.
SynthResult generate_synthetic(const SynthConfig& config, uint64_t seed);

}  // namespace parlapol

#endif  // PARLAPOL_SYNTH_H_
