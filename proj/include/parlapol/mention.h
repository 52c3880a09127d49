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

#ifndef PARLAPOL_MENTION_H_
#define PARLAPOL_MENTION_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parlapol/types.h"

namespace parlapol {

enum class ResolutionStatus {
  kResolved,
  kNoMention,
  kNoMatch,
  kMultipleMps,
  kSelfMention,
  kMixedGroupsExcluded,
};

const char* to_string(ResolutionStatus s);

enum class GroupRelation { kInGroup, kOutGroup };

const char* to_string(GroupRelation r);

struct MentionCandidate {
  std::string surface;
  std::string mp_id;
  int score = 0;  // token_set_ratio, 0-100
};

struct MentionResolution {
  std::string speech_id;
  std::vector<MentionCandidate> candidates;
  ResolutionStatus status = ResolutionStatus::kNoMention;
  std::optional<std::string> target_mp_id;  // set iff status == kResolved
  // Set iff resolved and both speaker and target are Coalition/Opposition.
  std::optional<GroupRelation> relation;
  std::optional<std::string> speaker_mp_id;
};

// Name-form index over the roster, one token-set key per (term, name form).
// Threshold 100 is an exact token-set lookup; lower thresholds fall back
// to a ratio scan over MPs active in the term. Build once, immutable.
class RosterIndex {
 public:
  RosterIndex(const std::vector<MpRecord>& roster, bool keep_diacritics);

  struct Match {
    std::string mp_id;
    int score = 0;  // best token_set_ratio over the MP's name forms
  };

  // MPs active in (term_id, date) whose best token_set_ratio over their
  // name forms reaches `threshold`. Sorted by mp_id, deduplicated.
  std::vector<Match> match(const std::string& surface,
                           const std::string& term_id, const Date& date,
                           int threshold) const;

  bool keep_diacritics() const { return keep_diacritics_; }

 private:
  struct Entry {
    const MpRecord* mp;
    std::vector<std::set<std::string>> form_tokens;
  };
  struct TermIndex {
    std::vector<Entry> entries;
    std::map<std::string, std::vector<const MpRecord*>> exact;  // set key
  };
  std::map<std::string, TermIndex> terms_;
  bool keep_diacritics_ = false;
};

// One-shot form of RosterIndex::match.
std::vector<std::string> match_mention(const std::string& surface,
                                       const std::vector<MpRecord>& roster,
                                       const std::string& term_id,
                                       const Date& date, int threshold,
                                       bool keep_diacritics = false);

// Applies the exclusion rules over the union of matched MPs across every
// mention span of the speech. Mixed coalition+opposition matches are
// checked before the exactly-one rule. Requires a dated speech with a
// known speaker (guaranteed after filtering).
MentionResolution resolve_speech(const Speech& speech,
                                 const RosterLookup& lookup,
                                 const RosterIndex& index, int threshold);

std::vector<MentionResolution> resolve_all(const Corpus& corpus,
                                           int threshold,
                                           bool keep_diacritics = false,
                                           int threads = 0);

struct MentionStats {
  size_t all_speeches = 0;
  size_t resolved = 0;
  double resolved_pct = 0.0;  // one-decimal percentage
  std::map<ResolutionStatus, size_t> by_status;
};

MentionStats mention_stats(const std::vector<MentionResolution>& resolutions);

// Uniform sample without replacement of the Resolved items, deterministic
// for a given seed. When n exceeds the resolved count, returns everything
// and sets *truncated.
std::vector<MentionResolution> sample_for_review(
    const std::vector<MentionResolution>& resolutions, size_t n,
    uint64_t seed, bool* truncated = nullptr);

// CSV: speech_id,surface,matched_mp_id,match_score,speaker_mp_id,relation
void write_review_csv(const std::vector<MentionResolution>& sample,
                      std::ostream& out);

}  // namespace parlapol

#endif  // PARLAPOL_MENTION_H_
