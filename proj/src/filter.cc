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

#include "parlapol/filter.h"

namespace parlapol {

const char* to_string(DropReason r) {
  switch (r) {
    case DropReason::kTooShort:
      return "too_short";
    case DropReason::kNoSpeaker:
      return "no_speaker";
    case DropReason::kUnknownSpeaker:
      return "unknown_speaker";
    case DropReason::kNoDate:
      return "no_date";
    case DropReason::kNoAffiliation:
      return "no_affiliation";
    case DropReason::kRole:
      return "role";
  }
  return "unknown";
}

FilterResult filter_speeches(const Corpus& corpus) {
  RosterLookup lookup(corpus.roster);
  FilterResult result;
  result.corpus.parliament_code = corpus.parliament_code;
  result.corpus.roster = corpus.roster;
  result.counts.input = corpus.speeches.size();

  auto drop = [&](DropReason r) { ++result.counts.dropped[r]; };

  for (const auto& sp : corpus.speeches) {
    if (sp.sentences.size() < 5) {
      drop(DropReason::kTooShort);
      continue;
    }
    if (!sp.speaker_mp_id) {
      drop(DropReason::kNoSpeaker);
      continue;
    }
    if (!lookup.find(*sp.speaker_mp_id)) {
      drop(DropReason::kUnknownSpeaker);
      continue;
    }
    if (!sp.date) {
      drop(DropReason::kNoDate);
      continue;
    }
    const Affiliation* aff =
        lookup.affiliation_at(*sp.speaker_mp_id, sp.term_id, *sp.date);
    if (!aff) {
      drop(DropReason::kNoAffiliation);
      continue;
    }
    if (aff->role != Role::kRegular) {
      drop(DropReason::kRole);
      continue;
    }
    result.corpus.speeches.push_back(sp);
    ++result.counts.retained;
  }
  return result;
}

std::optional<Group> group_of(const std::vector<MpRecord>& roster,
                              const std::string& mp_id,
                              const std::string& term_id, const Date& date) {
  RosterLookup lookup(roster);
  return lookup.group_of(mp_id, term_id, date);
}

}  // namespace parlapol
