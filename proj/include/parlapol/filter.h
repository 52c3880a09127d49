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

#ifndef PARLAPOL_FILTER_H_
#define PARLAPOL_FILTER_H_

#include <map>
#include <string>

#include "parlapol/types.h"

namespace parlapol {

// Drop reasons, checked in this order; the first failing check wins.
enum class DropReason {
  kTooShort,        // fewer than 5 sentences
  kNoSpeaker,       // speaker_mp_id unset
  kUnknownSpeaker,  // speaker not in the roster
  kNoDate,          // date missing; affiliation matching needs one
  kNoAffiliation,   // no affiliation interval covers (term, date)
  kRole,            // speaker is a chairperson or guest at that date
};

const char* to_string(DropReason r);

struct FilterCounts {
  size_t input = 0;
  size_t retained = 0;
  std::map<DropReason, size_t> dropped;

  size_t dropped_total() const {
    size_t n = 0;
    for (const auto& [r, c] : dropped) n += c;
    return n;
  }
};

struct FilterResult {
  Corpus corpus;  // retained speeches, input order preserved
  FilterCounts counts;
};

// Keeps speeches with >= 5 sentences whose speaker holds a Regular
// affiliation covering (term_id, date). Total: every input speech is
// either retained or counted under exactly one drop reason.
FilterResult filter_speeches(const Corpus& corpus);

// Group of the affiliation interval matching (term_id, date), or nullopt.
std::optional<Group> group_of(const std::vector<MpRecord>& roster,
                              const std::string& mp_id,
                              const std::string& term_id, const Date& date);

}  // namespace parlapol

#endif  // PARLAPOL_FILTER_H_
