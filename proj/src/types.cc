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

#include "parlapol/types.h"

#include <algorithm>
#include <unordered_set>

#include "parlapol/error.h"
#include "parlapol/text.h"

namespace parlapol {

const char* to_string(Group g) {
  switch (g) {
    case Group::kCoalition:
      return "coalition";
    case Group::kOpposition:
      return "opposition";
    case Group::kOther:
      return "other";
  }
  return "other";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::kRegular:
      return "regular";
    case Role::kChairperson:
      return "chairperson";
    case Role::kGuest:
      return "guest";
  }
  return "regular";
}

std::optional<Group> group_from_string(std::string_view s) {
  if (s == "coalition") return Group::kCoalition;
  if (s == "opposition") return Group::kOpposition;
  if (s == "other") return Group::kOther;
  return std::nullopt;
}

std::optional<Role> role_from_string(std::string_view s) {
  if (s == "regular") return Role::kRegular;
  if (s == "chairperson") return Role::kChairperson;
  if (s == "guest") return Role::kGuest;
  return std::nullopt;
}

size_t Speech::word_count() const {
  size_t n = 0;
  for (const auto& s : sentences) n += whitespace_word_count(s.text);
  return n;
}

RosterLookup::RosterLookup(const std::vector<MpRecord>& roster) {
  by_id_.reserve(roster.size());
  for (const auto& mp : roster) by_id_.emplace(mp.mp_id, &mp);
}

const MpRecord* RosterLookup::find(const std::string& mp_id) const {
  auto it = by_id_.find(mp_id);
  return it == by_id_.end() ? nullptr : it->second;
}

const Affiliation* RosterLookup::affiliation_at(const std::string& mp_id,
                                                const std::string& term_id,
                                                const Date& date) const {
  const MpRecord* mp = find(mp_id);
  if (!mp) return nullptr;
  for (const auto& a : mp->affiliations) {
    if (a.term_id == term_id && a.contains(date)) return &a;
  }
  return nullptr;
}

std::optional<Group> RosterLookup::group_of(const std::string& mp_id,
                                            const std::string& term_id,
                                            const Date& date) const {
  const Affiliation* a = affiliation_at(mp_id, term_id, date);
  if (!a) return std::nullopt;
  return a->group;
}

void validate_roster(const std::vector<MpRecord>& roster) {
  std::unordered_set<std::string> seen;
  for (const auto& mp : roster) {
    if (!seen.insert(mp.mp_id).second)
      throw Error(ErrorCode::kValidation, "duplicate mp_id: " + mp.mp_id);
    for (const auto& a : mp.affiliations) {
      if (a.to_date && *a.to_date < a.from_date)
        throw Error(ErrorCode::kValidation,
                    "mp " + mp.mp_id + ": affiliation in term " + a.term_id +
                        " has from_date after to_date");
    }
    // Pairwise overlap check within each term.
    for (size_t i = 0; i < mp.affiliations.size(); ++i) {
      for (size_t j = i + 1; j < mp.affiliations.size(); ++j) {
        const auto& a = mp.affiliations[i];
        const auto& b = mp.affiliations[j];
        if (a.term_id != b.term_id) continue;
        const bool disjoint =
            (a.to_date && *a.to_date < b.from_date) ||
            (b.to_date && *b.to_date < a.from_date);
        if (!disjoint)
          throw Error(ErrorCode::kValidation,
                      "mp " + mp.mp_id + ": overlapping affiliations in term " +
                          a.term_id);
      }
    }
  }
}

std::vector<std::string> validate_corpus(const Corpus& corpus) {
  validate_roster(corpus.roster);
  RosterLookup lookup(corpus.roster);
  std::vector<std::string> warnings;
  std::unordered_set<std::string> ids;
  for (const auto& sp : corpus.speeches) {
    if (!ids.insert(sp.speech_id).second)
      throw Error(ErrorCode::kValidation,
                  "duplicate speech_id: " + sp.speech_id);
    for (const auto& sent : sp.sentences) {
      for (const auto& m : sent.mentions) {
        if (!(m.start < m.end) || m.end > sent.text.size() ||
            sent.text.substr(m.start, m.end - m.start) != m.surface)
          throw Error(ErrorCode::kValidation,
                      "speech " + sp.speech_id +
                          ": mention span does not match sentence text");
      }
    }
    if (sp.speaker_mp_id && !lookup.find(*sp.speaker_mp_id))
      warnings.push_back("speech " + sp.speech_id + ": unknown speaker " +
                         *sp.speaker_mp_id);
  }
  return warnings;
}

}  // namespace parlapol
