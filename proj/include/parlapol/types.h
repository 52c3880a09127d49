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

#ifndef PARLAPOL_TYPES_H_
#define PARLAPOL_TYPES_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parlapol/date.h"

namespace parlapol {

enum class Group { kCoalition, kOpposition, kOther };
enum class Role { kRegular, kChairperson, kGuest };

const char* to_string(Group g);
const char* to_string(Role r);
std::optional<Group> group_from_string(std::string_view s);
std::optional<Role> role_from_string(std::string_view s);

struct Affiliation {
  std::string term_id;
  std::string party_id;
  Group group = Group::kOther;
  Role role = Role::kRegular;
  Date from_date;
  std::optional<Date> to_date;  // absent = open interval

  bool contains(const Date& d) const {
    return from_date <= d && (!to_date || d <= *to_date);
  }
};

struct MpRecord {
  std::string mp_id;
  std::string full_name;
  std::vector<std::string> name_forms;  // includes orderings from metadata
  std::vector<Affiliation> affiliations;
};

// Person named-entity span; offsets are bytes into the sentence text and
// surface equals text.substr(start, end - start).
struct MentionSpan {
  std::string surface;
  size_t start = 0;
  size_t end = 0;
};

struct Sentence {
  std::string text;
  std::vector<MentionSpan> mentions;
};

struct Speech {
  std::string speech_id;
  std::optional<std::string> speaker_mp_id;
  std::string term_id;
  std::optional<Date> date;
  std::vector<Sentence> sentences;

  size_t mention_count() const {
    size_t n = 0;
    for (const auto& s : sentences) n += s.mentions.size();
    return n;
  }
  size_t word_count() const;
};

struct Corpus {
  std::string parliament_code;
  std::vector<MpRecord> roster;
  std::vector<Speech> speeches;
};

// Hash index over an immutable roster. Build once, share read-only.
class RosterLookup {
 public:
  RosterLookup() = default;
  explicit RosterLookup(const std::vector<MpRecord>& roster);

  const MpRecord* find(const std::string& mp_id) const;

  // Affiliation whose (term_id, [from,to]) covers the query, or nullptr.
  const Affiliation* affiliation_at(const std::string& mp_id,
                                    const std::string& term_id,
                                    const Date& date) const;

  // Group of the covering affiliation; nullopt when no interval matches.
  std::optional<Group> group_of(const std::string& mp_id,
                                const std::string& term_id,
                                const Date& date) const;

 private:
  std::unordered_map<std::string, const MpRecord*> by_id_;
};

// Affiliation invariants: from <= to, and within one (mp, term) at most
// one interval covers any date. Throws kValidation with the offending ids.
void validate_roster(const std::vector<MpRecord>& roster);

// Structural corpus checks: roster validity, unique speech ids, mention
// span offsets. Returns warnings (e.g. unknown speaker references).
std::vector<std::string> validate_corpus(const Corpus& corpus);

}  // namespace parlapol

#endif  // PARLAPOL_TYPES_H_
