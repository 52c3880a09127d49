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

#include "parlapol/jsonl.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "parlapol/error.h"

namespace parlapol {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(size_t line, const std::string& msg) {
  throw Error(ErrorCode::kValidation,
              "line " + std::to_string(line) + ": " + msg);
}

json parse_line(const std::string& line, size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " +
                                       std::string(e.what()));
  }
}

std::string require_string(const json& j, const char* field, size_t line) {
  auto it = j.find(field);
  if (it == j.end()) fail(line, std::string("missing field ") + field);
  if (!it->is_string())
    fail(line, std::string("field ") + field + " must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const char* field,
                                           size_t line) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    fail(line, std::string("field ") + field + " must be a string or null");
  return it->get<std::string>();
}

Date require_date(const json& j, const char* field, size_t line) {
  auto s = require_string(j, field, line);
  auto d = parse_date(s);
  if (!d) fail(line, std::string("field ") + field + " is not a valid date");
  return *d;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  return out;
}

Affiliation parse_affiliation(const json& j, size_t line) {
  if (!j.is_object()) fail(line, "affiliation must be an object");
  Affiliation a;
  a.term_id = require_string(j, "term_id", line);
  a.party_id = require_string(j, "party_id", line);
  const auto group = group_from_string(require_string(j, "group", line));
  if (!group) fail(line, "field group must be coalition|opposition|other");
  a.group = *group;
  const auto role = role_from_string(require_string(j, "role", line));
  if (!role) fail(line, "field role must be regular|chairperson|guest");
  a.role = *role;
  a.from_date = require_date(j, "from_date", line);
  if (auto to = optional_string(j, "to_date", line)) {
    auto d = parse_date(*to);
    if (!d) fail(line, "field to_date is not a valid date");
    a.to_date = *d;
  }
  return a;
}

json affiliation_to_json(const Affiliation& a) {
  json j;
  j["term_id"] = a.term_id;
  j["party_id"] = a.party_id;
  j["group"] = to_string(a.group);
  j["role"] = to_string(a.role);
  j["from_date"] = format_date(a.from_date);
  if (a.to_date)
    j["to_date"] = format_date(*a.to_date);
  else
    j["to_date"] = nullptr;
  return j;
}

}  // namespace

std::vector<MpRecord> read_roster_stream(std::istream& in) {
  std::vector<MpRecord> roster;
  std::unordered_set<std::string> ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json j = parse_line(line, lineno);
    MpRecord mp;
    mp.mp_id = require_string(j, "mp_id", lineno);
    if (!ids.insert(mp.mp_id).second)
      fail(lineno, "duplicate mp_id " + mp.mp_id);
    mp.full_name = require_string(j, "full_name", lineno);
    if (auto it = j.find("name_forms"); it != j.end()) {
      if (!it->is_array()) fail(lineno, "field name_forms must be an array");
      for (const auto& nf : *it) {
        if (!nf.is_string())
          fail(lineno, "name_forms entries must be strings");
        mp.name_forms.push_back(nf.get<std::string>());
      }
    }
    if (mp.name_forms.empty()) mp.name_forms.push_back(mp.full_name);
    if (auto it = j.find("affiliations"); it != j.end()) {
      if (!it->is_array())
        fail(lineno, "field affiliations must be an array");
      for (const auto& aj : *it)
        mp.affiliations.push_back(parse_affiliation(aj, lineno));
    }
    roster.push_back(std::move(mp));
  }
  validate_roster(roster);
  return roster;
}

std::vector<Speech> read_speeches_stream(std::istream& in) {
  std::vector<Speech> speeches;
  std::unordered_set<std::string> ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json j = parse_line(line, lineno);
    Speech sp;
    sp.speech_id = require_string(j, "speech_id", lineno);
    if (!ids.insert(sp.speech_id).second)
      fail(lineno, "duplicate speech_id " + sp.speech_id);
    sp.speaker_mp_id = optional_string(j, "speaker_mp_id", lineno);
    sp.term_id = require_string(j, "term_id", lineno);
    if (auto ds = optional_string(j, "date", lineno)) {
      auto d = parse_date(*ds);
      if (!d) fail(lineno, "field date is not a valid date");
      sp.date = *d;
    }
    auto sentences = j.find("sentences");
    if (sentences == j.end()) fail(lineno, "missing field sentences");
    if (!sentences->is_array())
      fail(lineno, "field sentences must be an array");
    for (const auto& sj : *sentences) {
      Sentence sent;
      sent.text = require_string(sj, "text", lineno);
      if (auto mit = sj.find("mentions"); mit != sj.end()) {
        if (!mit->is_array()) fail(lineno, "field mentions must be an array");
        for (const auto& mj : *mit) {
          MentionSpan span;
          span.surface = require_string(mj, "surface", lineno);
          auto geti = [&](const char* f) -> size_t {
            auto it = mj.find(f);
            if (it == mj.end())
              fail(lineno, std::string("missing field ") + f);
            if (!it->is_number_unsigned())
              fail(lineno,
                   std::string("field ") + f + " must be a non-negative int");
            return it->get<size_t>();
          };
          span.start = geti("start");
          span.end = geti("end");
          if (!(span.start < span.end) || span.end > sent.text.size() ||
              sent.text.substr(span.start, span.end - span.start) !=
                  span.surface)
            fail(lineno, "mention span does not match sentence text");
          sent.mentions.push_back(std::move(span));
        }
      }
      sp.sentences.push_back(std::move(sent));
    }
    speeches.push_back(std::move(sp));
  }
  return speeches;
}

void write_roster_stream(const std::vector<MpRecord>& roster,
                         std::ostream& out) {
  for (const auto& mp : roster) {
    json j;
    j["mp_id"] = mp.mp_id;
    j["full_name"] = mp.full_name;
    j["name_forms"] = mp.name_forms;
    json affs = json::array();
    for (const auto& a : mp.affiliations) affs.push_back(affiliation_to_json(a));
    j["affiliations"] = std::move(affs);
    out << j.dump() << '\n';
  }
}

void write_speeches_stream(const std::vector<Speech>& speeches,
                           std::ostream& out) {
  for (const auto& sp : speeches) {
    json j;
    j["speech_id"] = sp.speech_id;
    j["speaker_mp_id"] =
        sp.speaker_mp_id ? json(*sp.speaker_mp_id) : json(nullptr);
    j["term_id"] = sp.term_id;
    j["date"] = sp.date ? json(format_date(*sp.date)) : json(nullptr);
    json sentences = json::array();
    for (const auto& sent : sp.sentences) {
      json sj;
      sj["text"] = sent.text;
      json mentions = json::array();
      for (const auto& m : sent.mentions) {
        json mj;
        mj["surface"] = m.surface;
        mj["start"] = m.start;
        mj["end"] = m.end;
        mentions.push_back(std::move(mj));
      }
      sj["mentions"] = std::move(mentions);
      sentences.push_back(std::move(sj));
    }
    j["sentences"] = std::move(sentences);
    out << j.dump() << '\n';
  }
}

std::vector<MpRecord> read_roster_jsonl(const std::string& path) {
  auto in = open_input(path);
  return read_roster_stream(in);
}

void write_roster_jsonl(const std::vector<MpRecord>& roster,
                        const std::string& path) {
  auto out = open_output(path);
  write_roster_stream(roster, out);
}

std::vector<Speech> read_speeches_jsonl(const std::string& path) {
  auto in = open_input(path);
  return read_speeches_stream(in);
}

void write_speeches_jsonl(const std::vector<Speech>& speeches,
                          const std::string& path) {
  auto out = open_output(path);
  write_speeches_stream(speeches, out);
}

Corpus read_corpus_jsonl(const std::string& speeches_path,
                         const std::string& roster_path,
                         const std::string& parliament_code,
                         std::vector<std::string>* warnings) {
  Corpus corpus;
  corpus.parliament_code = parliament_code;
  corpus.roster = read_roster_jsonl(roster_path);
  corpus.speeches = read_speeches_jsonl(speeches_path);
  auto w = validate_corpus(corpus);
  if (warnings) *warnings = std::move(w);
  return corpus;
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& speeches_path,
                        const std::string& roster_path) {
  write_speeches_jsonl(corpus.speeches, speeches_path);
  write_roster_jsonl(corpus.roster, roster_path);
}

std::map<std::string, double> read_scores_stream(std::istream& in) {
  std::map<std::string, double> scores;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json j = parse_line(line, lineno);
    const std::string id = require_string(j, "speech_id", lineno);
    auto it = j.find("score");
    if (it == j.end()) fail(lineno, "missing field score");
    if (!it->is_number()) fail(lineno, "field score must be a number");
    const double score = it->get<double>();
    if (score < 0.0 || score > 5.0)
      fail(lineno, "score out of range [0,5] for speech_id " + id);
    if (!scores.emplace(id, score).second)
      fail(lineno, "duplicate speech_id " + id);
  }
  return scores;
}

std::map<std::string, double> read_scores_jsonl(const std::string& path) {
  auto in = open_input(path);
  return read_scores_stream(in);
}

void write_scores_jsonl(const std::map<std::string, double>& scores,
                        const std::string& path) {
  auto out = open_output(path);
  for (const auto& [id, score] : scores) {
    json j;
    j["speech_id"] = id;
    j["score"] = score;
    out << j.dump() << '\n';
  }
}

}  // namespace parlapol
