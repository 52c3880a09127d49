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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fixture12.h"
#include "parlapol/error.h"
#include "parlapol/mention.h"
#include "parlapol/synth.h"

using namespace parlapol;

namespace {

const Date kDate{2021, 6, 1};

}  // namespace

TEST_CASE("match_mention basics") {
  auto f = fixture12::build();
  const auto& roster = f.corpus.roster;

  // Exact full name -> single MP.
  CHECK(match_mention("Bruno Lind", roster, "T1", kDate, 100) ==
        std::vector<std::string>{"C2"});
  // Token order and case do not matter.
  CHECK(match_mention("LIND, bruno", roster, "T1", kDate, 100) ==
        std::vector<std::string>{"C2"});
  // Shared full name -> both ids.
  CHECK(match_mention("Finn Berg", roster, "T1", kDate, 100) ==
        std::vector<std::string>{"TW1", "TW2"});
  // Subset token stays below 100: tsr("lind","bruno lind") = 57.
  CHECK(match_mention("Lind", roster, "T1", kDate, 100).empty());
  CHECK(match_mention("Lind", roster, "T1", kDate, 57) ==
        std::vector<std::string>{"C2"});
  CHECK(match_mention("Lind", roster, "T1", kDate, 58).empty());
  // Unknown term or out-of-interval date -> nothing.
  CHECK(match_mention("Bruno Lind", roster, "T9", kDate, 100).empty());
  CHECK(match_mention("Bruno Lind", roster, "T1", Date{2030, 1, 1}, 100)
            .empty());
  CHECK_THROWS_AS(match_mention("x", roster, "T1", kDate, 101), Error);
}

TEST_CASE("match threshold monotonicity") {
  auto f = fixture12::build();
  RosterIndex index(f.corpus.roster, false);
  std::mt19937_64 rng(5);
  const char* surfaces[] = {"Bruno Lind",  "Lind",        "Carla Stein",
                            "David Mayer", "Finn",        "Alice Holm",
                            "Stein Carla", "Dawid Meyer", "Erik Olsen"};
  for (const char* s : surfaces) {
    std::vector<size_t> sizes;
    for (int t : {100, 90, 75, 50, 0}) {
      sizes.push_back(index.match(s, "T1", kDate, t).size());
    }
    // Lowering the threshold never shrinks the match set.
    for (size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i - 1] <= sizes[i]);
  }
  (void)rng;
}

TEST_CASE("resolve_speech covers every status") {
  auto f = fixture12::build();
  auto resolutions = resolve_all(f.corpus, 100);
  REQUIRE(resolutions.size() == 12);
  for (const auto& r : resolutions) {
    CAPTURE(r.speech_id);
    CHECK(r.status == f.expected_status.at(r.speech_id));
    auto rel = f.expected_relation.find(r.speech_id);
    if (rel != f.expected_relation.end()) {
      REQUIRE(r.relation.has_value());
      CHECK(*r.relation == rel->second);
    } else {
      CHECK(!r.relation.has_value());
    }
    // Invariant: resolved <=> target set.
    CHECK((r.status == ResolutionStatus::kResolved) ==
          r.target_mp_id.has_value());
  }
}

TEST_CASE("mention_stats counts sum to the corpus size") {
  auto f = fixture12::build();
  auto resolutions = resolve_all(f.corpus, 100);
  auto stats = mention_stats(resolutions);
  CHECK(stats.all_speeches == 12);
  CHECK(stats.resolved == 6);
  CHECK(stats.resolved_pct == 50.0);
  size_t sum = 0;
  for (const auto& [status, count] : stats.by_status) sum += count;
  CHECK(sum == 12);
  CHECK(stats.by_status.at(ResolutionStatus::kMixedGroupsExcluded) == 2);
  CHECK(stats.by_status.at(ResolutionStatus::kMultipleMps) == 1);
  CHECK(stats.by_status.at(ResolutionStatus::kSelfMention) == 1);
  CHECK(stats.by_status.at(ResolutionStatus::kNoMention) == 1);
  CHECK(stats.by_status.at(ResolutionStatus::kNoMatch) == 1);
}

TEST_CASE("all-mention synthetic corpus resolves at 100.0 percent") {
  SynthConfig cfg;
  cfg.n_coalition = 6;
  cfg.n_opposition = 6;
  cfg.speeches_per_mp = 10;
  cfg.mention_probability = 1.0;
  auto synth = generate_synthetic(cfg, 3);
  auto resolutions = resolve_all(synth.corpus, 100);
  auto stats = mention_stats(resolutions);
  CHECK(stats.resolved == stats.all_speeches);
  CHECK(stats.resolved_pct == 100.0);
}

TEST_CASE("resolution is pure and thread-count independent") {
  auto f = fixture12::build();
  auto r1 = resolve_all(f.corpus, 100, false, 1);
  auto r4 = resolve_all(f.corpus, 100, false, 4);
  REQUIRE(r1.size() == r4.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].speech_id == r4[i].speech_id);
    CHECK(r1[i].status == r4[i].status);
    CHECK(r1[i].target_mp_id == r4[i].target_mp_id);
  }
}

TEST_CASE("sample_for_review determinism and bounds") {
  auto f = fixture12::build();
  auto resolutions = resolve_all(f.corpus, 100);

  auto s1 = sample_for_review(resolutions, 3, 99);
  auto s2 = sample_for_review(resolutions, 3, 99);
  REQUIRE(s1.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(s1[i].speech_id == s2[i].speech_id);
  // Distinct items.
  std::set<std::string> ids;
  for (const auto& r : s1) {
    CHECK(ids.insert(r.speech_id).second);
    CHECK(r.status == ResolutionStatus::kResolved);
  }

  auto s3 = sample_for_review(resolutions, 3, 100);
  bool same = true;
  for (size_t i = 0; i < 3; ++i)
    same = same && s1[i].speech_id == s3[i].speech_id;
  CHECK_FALSE(same);  // different seed, different draw (with 6 resolved)

  bool truncated = false;
  auto all = sample_for_review(resolutions, 50, 1, &truncated);
  CHECK(truncated);
  CHECK(all.size() == 6);
  CHECK_THROWS_AS(sample_for_review(resolutions, 0, 1), Error);
}

TEST_CASE("review csv shape") {
  auto f = fixture12::build();
  auto resolutions = resolve_all(f.corpus, 100);
  auto sample = sample_for_review(resolutions, 6, 42);
  std::ostringstream out;
  write_review_csv(sample, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "speech_id,surface,matched_mp_id,match_score,speaker_mp_id,relation");
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 6);
  // Resolved rows carry the matched surface and a 100 score.
  CHECK(out.str().find(",100,") != std::string::npos);
}

TEST_CASE("keep-diacritics mode changes matching") {
  std::vector<MpRecord> roster = {
      fixture12::mp("P1", "Łukasz Kowalski", Group::kCoalition)};
  // Folded: the diacritic-free form matches exactly.
  CHECK(match_mention("Lukasz Kowalski", roster, "T1", kDate, 100, false) ==
        std::vector<std::string>{"P1"});
  // Keeping diacritics, the stripped surface no longer equals the roster
  // form.
  CHECK(match_mention("Lukasz Kowalski", roster, "T1", kDate, 100, true)
            .empty());
  CHECK(match_mention("Łukasz Kowalski", roster, "T1", kDate, 100, true) ==
        std::vector<std::string>{"P1"});
}
