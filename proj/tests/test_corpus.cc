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

#include <sstream>

#include "parlapol/error.h"
#include "parlapol/filter.h"
#include "parlapol/jsonl.h"
#include "parlapol/synth.h"
#include "parlapol/tei.h"
#include "parlapol/types.h"

using namespace parlapol;

namespace {

Date d(int y, int m, int day) { return Date{y, m, day}; }

MpRecord make_mp(const std::string& id, const std::string& name, Group g,
                 Role role = Role::kRegular, const std::string& term = "T1") {
  MpRecord mp;
  mp.mp_id = id;
  mp.full_name = name;
  mp.name_forms = {name};
  Affiliation a;
  a.term_id = term;
  a.party_id = "P";
  a.group = g;
  a.role = role;
  a.from_date = d(2021, 1, 1);
  a.to_date = d(2022, 12, 31);
  mp.affiliations.push_back(a);
  return mp;
}

Speech make_speech(const std::string& id, const std::string& speaker,
                   size_t n_sentences, const std::string& term = "T1",
                   std::optional<Date> date = Date{2021, 6, 1}) {
  Speech sp;
  sp.speech_id = id;
  if (!speaker.empty()) sp.speaker_mp_id = speaker;
  sp.term_id = term;
  sp.date = date;
  for (size_t i = 0; i < n_sentences; ++i)
    sp.sentences.push_back({"Sentence number " + std::to_string(i) + ".", {}});
  return sp;
}

}  // namespace

TEST_CASE("date parsing") {
  CHECK(parse_date("2021-02-28") == Date{2021, 2, 28});
  CHECK(parse_date("2020-02-29") == Date{2020, 2, 29});  // leap year
  CHECK(!parse_date("2021-02-29"));
  CHECK(!parse_date("2021-13-01"));
  CHECK(!parse_date("2021-1-01"));
  CHECK(!parse_date("202a-01-01"));
  CHECK(format_date(Date{2021, 6, 1}) == "2021-06-01");
  CHECK(civil_from_days(days_from_civil(Date{2022, 3, 17})) ==
        Date{2022, 3, 17});
  CHECK(Date{2021, 1, 2} < Date{2021, 1, 10});
}

TEST_CASE("roster validation") {
  std::vector<MpRecord> roster = {make_mp("m1", "Ada Ok", Group::kCoalition)};
  CHECK_NOTHROW(validate_roster(roster));

  SUBCASE("inverted interval") {
    roster[0].affiliations[0].from_date = d(2023, 1, 1);
    CHECK_THROWS_AS(validate_roster(roster), Error);
  }
  SUBCASE("overlap within one term") {
    Affiliation b = roster[0].affiliations[0];
    b.from_date = d(2022, 1, 1);
    roster[0].affiliations.push_back(b);
    CHECK_THROWS_AS(validate_roster(roster), Error);
  }
  SUBCASE("same interval in a different term is fine") {
    Affiliation b = roster[0].affiliations[0];
    b.term_id = "T2";
    roster[0].affiliations.push_back(b);
    CHECK_NOTHROW(validate_roster(roster));
  }
}

TEST_CASE("group_of picks the covering interval") {
  auto mp = make_mp("m1", "Ada Ok", Group::kOpposition, Role::kRegular, "T1");
  // Second term with a different group: an MP switching sides.
  Affiliation t2;
  t2.term_id = "T2";
  t2.party_id = "P2";
  t2.group = Group::kCoalition;
  t2.role = Role::kRegular;
  t2.from_date = d(2023, 1, 1);
  mp.affiliations.push_back(t2);
  std::vector<MpRecord> roster = {mp};

  CHECK(group_of(roster, "m1", "T1", d(2021, 6, 1)) == Group::kOpposition);
  CHECK(group_of(roster, "m1", "T2", d(2023, 6, 1)) == Group::kCoalition);
  // Interval ended before the query date.
  CHECK(!group_of(roster, "m1", "T1", d(2023, 6, 1)));
  CHECK(!group_of(roster, "nobody", "T1", d(2021, 6, 1)));
}

TEST_CASE("jsonl round trip") {
  Corpus corpus;
  corpus.parliament_code = "XX";
  corpus.roster = {make_mp("m1", "Ada Ok", Group::kCoalition),
                   make_mp("m2", "Bo Ek", Group::kOpposition)};
  corpus.roster[1].affiliations[0].to_date.reset();  // open interval
  auto sp1 = make_speech("s1", "m1", 5);
  sp1.sentences[2].text = "He answered Bo Ek loudly.";
  sp1.sentences[2].mentions.push_back({"Bo Ek", 12, 17});
  auto sp2 = make_speech("s2", "", 2, "T1", std::nullopt);
  corpus.speeches = {sp1, sp2};

  std::ostringstream so, ro;
  write_speeches_stream(corpus.speeches, so);
  write_roster_stream(corpus.roster, ro);

  std::istringstream si(so.str()), ri(ro.str());
  auto speeches = read_speeches_stream(si);
  auto roster = read_roster_stream(ri);

  REQUIRE(speeches.size() == 2);
  CHECK(speeches[0].speech_id == "s1");
  CHECK(speeches[0].speaker_mp_id == "m1");
  CHECK(speeches[0].date == Date{2021, 6, 1});
  REQUIRE(speeches[0].sentences.size() == 5);
  REQUIRE(speeches[0].sentences[2].mentions.size() == 1);
  CHECK(speeches[0].sentences[2].mentions[0].surface == "Bo Ek");
  CHECK(!speeches[1].speaker_mp_id);
  CHECK(!speeches[1].date);
  REQUIRE(roster.size() == 2);
  CHECK(!roster[1].affiliations[0].to_date);

  // Write -> read -> write is byte stable.
  std::ostringstream so2, ro2;
  write_speeches_stream(speeches, so2);
  write_roster_stream(roster, ro2);
  CHECK(so2.str() == so.str());
  CHECK(ro2.str() == ro.str());
}

TEST_CASE("jsonl error reporting") {
  SUBCASE("missing speech_id names the line and field") {
    std::istringstream in(
        R"({"speech_id":"a","term_id":"T1","sentences":[]})"
        "\n"
        R"({"term_id":"T1","sentences":[]})"
        "\n");
    try {
      read_speeches_stream(in);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()) == "line 2: missing field speech_id");
    }
  }
  SUBCASE("duplicate speech_id lists the id") {
    std::istringstream in(
        R"({"speech_id":"dup","term_id":"T1","sentences":[]})"
        "\n"
        R"({"speech_id":"dup","term_id":"T1","sentences":[]})"
        "\n");
    try {
      read_speeches_stream(in);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("dup") != std::string::npos);
      CHECK(e.code() == ErrorCode::kValidation);
    }
  }
  SUBCASE("bad mention span") {
    std::istringstream in(
        R"({"speech_id":"a","term_id":"T1","sentences":[{"text":"abc","mentions":[{"surface":"zz","start":0,"end":2}]}]})"
        "\n");
    CHECK_THROWS_AS(read_speeches_stream(in), Error);
  }
  SUBCASE("malformed json names the line") {
    std::istringstream in("{\"speech_id\":\n");
    try {
      read_speeches_stream(in);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      CHECK(std::string(e.what()).substr(0, 7) == "line 1:");
    }
  }
}

TEST_CASE("scores jsonl validation") {
  SUBCASE("boundaries accepted") {
    std::istringstream in(
        R"({"speech_id":"x","score":0.0})"
        "\n"
        R"({"speech_id":"y","score":5.0})"
        "\n");
    auto scores = read_scores_stream(in);
    CHECK(scores.at("x") == 0.0);
    CHECK(scores.at("y") == 5.0);
  }
  SUBCASE("out of range rejected with id") {
    std::istringstream in(R"({"speech_id":"x","score":5.1})"
                          "\n");
    try {
      read_scores_stream(in);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
  }
  SUBCASE("duplicates rejected") {
    std::istringstream in(
        R"({"speech_id":"x","score":1})"
        "\n"
        R"({"speech_id":"x","score":2})"
        "\n");
    CHECK_THROWS_AS(read_scores_stream(in), Error);
  }
}

TEST_CASE("tei parser maps the subset") {
  std::vector<MpRecord> roster = {make_mp("PM.Dupont", "Jean Dupont",
                                          Group::kCoalition)};
  const std::string xml = R"(<?xml version="1.0" encoding="UTF-8"?>
<TEI>
  <text><body>
    <u xml:id="u1" who="#PM.Dupont">
      <s>First sentence.</s>
      <s>Second with <name type="PER">Jean Dupont</name> inline.</s>
      <s>Third mentions <name type="LOC">Paris</name> only.</s>
      <s>Fourth.</s>
      <s>Fifth.</s>
    </u>
    <u xml:id="u2" who="#Unknown.Person"><s>Short.</s></u>
    <u xml:id="u3"/>
  </body></text>
</TEI>)";
  auto result = parse_tei_subset(xml, roster, "T1", Date{2021, 6, 1});
  REQUIRE(result.speeches.size() == 3);

  const Speech& u1 = result.speeches[0];
  CHECK(u1.speech_id == "u1");
  CHECK(u1.speaker_mp_id == "PM.Dupont");
  CHECK(u1.term_id == "T1");
  REQUIRE(u1.sentences.size() == 5);
  CHECK(u1.mention_count() == 1);
  const auto& m = u1.sentences[1].mentions[0];
  CHECK(u1.sentences[1].text == "Second with Jean Dupont inline.");
  CHECK(m.surface == "Jean Dupont");
  CHECK(u1.sentences[1].text.substr(m.start, m.end - m.start) == m.surface);
  // LOC entity ignored, its text kept.
  CHECK(u1.sentences[2].text == "Third mentions Paris only.");
  CHECK(u1.sentences[2].mentions.empty());

  // Unknown who: speech kept, speaker unset, warning recorded.
  CHECK(!result.speeches[1].speaker_mp_id);
  REQUIRE(!result.warnings.empty());
  CHECK(result.warnings[0].find("Unknown.Person") != std::string::npos);

  // Empty u: zero sentences.
  CHECK(result.speeches[2].sentences.empty());
}

TEST_CASE("tei parser handles entities and whitespace") {
  std::vector<MpRecord> roster;
  const std::string xml =
      "<root><u xml:id=\"u1\">\n"
      "  <s>\n    A &amp; B &#65;\n    <em>nested  text</em> end.\n  </s>\n"
      "</u></root>";
  auto result = parse_tei_subset(xml, roster, "T1", std::nullopt);
  REQUIRE(result.speeches.size() == 1);
  REQUIRE(result.speeches[0].sentences.size() == 1);
  CHECK(result.speeches[0].sentences[0].text == "A & B A nested text end.");
}

TEST_CASE("tei parser error positions") {
  std::vector<MpRecord> roster;
  SUBCASE("unclosed tag names the line") {
    const std::string xml = "<root>\n<u xml:id=\"u1\">\n<s>text</s>\n";
    try {
      parse_tei_subset(xml, roster, "T1", std::nullopt);
      FAIL("expected parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
      CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
  }
  SUBCASE("mismatched tags") {
    CHECK_THROWS_AS(
        parse_tei_subset("<a><b></a></b>", roster, "T1", std::nullopt),
        Error);
  }
  SUBCASE("PER name outside any sentence") {
    const std::string xml =
        "<root><u xml:id=\"u1\"><name type=\"PER\">X Y</name></u></root>";
    try {
      parse_tei_subset(xml, roster, "T1", std::nullopt);
      FAIL("expected validation error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kValidation);
    }
  }
  SUBCASE("u without xml:id") {
    CHECK_THROWS_AS(
        parse_tei_subset("<root><u><s>x</s></u></root>", roster, "T1",
                         std::nullopt),
        Error);
  }
  SUBCASE("unknown entity") {
    CHECK_THROWS_AS(
        parse_tei_subset("<root>&nope;</root>", roster, "T1", std::nullopt),
        Error);
  }
}

TEST_CASE("filter_speeches keeps long speeches by regular MPs") {
  Corpus corpus;
  corpus.parliament_code = "XX";
  corpus.roster = {
      make_mp("reg", "Ada Ok", Group::kCoalition, Role::kRegular),
      make_mp("chair", "Bo Ek", Group::kCoalition, Role::kChairperson),
      make_mp("guest", "Cy Om", Group::kOther, Role::kGuest),
  };
  corpus.speeches = {
      make_speech("s1", "reg", 4),       // too short (boundary below 5)
      make_speech("s2", "chair", 5),     // chairperson
      make_speech("s3", "reg", 5),       // retained (boundary)
      make_speech("s4", "", 5),          // no speaker
      make_speech("s5", "ghost", 5),     // unknown speaker
      make_speech("s6", "reg", 5, "T1", std::nullopt),  // no date
      make_speech("s7", "reg", 5, "T9"),                // no affiliation
      make_speech("s8", "guest", 6),                    // guest role
      make_speech("s9", "reg", 17),                     // retained
  };
  auto result = filter_speeches(corpus);
  CHECK(result.counts.input == 9);
  CHECK(result.counts.retained == 2);
  REQUIRE(result.corpus.speeches.size() == 2);
  CHECK(result.corpus.speeches[0].speech_id == "s3");
  CHECK(result.corpus.speeches[1].speech_id == "s9");
  CHECK(result.counts.dropped.at(DropReason::kTooShort) == 1);
  CHECK(result.counts.dropped.at(DropReason::kRole) == 2);
  CHECK(result.counts.dropped.at(DropReason::kNoSpeaker) == 1);
  CHECK(result.counts.dropped.at(DropReason::kUnknownSpeaker) == 1);
  CHECK(result.counts.dropped.at(DropReason::kNoDate) == 1);
  CHECK(result.counts.dropped.at(DropReason::kNoAffiliation) == 1);
  // Conservation: retained + drops = input.
  CHECK(result.counts.retained + result.counts.dropped_total() ==
        result.counts.input);

  // Idempotence.
  auto again = filter_speeches(result.corpus);
  CHECK(again.counts.retained == result.counts.retained);
  CHECK(again.counts.dropped_total() == 0);
  REQUIRE(again.corpus.speeches.size() == result.corpus.speeches.size());
  for (size_t i = 0; i < again.corpus.speeches.size(); ++i)
    CHECK(again.corpus.speeches[i].speech_id ==
          result.corpus.speeches[i].speech_id);
}

TEST_CASE("synthetic generator determinism and structure") {
  SynthConfig cfg;
  cfg.n_coalition = 4;
  cfg.n_opposition = 4;
  cfg.speeches_per_mp = 6;
  cfg.sentences_per_speech = 6;
  cfg.delta = 0.5;
  cfg.mention_probability = 0.7;
  cfg.noise = 0.1;

  auto a = generate_synthetic(cfg, 42);
  auto b = generate_synthetic(cfg, 42);
  std::ostringstream sa, sb, ra, rb;
  write_speeches_stream(a.corpus.speeches, sa);
  write_speeches_stream(b.corpus.speeches, sb);
  write_roster_stream(a.corpus.roster, ra);
  write_roster_stream(b.corpus.roster, rb);
  CHECK(sa.str() == sb.str());
  CHECK(ra.str() == rb.str());

  auto c = generate_synthetic(cfg, 43);
  std::ostringstream sc;
  write_speeches_stream(c.corpus.speeches, sc);
  CHECK(sa.str() != sc.str());

  CHECK(a.corpus.speeches.size() == 8 * 6);
  CHECK(a.scores.size() == a.corpus.speeches.size());
  for (const auto& [id, score] : a.scores) {
    CHECK(score >= 0.0);
    CHECK(score <= 5.0);
  }
  // Everything the generator emits survives the filter.
  auto filtered = filter_speeches(a.corpus);
  CHECK(filtered.counts.retained == a.corpus.speeches.size());
  CHECK(validate_corpus(a.corpus).empty());
}

TEST_CASE("synthetic config validation") {
  SynthConfig cfg;
  cfg.n_coalition = 0;
  cfg.n_opposition = 3;
  cfg.speeches_per_mp = 5;
  CHECK_THROWS_AS(generate_synthetic(cfg, 1), Error);

  auto parsed = SynthConfig::from_string(
      "# comment\nn_coalition = 3\nn_opposition=3\nspeeches_per_mp=4\n"
      "delta=0.8\nmention_probability=0.5\n");
  CHECK(parsed.n_coalition == 3);
  CHECK(parsed.delta == 0.8);
  CHECK_THROWS_AS(SynthConfig::from_string("nope=1\nn_coalition=1\n"), Error);
}

TEST_CASE("synthetic name forms resolve uniquely") {
  SynthConfig cfg;
  cfg.n_coalition = 25;
  cfg.n_opposition = 25;
  cfg.speeches_per_mp = 1;
  auto r = generate_synthetic(cfg, 7);
  std::set<std::string> names;
  for (const auto& mp : r.corpus.roster) {
    CHECK(names.insert(mp.full_name).second);
  }
}
