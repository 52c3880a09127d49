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

#include "parlapol/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "parlapol/error.h"
#include "parlapol/jsonl.h"
#include "parlapol/sentiment.h"
#include "parlapol/synth.h"
#include "parlapol/tei.h"

namespace fs = std::filesystem;

namespace parlapol {

namespace {

using json = nlohmann::json;

void ensure_out_dir(const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec)
    throw Error(ErrorCode::kConfig,
                "cannot create output directory " + config.out_dir);
}

std::string out_path(const RunConfig& config, const std::string& name) {
  return (fs::path(config.out_dir) / name).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  return out;
}

void require_file(const std::string& path, const char* what) {
  if (path.empty())
    throw Error(ErrorCode::kConfig, std::string("missing ") + what + " path");
  if (!fs::exists(path))
    throw Error(ErrorCode::kConfig,
                std::string(what) + " file not found: " + path);
}

// Dates ride on the TEI file names (ParlaMint style: ..._2021-06-01...).
std::optional<Date> date_from_filename(const std::string& name) {
  for (size_t i = 0; i + 10 <= name.size(); ++i) {
    if (auto d = parse_date(std::string_view(name).substr(i, 10))) return d;
  }
  return std::nullopt;
}

Corpus load_corpus(const RunConfig& config, std::ostream& diag) {
  require_file(config.roster_path, "roster");
  require_file(config.corpus_path, "corpus");
  std::vector<std::string> warnings;
  Corpus corpus = read_corpus_jsonl(config.corpus_path, config.roster_path,
                                    config.parliament_code, &warnings);
  for (const auto& w : warnings) diag << "warning: " << w << '\n';
  return corpus;
}

MpAggregate aggregate_mode(const RunConfig& config) {
  if (config.mp_aggregate == "mean") return MpAggregate::kMean;
  if (config.mp_aggregate == "median") return MpAggregate::kMedian;
  throw Error(ErrorCode::kConfig,
              "mp_aggregate must be mean or median, got " +
                  config.mp_aggregate);
}

void validate_common(const RunConfig& config) {
  if (config.match_threshold < 0 || config.match_threshold > 100)
    throw Error(ErrorCode::kConfig, "match-threshold must be in [0,100]");
  if (config.min_mentions < 1)
    throw Error(ErrorCode::kConfig, "min-mentions must be >= 1");
  if (config.min_per_direction < 1)
    throw Error(ErrorCode::kConfig, "min-per-direction must be >= 1");
  if (config.histogram_bins < 1)
    throw Error(ErrorCode::kConfig, "histogram bins must be >= 1");
  if (config.threads < 0)
    throw Error(ErrorCode::kConfig, "threads must be >= 0");
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kConfig:
    case ErrorCode::kIo:
      return 2;
    default:
      return 1;
  }
}

IngestOutput run_ingest(const RunConfig& config, std::ostream& diag) {
  validate_common(config);
  const bool has_tei = !config.tei_dir.empty();
  const bool has_corpus = !config.corpus_path.empty();
  if (has_tei == has_corpus)
    throw Error(ErrorCode::kConfig,
                "ingest needs exactly one of --tei-dir or --corpus");
  require_file(config.roster_path, "roster");
  ensure_out_dir(config);

  Corpus corpus;
  corpus.parliament_code = config.parliament_code;
  corpus.roster = read_roster_jsonl(config.roster_path);
  std::vector<std::string> warnings;

  if (has_tei) {
    if (!fs::is_directory(config.tei_dir))
      throw Error(ErrorCode::kConfig,
                  "not a directory: " + config.tei_dir);
    std::optional<Date> override_date;
    if (!config.date_override.empty()) {
      override_date = parse_date(config.date_override);
      if (!override_date)
        throw Error(ErrorCode::kConfig,
                    "bad --date value: " + config.date_override);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(config.tei_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml")
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw Error(ErrorCode::kConfig,
                  "no .xml files in " + config.tei_dir);
    for (const auto& file : files) {
      std::ifstream in(file);
      if (!in) throw Error(ErrorCode::kIo, "cannot open " + file.string());
      std::ostringstream ss;
      ss << in.rdbuf();
      auto date = override_date ? override_date
                                : date_from_filename(file.filename().string());
      TeiParseResult parsed;
      try {
        parsed = parse_tei_subset(ss.str(), corpus.roster, config.term_id,
                                  date);
      } catch (const Error& e) {
        throw Error(e.code(), file.filename().string() + ": " + e.what());
      }
      for (auto& w : parsed.warnings)
        warnings.push_back(file.filename().string() + ": " + w);
      for (auto& sp : parsed.speeches) corpus.speeches.push_back(std::move(sp));
    }
    // Deterministic order regardless of how files split the speeches.
    std::stable_sort(corpus.speeches.begin(), corpus.speeches.end(),
                     [](const Speech& a, const Speech& b) {
                       return std::tie(a.term_id, a.date, a.speech_id) <
                              std::tie(b.term_id, b.date, b.speech_id);
                     });
    for (const auto& w : validate_corpus(corpus)) warnings.push_back(w);
  } else {
    require_file(config.corpus_path, "corpus");
    corpus.speeches = read_speeches_jsonl(config.corpus_path);
    for (const auto& w : validate_corpus(corpus)) warnings.push_back(w);
  }

  auto filtered = filter_speeches(corpus);

  IngestOutput out;
  out.counts = filtered.counts;
  out.warnings = warnings;
  out.corpus_out = out_path(config, "corpus.jsonl");
  write_speeches_jsonl(filtered.corpus.speeches, out.corpus_out);

  // Drop-reason counts as a small machine-readable sidecar.
  {
    json j;
    j["input"] = filtered.counts.input;
    j["retained"] = filtered.counts.retained;
    json drops;
    for (DropReason r :
         {DropReason::kTooShort, DropReason::kNoSpeaker,
          DropReason::kUnknownSpeaker, DropReason::kNoDate,
          DropReason::kNoAffiliation, DropReason::kRole}) {
      auto it = filtered.counts.dropped.find(r);
      drops[to_string(r)] = it == filtered.counts.dropped.end() ? 0 : it->second;
    }
    j["dropped"] = drops;
    auto f = open_out(out_path(config, "ingest_counts.json"));
    f << j.dump(2) << '\n';
  }

  for (const auto& w : warnings) diag << "warning: " << w << '\n';
  diag << "ingest: " << filtered.counts.retained << " of "
       << filtered.counts.input << " speeches retained\n";
  return out;
}

ScoreOutput run_score(const RunConfig& config, std::ostream& diag) {
  validate_common(config);
  if (config.scores_path.empty() && config.lexicon_path.empty())
    throw Error(ErrorCode::kConfig,
                "score needs --scores and/or --lexicon");
  // Scoring is defined over filtered speeches; re-filtering is a no-op on
  // an already filtered corpus.
  Corpus corpus = filter_speeches(load_corpus(config, diag)).corpus;
  ensure_out_dir(config);

  std::optional<std::map<std::string, double>> external;
  if (!config.scores_path.empty()) {
    require_file(config.scores_path, "scores");
    external = read_scores_jsonl(config.scores_path);
  }
  std::optional<Lexicon> lexicon;
  if (!config.lexicon_path.empty()) {
    require_file(config.lexicon_path, "lexicon");
    lexicon = load_lexicon(config.lexicon_path);
  }
  auto attach =
      attach_scores(corpus, external ? &*external : nullptr,
                    lexicon ? &*lexicon : nullptr, config.threads);

  ScoreOutput out;
  out.scored = attach.scored.size();
  out.unscored = attach.unscored;
  if (external) {
    std::set<std::string> ids;
    for (const auto& sp : corpus.speeches) ids.insert(sp.speech_id);
    for (const auto& [id, score] : *external) {
      if (!ids.count(id)) ++out.unmatched_external;
    }
    if (out.unmatched_external > 0)
      diag << "note: " << out.unmatched_external
           << " score entries match no speech\n";
  }
  out.scores_out = out_path(config, "scored.jsonl");
  auto f = open_out(out.scores_out);
  for (const auto& s : attach.scored) {
    json j;
    j["speech_id"] = s.speech->speech_id;
    j["score"] = s.score;
    j["source"] = to_string(s.source);
    f << j.dump() << '\n';
  }
  diag << "score: " << out.scored << " scored, " << out.unscored
       << " unscored\n";
  return out;
}

MentionsOutput run_mentions(const RunConfig& config, std::ostream& diag) {
  validate_common(config);
  Corpus corpus = load_corpus(config, diag);
  ensure_out_dir(config);
  // Resolution is defined over filtered speeches; re-filtering an already
  // filtered corpus is a no-op.
  auto filtered = filter_speeches(corpus);
  auto resolutions = resolve_all(filtered.corpus, config.match_threshold,
                                 config.keep_diacritics, config.threads);
  MentionsOutput out;
  out.stats = mention_stats(resolutions);

  out.resolutions_out = out_path(config, "resolutions.jsonl");
  {
    auto f = open_out(out.resolutions_out);
    for (const auto& r : resolutions) {
      json j;
      j["speech_id"] = r.speech_id;
      j["status"] = to_string(r.status);
      j["speaker_mp_id"] =
          r.speaker_mp_id ? json(*r.speaker_mp_id) : json(nullptr);
      j["target_mp_id"] =
          r.target_mp_id ? json(*r.target_mp_id) : json(nullptr);
      j["relation"] = r.relation ? json(to_string(*r.relation)) : json(nullptr);
      json cands = json::array();
      for (const auto& c : r.candidates) {
        json cj;
        cj["surface"] = c.surface;
        cj["mp_id"] = c.mp_id;
        cj["score"] = c.score;
        cands.push_back(std::move(cj));
      }
      j["candidates"] = std::move(cands);
      f << j.dump() << '\n';
    }
  }

  out.stats_out = out_path(config, "mention_stats.csv");
  {
    auto f = open_out(out.stats_out);
    write_mention_stats_csv(config.parliament_code, out.stats, f);
  }

  if (config.review_sample > 0) {
    bool truncated = false;
    auto sample = sample_for_review(
        resolutions, static_cast<size_t>(config.review_sample), config.seed,
        &truncated);
    if (truncated)
      diag << "warning: review sample truncated to " << sample.size()
           << " resolved speeches\n";
    out.review_out = out_path(config, "review_sample.csv");
    auto f = open_out(out.review_out);
    write_review_csv(sample, f);
  }

  diag << "mentions: " << out.stats.resolved << " of "
       << out.stats.all_speeches << " speeches resolved ("
       << out.stats.resolved_pct << "%)\n";
  return out;
}

AnalysisBundle build_analysis(const RunConfig& config, Corpus& corpus_storage,
                              std::ostream& diag) {
  validate_common(config);
  if (config.scores_path.empty() && config.lexicon_path.empty())
    throw Error(ErrorCode::kConfig,
                "analyze needs --scores and/or --lexicon");

  Corpus loaded = load_corpus(config, diag);
  auto filtered = filter_speeches(loaded);
  corpus_storage = std::move(filtered.corpus);

  std::optional<std::map<std::string, double>> external;
  if (!config.scores_path.empty()) {
    require_file(config.scores_path, "scores");
    external = read_scores_jsonl(config.scores_path);
  }
  std::optional<Lexicon> lexicon;
  if (!config.lexicon_path.empty()) {
    require_file(config.lexicon_path, "lexicon");
    lexicon = load_lexicon(config.lexicon_path);
  }

  AnalysisBundle b;
  b.parliament_code = config.parliament_code;
  b.filter_counts = filtered.counts;
  b.match_threshold = config.match_threshold;
  b.min_mentions = static_cast<size_t>(config.min_mentions);
  b.min_per_direction = config.min_per_direction;
  b.keep_diacritics = config.keep_diacritics;
  b.mp_aggregate = config.mp_aggregate;

  auto attach =
      attach_scores(corpus_storage, external ? &*external : nullptr,
                    lexicon ? &*lexicon : nullptr, config.threads);
  b.scored = std::move(attach.scored);
  b.unscored = attach.unscored;

  RosterLookup lookup(corpus_storage.roster);
  auto resolutions = resolve_all(corpus_storage, config.match_threshold,
                                 config.keep_diacritics, config.threads);
  // Stats over the scored view so every table refers to the same universe.
  std::vector<MentionResolution> scored_resolutions;
  {
    std::set<std::string> scored_ids;
    for (const auto& s : b.scored) scored_ids.insert(s.speech->speech_id);
    for (const auto& r : resolutions) {
      if (scored_ids.count(r.speech_id)) scored_resolutions.push_back(r);
    }
  }
  b.mention_statistics = mention_stats(scored_resolutions);
  auto by_id = index_resolutions(scored_resolutions);

  b.groups = group_distributions(b.scored, lookup);
  b.directed = directed_distributions(b.scored, by_id, lookup);
  b.profiles = mp_profiles(b.scored, by_id, lookup, b.min_mentions,
                           aggregate_mode(config), config.per_term_profiles);
  b.correlations = activity_correlations(b.profiles);
  try {
    b.reciprocity =
        reciprocity(b.scored, by_id, lookup, config.min_per_direction);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientPairs &&
        e.code() != ErrorCode::kDegenerateRanks)
      throw;
    b.reciprocity_error = e.what();
    diag << "note: reciprocity unavailable: " << e.what() << '\n';
  }

  // Table-1-style counters over the scored universe.
  std::set<std::string> mps_c, mps_o;
  size_t words = 0;
  for (const auto& s : b.scored) {
    words += s.speech->word_count();
    auto g = lookup.group_of(*s.speech->speaker_mp_id, s.speech->term_id,
                             *s.speech->date);
    if (!g) continue;
    if (*g == Group::kCoalition) {
      ++b.speeches_coalition;
      mps_c.insert(*s.speech->speaker_mp_id);
    } else if (*g == Group::kOpposition) {
      ++b.speeches_opposition;
      mps_o.insert(*s.speech->speaker_mp_id);
    }
  }
  b.mps_coalition = mps_c.size();
  b.mps_opposition = mps_o.size();
  b.words_per_speech =
      b.scored.empty() ? 0.0
                       : static_cast<double>(words) /
                             static_cast<double>(b.scored.size());
  return b;
}

std::string run_analyze(const RunConfig& config, std::ostream& diag) {
  Corpus corpus;
  AnalysisBundle bundle = build_analysis(config, corpus, diag);
  const std::string rendered = render_analysis_json(bundle);
  ensure_out_dir(config);
  auto f = open_out(out_path(config, "analysis.json"));
  f << rendered;
  diag << "analyze: wrote " << out_path(config, "analysis.json") << '\n';
  return rendered;
}

void run_report(const RunConfig& config, std::ostream& diag) {
  Corpus corpus;
  AnalysisBundle bundle = build_analysis(config, corpus, diag);
  ensure_out_dir(config);
  {
    auto f = open_out(out_path(config, "distributions.csv"));
    write_distributions_csv(bundle, f);
  }
  {
    auto f = open_out(out_path(config, "histograms.csv"));
    write_histograms_csv(bundle, f, config.histogram_bins);
  }
  {
    auto f = open_out(out_path(config, "profiles.csv"));
    write_profiles_csv(bundle, f);
  }
  {
    auto f = open_out(out_path(config, "reciprocity_pairs.csv"));
    write_reciprocity_pairs_csv(bundle, f);
  }
  {
    auto f = open_out(out_path(config, "summary.csv"));
    write_summary_csv(bundle, f);
  }
  diag << "report: wrote CSV bundle to " << config.out_dir << '\n';
}

void run_synth(const RunConfig& config, std::ostream& diag) {
  validate_common(config);
  require_file(config.synth_config_path, "synth config");
  SynthConfig synth_config = SynthConfig::from_file(config.synth_config_path);
  auto result = generate_synthetic(synth_config, config.seed);
  ensure_out_dir(config);
  write_speeches_jsonl(result.corpus.speeches,
                       out_path(config, "corpus.jsonl"));
  write_roster_jsonl(result.corpus.roster, out_path(config, "roster.jsonl"));
  write_scores_jsonl(result.scores, out_path(config, "scores.jsonl"));
  {
    json truth;
    truth["seed"] = config.seed;
    truth["parliament_code"] = result.corpus.parliament_code;
    truth["delta"] = synth_config.delta;
    truth["noise"] = synth_config.noise;
    truth["base_mean_coalition"] = synth_config.base_mean_coalition;
    truth["base_mean_opposition"] = synth_config.base_mean_opposition;
    truth["mention_probability"] = synth_config.mention_probability;
    truth["activity_sentiment_slope"] = synth_config.activity_sentiment_slope;
    truth["reciprocity_coupling"] = synth_config.reciprocity_coupling;
    json pairs = json::array();
    for (const auto& p : result.pair_truth) {
      json pj;
      pj["mp_a"] = p.mp_a;
      pj["mp_b"] = p.mp_b;
      pj["mu_ab"] = p.mu_ab;
      pj["mu_ba"] = p.mu_ba;
      pairs.push_back(std::move(pj));
    }
    truth["pairs"] = std::move(pairs);
    json shifts;
    for (const auto& [mp, s] : result.mp_shift) shifts[mp] = s;
    truth["mp_sentiment_shift"] = std::move(shifts);
    auto f = open_out(out_path(config, "truth.json"));
    f << truth.dump(2) << '\n';
  }
  diag << "synth: " << result.corpus.speeches.size() << " speeches, "
       << result.corpus.roster.size() << " MPs\n";
}

}  // namespace parlapol
