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

#include <iostream>

#include <CLI11.hpp>

#include "parlapol/commands.h"
#include "parlapol/error.h"

using parlapol::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Affective polarization analytics for parliamentary corpora"};
  app.set_config("--config", "",
                 "Flat key=value configuration file (keys match the long "
                 "option names)");

  RunConfig config;

  // Options live on the app so that a flat key=value config file binds
  // them; subcommands fall through to here.
  app.add_option("--parliament", config.parliament_code,
                 "Parliament code used in outputs");
  app.add_option("--out", config.out_dir, "Output directory");
  app.add_option("--seed", config.seed, "Seed for sampling and generation");
  app.add_option("--threads", config.threads, "Worker threads (0 = auto)");
  app.add_option("--corpus", config.corpus_path, "Speech JSONL path");
  app.add_option("--roster", config.roster_path, "Roster JSONL path");
  app.add_option("--scores", config.scores_path, "External score JSONL");
  app.add_option("--lexicon", config.lexicon_path,
                 "Fallback lexicon word list");
  app.add_option("--tei-dir", config.tei_dir,
                 "Directory of TEI-subset .xml files (ingest)");
  app.add_option("--term-id", config.term_id,
                 "Term id stamped on TEI speeches (ingest)");
  app.add_option("--date", config.date_override,
                 "Date stamped on TEI speeches (YYYY-MM-DD); otherwise "
                 "taken from file names (ingest)");
  app.add_option("--match-threshold", config.match_threshold,
                 "Token-set-ratio threshold (default 100)")
      ->check(CLI::Range(0, 100));
  app.add_option("--min-mentions", config.min_mentions,
                 "Mention speeches per side required for per-MP AP");
  app.add_option("--min-per-direction", config.min_per_direction,
                 "Speeches per direction required for reciprocity pairs");
  app.add_flag("--keep-diacritics", config.keep_diacritics,
               "Match names without stripping diacritics");
  app.add_flag("--per-term-profiles", config.per_term_profiles,
               "Emit per-term MP profiles instead of merged ones");
  app.add_option("--mp-aggregate", config.mp_aggregate,
                 "Per-MP aggregate: mean or median")
      ->check(CLI::IsMember({"mean", "median"}));
  app.add_option("--bins", config.histogram_bins,
                 "Histogram bin count over [0,5] (report)");
  app.add_option("--review-sample", config.review_sample,
                 "Export a random review sample of this size (mentions)");
  app.add_option("--synth-config", config.synth_config_path,
                 "Generator key=value config file (synth)");

  auto* ingest = app.add_subcommand(
      "ingest", "Parse TEI or validate JSONL, filter, write corpus.jsonl");
  auto* score =
      app.add_subcommand("score", "Join sentiment scores, write scored.jsonl");
  auto* mentions = app.add_subcommand(
      "mentions", "Resolve person mentions, write resolutions + stats");
  auto* analyze = app.add_subcommand(
      "analyze", "Run the full metric suite, write analysis.json");
  auto* report = app.add_subcommand("report", "Write plot-ready CSV bundle");
  auto* synth = app.add_subcommand(
      "synth", "Generate a synthetic corpus with planted effects");
  for (auto* sub : {ingest, score, mentions, analyze, report, synth})
    sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  try {
    if (app.got_subcommand(ingest)) {
      run_ingest(config, std::cerr);
    } else if (app.got_subcommand(score)) {
      run_score(config, std::cerr);
    } else if (app.got_subcommand(mentions)) {
      run_mentions(config, std::cerr);
    } else if (app.got_subcommand(analyze)) {
      run_analyze(config, std::cerr);
    } else if (app.got_subcommand(report)) {
      run_report(config, std::cerr);
    } else if (app.got_subcommand(synth)) {
      run_synth(config, std::cerr);
    }
  } catch (const parlapol::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parlapol::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
