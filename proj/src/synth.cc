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

#include "parlapol/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "parlapol/error.h"

namespace parlapol {

namespace {

// Hand-rolled draws on top of mt19937_64: the standard distributions are
// implementation-defined, which would break byte-identical output.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  const auto span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

double clamp_score(double v) { return std::clamp(v, 0.0, 5.0); }

const char* kFirstNames[] = {
    "Anna",  "Boris", "Clara", "David", "Elena", "Franz", "Greta", "Henrik",
    "Irena", "Jonas", "Karin", "Lukas", "Marta", "Niels", "Olga",  "Pavel",
    "Rosa",  "Stefan", "Teresa", "Viktor"};

const char* kSurnames[] = {
    "Andersen", "Bertrand", "Castel",  "Dalgaard", "Erling",  "Fabre",
    "Gorski",   "Hansen",   "Ibsen",   "Jensen",   "Kovacs",  "Lindgren",
    "Moreau",   "Nowak",    "Olsen",   "Petit",    "Radic",   "Sorensen",
    "Tomic",    "Vasquez"};

std::string letter_suffix(int n) {
  // Base-26 letters; always at least two so names never collide with the
  // bare surname pool.
  std::string s;
  for (int i = 0; i < 2 || n > 0; ++i) {
    s.push_back(static_cast<char>('a' + n % 26));
    n /= 26;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

const char* kFillerWords[] = {
    "chamber",  "debate",   "motion",   "session",  "committee", "budget",
    "policy",   "reform",   "question", "minister", "proposal",  "article",
    "reading",  "agenda",   "report",   "measure",  "amendment", "procedure",
    "vote",     "district", "matter",   "statement", "review",   "clause"};

std::string filler_sentence(std::mt19937_64& rng) {
  const int n = uniform_int(rng, 6, 10);
  std::string s = "The";
  for (int i = 0; i < n; ++i) {
    s += ' ';
    s += kFillerWords[rng() % (sizeof(kFillerWords) / sizeof(char*))];
  }
  s += '.';
  return s;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

SynthConfig SynthConfig::from_string(std::string_view text) {
  SynthConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kConfig, "line " + std::to_string(lineno) +
                                          ": expected key=value");
    const std::string key = strip(stripped.substr(0, eq));
    const std::string value = strip(stripped.substr(eq + 1));
    auto as_int = [&]() {
      try {
        return std::stoi(value);
      } catch (...) {
        throw Error(ErrorCode::kConfig, "key " + key + ": not an integer");
      }
    };
    auto as_double = [&]() {
      try {
        return std::stod(value);
      } catch (...) {
        throw Error(ErrorCode::kConfig, "key " + key + ": not a number");
      }
    };
    if (key == "parliament_code") cfg.parliament_code = value;
    else if (key == "term_id") cfg.term_id = value;
    else if (key == "n_coalition") cfg.n_coalition = as_int();
    else if (key == "n_opposition") cfg.n_opposition = as_int();
    else if (key == "n_other") cfg.n_other = as_int();
    else if (key == "speeches_per_mp") cfg.speeches_per_mp = as_int();
    else if (key == "speeches_min") cfg.speeches_min = as_int();
    else if (key == "speeches_max") cfg.speeches_max = as_int();
    else if (key == "sentences_per_speech") cfg.sentences_per_speech = as_int();
    else if (key == "base_mean_coalition") cfg.base_mean_coalition = as_double();
    else if (key == "base_mean_opposition") cfg.base_mean_opposition = as_double();
    else if (key == "delta") cfg.delta = as_double();
    else if (key == "mention_probability") cfg.mention_probability = as_double();
    else if (key == "noise") cfg.noise = as_double();
    else if (key == "activity_sentiment_slope")
      cfg.activity_sentiment_slope = as_double();
    else if (key == "reciprocity_pairs") cfg.reciprocity_pairs = as_int();
    else if (key == "reciprocity_coupling") cfg.reciprocity_coupling = as_double();
    else if (key == "reciprocity_baseline") cfg.reciprocity_baseline = as_double();
    else if (key == "reciprocity_mean_spread")
      cfg.reciprocity_mean_spread = as_double();
    else if (key == "reciprocity_speeches_per_direction")
      cfg.reciprocity_speeches_per_direction = as_int();
    else
      throw Error(ErrorCode::kConfig, "unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

SynthConfig SynthConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

void SynthConfig::validate() const {
  auto positive = [](int v, const char* name) {
    if (v <= 0)
      throw Error(ErrorCode::kConfig,
                  std::string(name) + " must be positive");
  };
  positive(n_coalition, "n_coalition");
  positive(n_opposition, "n_opposition");
  if (n_other < 0) throw Error(ErrorCode::kConfig, "n_other must be >= 0");
  if (speeches_max > 0) {
    positive(speeches_min, "speeches_min");
    if (speeches_max < speeches_min)
      throw Error(ErrorCode::kConfig, "speeches_max < speeches_min");
  } else {
    positive(speeches_per_mp, "speeches_per_mp");
  }
  positive(sentences_per_speech, "sentences_per_speech");
  if (mention_probability < 0.0 || mention_probability > 1.0)
    throw Error(ErrorCode::kConfig, "mention_probability must be in [0,1]");
  if (noise < 0.0) throw Error(ErrorCode::kConfig, "noise must be >= 0");
  if (reciprocity_pairs < 0)
    throw Error(ErrorCode::kConfig, "reciprocity_pairs must be >= 0");
  if (reciprocity_pairs > 0) {
    positive(reciprocity_speeches_per_direction,
             "reciprocity_speeches_per_direction");
    if (2 * reciprocity_pairs > n_coalition + n_opposition)
      throw Error(ErrorCode::kConfig,
                  "reciprocity_pairs needs 2*pairs <= coalition+opposition");
  }
}

SynthResult generate_synthetic(const SynthConfig& cfg, uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng(seed);
  SynthResult out;
  out.corpus.parliament_code = cfg.parliament_code;

  const Date term_start{2021, 1, 1};
  const Date term_end{2022, 12, 31};
  const int64_t window_days =
      days_from_civil(term_end) - days_from_civil(term_start) + 1;

  // Roster: coalition, then opposition, then independents.
  struct MpInfo {
    size_t index;
    Group group;
  };
  std::vector<MpInfo> mps;
  auto add_mp = [&](Group g, int k, const char* prefix) {
    const size_t index = out.corpus.roster.size();
    char idbuf[32];
    std::snprintf(idbuf, sizeof(idbuf), "MP-%s-%03d", prefix, k);
    MpRecord mp;
    mp.mp_id = idbuf;
    const std::string first = kFirstNames[index % 20];
    const std::string surname =
        std::string(kSurnames[(index / 20) % 20]) +
        letter_suffix(static_cast<int>(index));
    mp.full_name = first + " " + surname;
    mp.name_forms = {mp.full_name, surname + ", " + first};
    Affiliation aff;
    aff.term_id = cfg.term_id;
    aff.party_id = g == Group::kCoalition ? "P-GOV"
                   : g == Group::kOpposition ? "P-OPP"
                                             : "P-IND";
    aff.group = g;
    aff.role = Role::kRegular;
    aff.from_date = term_start;
    aff.to_date = term_end;
    mp.affiliations.push_back(aff);
    out.corpus.roster.push_back(std::move(mp));
    mps.push_back({index, g});
  };
  for (int k = 0; k < cfg.n_coalition; ++k) add_mp(Group::kCoalition, k, "C");
  for (int k = 0; k < cfg.n_opposition; ++k)
    add_mp(Group::kOpposition, k, "O");
  for (int k = 0; k < cfg.n_other; ++k) add_mp(Group::kOther, k, "X");

  const size_t n_co = static_cast<size_t>(cfg.n_coalition) + cfg.n_opposition;

  auto base_mean = [&](Group g) {
    switch (g) {
      case Group::kCoalition:
        return cfg.base_mean_coalition;
      case Group::kOpposition:
        return cfg.base_mean_opposition;
      case Group::kOther:
        return 0.5 * (cfg.base_mean_coalition + cfg.base_mean_opposition);
    }
    return 2.5;
  };

  // Per-MP activity and the activity-linked sentiment shift.
  std::vector<int> activity(mps.size());
  const bool ranged = cfg.speeches_max > 0;
  for (size_t i = 0; i < mps.size(); ++i) {
    activity[i] = ranged ? uniform_int(rng, cfg.speeches_min, cfg.speeches_max)
                         : cfg.speeches_per_mp;
  }
  std::vector<double> shift(mps.size(), 0.0);
  if (cfg.activity_sentiment_slope != 0.0 && ranged &&
      cfg.speeches_max > cfg.speeches_min) {
    const double mid = 0.5 * (cfg.speeches_min + cfg.speeches_max);
    const double half = 0.5 * (cfg.speeches_max - cfg.speeches_min);
    for (size_t i = 0; i < mps.size(); ++i) {
      shift[i] = cfg.activity_sentiment_slope * (activity[i] - mid) / half;
    }
  }
  for (size_t i = 0; i < mps.size(); ++i)
    out.mp_shift[out.corpus.roster[i].mp_id] = shift[i];

  // Reciprocity pairs drawn from the front of the coalition+opposition list.
  struct Pair {
    size_t a, b;
    double mu_ab, mu_ba;
  };
  std::vector<Pair> pairs;
  for (int p = 0; p < cfg.reciprocity_pairs; ++p) {
    const size_t a = 2 * static_cast<size_t>(p);
    const size_t b = a + 1;
    const double mu_ab = cfg.reciprocity_baseline +
                         cfg.reciprocity_mean_spread * standard_normal(rng);
    const double mu_ba = cfg.reciprocity_baseline +
                         cfg.reciprocity_coupling *
                             (mu_ab - cfg.reciprocity_baseline) +
                         cfg.noise * standard_normal(rng);
    pairs.push_back({a, b, mu_ab, mu_ba});
    out.pair_truth.push_back({out.corpus.roster[a].mp_id,
                              out.corpus.roster[b].mp_id, mu_ab, mu_ba});
  }

  int speech_counter = 0;
  auto next_speech = [&](size_t speaker_idx) {
    Speech sp;
    char idbuf[24];
    std::snprintf(idbuf, sizeof(idbuf), "S%06d", speech_counter);
    sp.speech_id = idbuf;
    sp.speaker_mp_id = out.corpus.roster[speaker_idx].mp_id;
    sp.term_id = cfg.term_id;
    sp.date = civil_from_days(days_from_civil(term_start) +
                              (speech_counter % window_days));
    ++speech_counter;
    return sp;
  };

  auto build_sentences = [&](Speech& sp, const std::string* mention_name) {
    const int n = cfg.sentences_per_speech;
    const int mention_at = n >= 3 ? 1 + static_cast<int>(rng() % (n - 2))
                                  : 0;  // keep off first/last when possible
    for (int s = 0; s < n; ++s) {
      Sentence sent;
      if (mention_name && s == mention_at) {
        const std::string prefix = "In reply to ";
        sent.text = prefix + *mention_name + " the member continued.";
        MentionSpan span;
        span.start = prefix.size();
        span.end = prefix.size() + mention_name->size();
        span.surface = *mention_name;
        sent.mentions.push_back(std::move(span));
      } else {
        sent.text = filler_sentence(rng);
      }
      sp.sentences.push_back(std::move(sent));
    }
  };

  auto record = [&](Speech sp, double score) {
    out.scores[sp.speech_id] = clamp_score(score);
    out.corpus.speeches.push_back(std::move(sp));
  };

  // Regular speeches.
  for (size_t i = 0; i < mps.size(); ++i) {
    const Group sg = mps[i].group;
    for (int k = 0; k < activity[i]; ++k) {
      Speech sp = next_speech(i);
      double mean = base_mean(sg) + shift[i];
      const std::string* mention_name = nullptr;
      std::string name_store;
      if (n_co >= 2 && uniform01(rng) < cfg.mention_probability) {
        // Target uniformly among coalition/opposition MPs other than self.
        size_t t = rng() % (n_co - (i < n_co ? 1 : 0));
        if (i < n_co && t >= i) ++t;
        const Group tg = mps[t].group;
        if (sg != Group::kOther && tg != sg) mean -= cfg.delta;
        name_store = out.corpus.roster[t].full_name;
        mention_name = &name_store;
      }
      build_sentences(sp, mention_name);
      record(std::move(sp), mean + cfg.noise * standard_normal(rng));
    }
  }

  // Paired speeches with coupled means.
  for (const auto& pr : pairs) {
    for (int k = 0; k < cfg.reciprocity_speeches_per_direction; ++k) {
      Speech sp = next_speech(pr.a);
      std::string name = out.corpus.roster[pr.b].full_name;
      build_sentences(sp, &name);
      record(std::move(sp), pr.mu_ab + cfg.noise * standard_normal(rng));
    }
    for (int k = 0; k < cfg.reciprocity_speeches_per_direction; ++k) {
      Speech sp = next_speech(pr.b);
      std::string name = out.corpus.roster[pr.a].full_name;
      build_sentences(sp, &name);
      record(std::move(sp), pr.mu_ba + cfg.noise * standard_normal(rng));
    }
  }

  return out;
}

}  // namespace parlapol
