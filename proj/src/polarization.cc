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

#include "parlapol/polarization.h"

#include <algorithm>
#include <cmath>

#include "parlapol/error.h"

namespace parlapol {

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double aggregate_of(std::vector<double> v, MpAggregate how) {
  if (how == MpAggregate::kMean) return mean_of(v);
  std::sort(v.begin(), v.end());
  return quantile_sorted(v, 0.5);
}

std::optional<Group> speaker_group(const ScoredSpeech& s,
                                   const RosterLookup& lookup) {
  if (!s.speech->speaker_mp_id || !s.speech->date) return std::nullopt;
  return lookup.group_of(*s.speech->speaker_mp_id, s.speech->term_id,
                         *s.speech->date);
}

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::kC2C:
      return "c2c";
    case Direction::kC2O:
      return "c2o";
    case Direction::kO2O:
      return "o2o";
    case Direction::kO2C:
      return "o2c";
  }
  return "?";
}

std::map<std::string, const MentionResolution*> index_resolutions(
    const std::vector<MentionResolution>& resolutions) {
  std::map<std::string, const MentionResolution*> out;
  for (const auto& r : resolutions) out[r.speech_id] = &r;
  return out;
}

GroupScores group_distributions(const std::vector<ScoredSpeech>& scored,
                                const RosterLookup& lookup) {
  GroupScores out;
  for (const auto& s : scored) {
    const auto g = speaker_group(s, lookup);
    if (!g) continue;
    if (*g == Group::kCoalition) out.coalition.push_back(s.score);
    if (*g == Group::kOpposition) out.opposition.push_back(s.score);
  }
  if (out.coalition.empty())
    throw Error(ErrorCode::kMissingGroup, "no coalition speeches");
  if (out.opposition.empty())
    throw Error(ErrorCode::kMissingGroup, "no opposition speeches");
  out.ks = ks_two_sample(out.coalition, out.opposition);
  return out;
}

DirectedDistributions directed_distributions(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup) {
  DirectedDistributions out;
  for (const auto& s : scored) {
    auto it = resolutions.find(s.speech->speech_id);
    if (it == resolutions.end()) continue;
    const MentionResolution& r = *it->second;
    if (r.status != ResolutionStatus::kResolved || !r.relation) continue;
    const auto g = speaker_group(s, lookup);
    if (!g || *g == Group::kOther) continue;
    Direction d;
    if (*g == Group::kCoalition) {
      d = *r.relation == GroupRelation::kInGroup ? Direction::kC2C
                                                 : Direction::kC2O;
    } else {
      d = *r.relation == GroupRelation::kInGroup ? Direction::kO2O
                                                 : Direction::kO2C;
    }
    out.scores[static_cast<size_t>(d)].push_back(s.score);
  }
  if (!out.of(Direction::kC2C).empty() && !out.of(Direction::kC2O).empty())
    out.ks_coalition =
        ks_two_sample(out.of(Direction::kC2C), out.of(Direction::kC2O));
  if (!out.of(Direction::kO2O).empty() && !out.of(Direction::kO2C).empty())
    out.ks_opposition =
        ks_two_sample(out.of(Direction::kO2O), out.of(Direction::kO2C));
  return out;
}

std::vector<MpProfile> mp_profiles(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup, size_t min_mentions, MpAggregate aggregate,
    bool per_term) {
  struct Bucket {
    Group group = Group::kOther;
    std::vector<double> all;
    std::vector<double> in_group;
    std::vector<double> out_group;
  };
  // Keyed by (mp, term); merged later unless per_term.
  std::map<std::pair<std::string, std::string>, Bucket> buckets;

  for (const auto& s : scored) {
    if (!s.speech->speaker_mp_id) continue;
    const auto g = speaker_group(s, lookup);
    if (!g || *g == Group::kOther) continue;
    Bucket& b = buckets[{*s.speech->speaker_mp_id, s.speech->term_id}];
    b.group = *g;
    b.all.push_back(s.score);
    auto it = resolutions.find(s.speech->speech_id);
    if (it != resolutions.end() &&
        it->second->status == ResolutionStatus::kResolved &&
        it->second->relation) {
      if (*it->second->relation == GroupRelation::kInGroup)
        b.in_group.push_back(s.score);
      else
        b.out_group.push_back(s.score);
    }
  }

  // Merge terms per MP when a single parliament-level profile is wanted.
  std::map<std::string, Bucket> merged;
  if (!per_term) {
    std::map<std::string, std::pair<size_t, std::string>> dominant;
    for (auto& [key, b] : buckets) {
      Bucket& m = merged[key.first];
      m.all.insert(m.all.end(), b.all.begin(), b.all.end());
      m.in_group.insert(m.in_group.end(), b.in_group.begin(),
                        b.in_group.end());
      m.out_group.insert(m.out_group.end(), b.out_group.begin(),
                         b.out_group.end());
      // Group of the term with the most speeches (ties: later term id).
      auto& dom = dominant[key.first];
      if (b.all.size() > dom.first ||
          (b.all.size() == dom.first && key.second >= dom.second)) {
        dom = {b.all.size(), key.second};
        m.group = b.group;
      }
    }
  }

  std::vector<MpProfile> profiles;
  auto emit = [&](const std::string& mp_id, const std::string& term_id,
                  const Bucket& b) {
    MpProfile p;
    p.mp_id = mp_id;
    p.term_id = term_id;
    p.group = b.group;
    p.activity = b.all.size();
    p.mean_sentiment = aggregate_of(b.all, aggregate);
    p.n_in = b.in_group.size();
    p.n_out = b.out_group.size();
    if (p.n_in >= min_mentions && p.n_out >= min_mentions) {
      p.in_group_mean = aggregate_of(b.in_group, aggregate);
      p.out_group_mean = aggregate_of(b.out_group, aggregate);
      p.affective_polarization = *p.in_group_mean - *p.out_group_mean;
    }
    profiles.push_back(std::move(p));
  };

  if (per_term) {
    for (const auto& [key, b] : buckets) emit(key.first, key.second, b);
  } else {
    for (const auto& [mp_id, b] : merged) emit(mp_id, "", b);
  }
  // std::map iteration already sorts by key; keep the contract explicit.
  std::sort(profiles.begin(), profiles.end(),
            [](const MpProfile& a, const MpProfile& b) {
              return std::tie(a.mp_id, a.term_id) < std::tie(b.mp_id, b.term_id);
            });
  return profiles;
}

ActivityCorrelations activity_correlations(
    const std::vector<MpProfile>& profiles) {
  ActivityCorrelations out;
  std::vector<double> act, sent, act_ap, ap;
  for (const auto& p : profiles) {
    act.push_back(static_cast<double>(p.activity));
    sent.push_back(p.mean_sentiment);
    if (p.affective_polarization) {
      act_ap.push_back(static_cast<double>(p.activity));
      ap.push_back(*p.affective_polarization);
    }
  }
  auto run = [](const std::vector<double>& xs, const std::vector<double>& ys,
                const char* what) {
    CorrOutcome o;
    if (xs.size() < 3) {
      o.error = std::string("fewer than 3 profiles with ") + what;
      return o;
    }
    try {
      o.result = spearman(xs, ys);
    } catch (const Error& e) {
      o.error = e.what();
    }
    return o;
  };
  out.activity_vs_sentiment = run(act, sent, "sentiment");
  out.activity_vs_ap = run(act_ap, ap, "affective polarization");
  return out;
}

ReciprocityResult reciprocity(
    const std::vector<ScoredSpeech>& scored,
    const std::map<std::string, const MentionResolution*>& resolutions,
    const RosterLookup& lookup, int min_per_direction) {
  if (min_per_direction < 1)
    throw Error(ErrorCode::kConfig, "min_per_direction must be >= 1");

  // (speaker, target) -> scores, insertion over speech_id order.
  std::map<std::pair<std::string, std::string>, std::vector<double>> directed;
  for (const auto& s : scored) {
    auto it = resolutions.find(s.speech->speech_id);
    if (it == resolutions.end()) continue;
    const MentionResolution& r = *it->second;
    if (r.status != ResolutionStatus::kResolved) continue;
    const auto g = speaker_group(s, lookup);
    if (!g || *g == Group::kOther) continue;  // Other speakers excluded
    directed[{*s.speech->speaker_mp_id, *r.target_mp_id}].push_back(s.score);
  }

  ReciprocityResult out;
  out.min_per_direction = min_per_direction;
  const auto need = static_cast<size_t>(min_per_direction);
  for (const auto& [key, ab_scores] : directed) {
    const auto& [a, b] = key;
    if (a >= b) continue;  // visit each unordered pair once
    auto back = directed.find({b, a});
    if (back == directed.end()) continue;
    if (ab_scores.size() < need || back->second.size() < need) continue;
    ReciprocityPair pair;
    pair.mp_a = a;
    pair.mp_b = b;
    pair.n_ab = ab_scores.size();
    pair.n_ba = back->second.size();
    pair.s_ab = mean_of(ab_scores);
    pair.s_ba = mean_of(back->second);
    out.pairs.push_back(std::move(pair));
  }
  out.n_pairs = out.pairs.size();
  if (out.n_pairs < 3)
    throw Error(ErrorCode::kInsufficientPairs,
                "reciprocity needs at least 3 qualifying pairs, have " +
                    std::to_string(out.n_pairs));

  // Symmetric doubling makes the estimate invariant to pair orientation;
  // the p-value is computed against the unordered pair count.
  std::vector<double> xs, ys;
  xs.reserve(2 * out.n_pairs);
  ys.reserve(2 * out.n_pairs);
  for (const auto& p : out.pairs) {
    xs.push_back(p.s_ab);
    ys.push_back(p.s_ba);
    xs.push_back(p.s_ba);
    ys.push_back(p.s_ab);
  }
  out.rho = spearman_rho(xs, ys);
  if (std::fabs(out.rho) >= 1.0) {
    out.p_value = 0.0;
  } else {
    const double n = static_cast<double>(out.n_pairs);
    const double t =
        out.rho * std::sqrt((n - 2.0) / (1.0 - out.rho * out.rho));
    out.p_value = student_t_two_sided_p(t, n - 2.0);
  }
  return out;
}

}  // namespace parlapol
