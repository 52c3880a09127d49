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

#include "parlapol/mention.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "parlapol/error.h"
#include "parlapol/names.h"
#include "parlapol/parallel.h"

namespace parlapol {

namespace {

std::string set_key(const std::set<std::string>& tokens) {
  std::string key;
  for (const auto& t : tokens) {
    key += t;
    key.push_back('\x1f');
  }
  return key;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const char* to_string(ResolutionStatus s) {
  switch (s) {
    case ResolutionStatus::kResolved:
      return "resolved";
    case ResolutionStatus::kNoMention:
      return "no_mention";
    case ResolutionStatus::kNoMatch:
      return "no_match";
    case ResolutionStatus::kMultipleMps:
      return "multiple_mps";
    case ResolutionStatus::kSelfMention:
      return "self_mention";
    case ResolutionStatus::kMixedGroupsExcluded:
      return "mixed_groups_excluded";
  }
  return "unknown";
}

const char* to_string(GroupRelation r) {
  return r == GroupRelation::kInGroup ? "in_group" : "out_group";
}

RosterIndex::RosterIndex(const std::vector<MpRecord>& roster,
                         bool keep_diacritics)
    : keep_diacritics_(keep_diacritics) {
  for (const auto& mp : roster) {
    std::set<std::string> term_ids;
    for (const auto& aff : mp.affiliations) term_ids.insert(aff.term_id);

    std::vector<std::set<std::string>> forms;
    std::set<std::string> seen_keys;
    auto add_form = [&](const std::string& name) {
      auto toks = normalize_name(name, keep_diacritics);
      if (toks.empty()) return;
      std::set<std::string> s(toks.begin(), toks.end());
      if (seen_keys.insert(set_key(s)).second) forms.push_back(std::move(s));
    };
    add_form(mp.full_name);
    for (const auto& nf : mp.name_forms) add_form(nf);

    for (const auto& tid : term_ids) {
      TermIndex& ti = terms_[tid];
      ti.entries.push_back({&mp, forms});
      for (const auto& s : forms) {
        auto& bucket = ti.exact[set_key(s)];
        if (std::find(bucket.begin(), bucket.end(), &mp) == bucket.end())
          bucket.push_back(&mp);
      }
    }
  }
}

std::vector<RosterIndex::Match> RosterIndex::match(const std::string& surface,
                                                   const std::string& term_id,
                                                   const Date& date,
                                                   int threshold) const {
  auto term = terms_.find(term_id);
  if (term == terms_.end()) return {};

  auto active = [&](const MpRecord* mp) {
    for (const auto& aff : mp->affiliations) {
      if (aff.term_id == term_id && aff.contains(date)) return true;
    }
    return false;
  };

  auto toks = normalize_name(surface, keep_diacritics_);
  std::set<std::string> surface_set(toks.begin(), toks.end());
  std::vector<Match> out;

  if (threshold >= 100) {
    // 100 means token-set equality, so a hash probe suffices.
    auto it = term->second.exact.find(set_key(surface_set));
    if (it != term->second.exact.end()) {
      for (const MpRecord* mp : it->second) {
        if (active(mp)) out.push_back({mp->mp_id, 100});
      }
    }
  } else {
    for (const auto& entry : term->second.entries) {
      if (!active(entry.mp)) continue;
      int best = 0;
      for (const auto& form : entry.form_tokens) {
        best = std::max(best, token_set_ratio_normalized(surface_set, form));
        if (best == 100) break;
      }
      if (best >= threshold) out.push_back({entry.mp->mp_id, best});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Match& a, const Match& b) { return a.mp_id < b.mp_id; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Match& a, const Match& b) {
                          return a.mp_id == b.mp_id;
                        }),
            out.end());
  return out;
}

std::vector<std::string> match_mention(const std::string& surface,
                                       const std::vector<MpRecord>& roster,
                                       const std::string& term_id,
                                       const Date& date, int threshold,
                                       bool keep_diacritics) {
  if (threshold < 0 || threshold > 100)
    throw Error(ErrorCode::kConfig, "match threshold must be in [0,100]");
  RosterIndex index(roster, keep_diacritics);
  std::vector<std::string> ids;
  for (auto& m : index.match(surface, term_id, date, threshold))
    ids.push_back(std::move(m.mp_id));
  return ids;
}

MentionResolution resolve_speech(const Speech& speech,
                                 const RosterLookup& lookup,
                                 const RosterIndex& index, int threshold) {
  if (!speech.speaker_mp_id || !speech.date)
    throw Error(ErrorCode::kValidation,
                "resolve_speech: speech " + speech.speech_id +
                    " has no resolvable speaker or date");
  MentionResolution res;
  res.speech_id = speech.speech_id;
  res.speaker_mp_id = speech.speaker_mp_id;

  size_t span_count = 0;
  std::set<std::string> matched;  // ordered for deterministic candidates
  for (const auto& sent : speech.sentences) {
    for (const auto& span : sent.mentions) {
      ++span_count;
      for (auto& m :
           index.match(span.surface, speech.term_id, *speech.date,
                       threshold)) {
        if (matched.insert(m.mp_id).second) {
          // Keep the surface that first matched this MP for review exports.
          res.candidates.push_back({span.surface, m.mp_id, m.score});
        }
      }
    }
  }

  if (span_count == 0) {
    res.status = ResolutionStatus::kNoMention;
    return res;
  }
  if (matched.empty()) {
    res.status = ResolutionStatus::kNoMatch;
    return res;
  }

  // Mixed coalition+opposition matches are excluded before the
  // exactly-one-MP rule.
  bool has_coalition = false, has_opposition = false;
  for (const auto& mp_id : matched) {
    auto g = lookup.group_of(mp_id, speech.term_id, *speech.date);
    if (!g) continue;
    if (*g == Group::kCoalition) has_coalition = true;
    if (*g == Group::kOpposition) has_opposition = true;
  }
  if (has_coalition && has_opposition) {
    res.status = ResolutionStatus::kMixedGroupsExcluded;
    return res;
  }
  if (matched.size() > 1) {
    res.status = ResolutionStatus::kMultipleMps;
    return res;
  }
  const std::string& target = *matched.begin();
  if (target == *speech.speaker_mp_id) {
    res.status = ResolutionStatus::kSelfMention;
    return res;
  }
  res.status = ResolutionStatus::kResolved;
  res.target_mp_id = target;

  const auto speaker_group =
      lookup.group_of(*speech.speaker_mp_id, speech.term_id, *speech.date);
  const auto target_group =
      lookup.group_of(target, speech.term_id, *speech.date);
  auto comparative = [](std::optional<Group> g) {
    return g && (*g == Group::kCoalition || *g == Group::kOpposition);
  };
  if (comparative(speaker_group) && comparative(target_group)) {
    res.relation = (*speaker_group == *target_group)
                       ? GroupRelation::kInGroup
                       : GroupRelation::kOutGroup;
  }
  return res;
}

std::vector<MentionResolution> resolve_all(const Corpus& corpus,
                                           int threshold,
                                           bool keep_diacritics, int threads) {
  if (threshold < 0 || threshold > 100)
    throw Error(ErrorCode::kConfig, "match threshold must be in [0,100]");
  RosterLookup lookup(corpus.roster);
  RosterIndex index(corpus.roster, keep_diacritics);
  std::vector<MentionResolution> out(corpus.speeches.size());
  parallel_for(corpus.speeches.size(), threads, [&](size_t i) {
    out[i] = resolve_speech(corpus.speeches[i], lookup, index, threshold);
  });
  return out;
}

MentionStats mention_stats(const std::vector<MentionResolution>& resolutions) {
  MentionStats stats;
  stats.all_speeches = resolutions.size();
  for (const auto& r : resolutions) {
    ++stats.by_status[r.status];
    if (r.status == ResolutionStatus::kResolved) ++stats.resolved;
  }
  if (stats.all_speeches > 0) {
    const double pct =
        100.0 * static_cast<double>(stats.resolved) / stats.all_speeches;
    stats.resolved_pct = std::round(pct * 10.0) / 10.0;
  }
  return stats;
}

std::vector<MentionResolution> sample_for_review(
    const std::vector<MentionResolution>& resolutions, size_t n,
    uint64_t seed, bool* truncated) {
  if (n < 1) throw Error(ErrorCode::kConfig, "sample size must be >= 1");
  std::vector<const MentionResolution*> resolved;
  for (const auto& r : resolutions) {
    if (r.status == ResolutionStatus::kResolved) resolved.push_back(&r);
  }
  // Deterministic base order regardless of input order.
  std::sort(resolved.begin(), resolved.end(),
            [](const MentionResolution* a, const MentionResolution* b) {
              return a->speech_id < b->speech_id;
            });
  if (truncated) *truncated = n > resolved.size();
  const size_t take = std::min(n, resolved.size());
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates over the sorted list.
  for (size_t i = 0; i < take; ++i) {
    const size_t j = i + rng() % (resolved.size() - i);
    std::swap(resolved[i], resolved[j]);
  }
  std::vector<MentionResolution> out;
  out.reserve(take);
  for (size_t i = 0; i < take; ++i) out.push_back(*resolved[i]);
  return out;
}

void write_review_csv(const std::vector<MentionResolution>& sample,
                      std::ostream& out) {
  out << "speech_id,surface,matched_mp_id,match_score,speaker_mp_id,relation\n";
  for (const auto& r : sample) {
    const MentionCandidate* best = nullptr;
    for (const auto& c : r.candidates) {
      if (r.target_mp_id && c.mp_id == *r.target_mp_id &&
          (!best || c.score > best->score))
        best = &c;
    }
    out << csv_field(r.speech_id) << ','
        << csv_field(best ? best->surface : "") << ','
        << csv_field(r.target_mp_id.value_or("")) << ','
        << (best ? best->score : 0) << ','
        << csv_field(r.speaker_mp_id.value_or("")) << ','
        << (r.relation ? to_string(*r.relation) : "") << '\n';
  }
}

}  // namespace parlapol
