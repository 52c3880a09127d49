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

#include "parlapol/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace parlapol {

namespace {

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

const Direction kDirections[] = {Direction::kC2C, Direction::kC2O,
                                 Direction::kO2O, Direction::kO2C};

}  // namespace

void JsonWriter::indent() {
  out_ << '\n';
  for (size_t i = 0; i < stack_.size(); ++i) out_ << "  ";
}

void JsonWriter::prefix() {
  if (stack_.empty()) return;
  Level& top = stack_.back();
  if (top.is_object) {
    if (top.key_pending) {
      top.key_pending = false;
      return;  // value follows "key: "
    }
  }
  if (!top.first) out_ << ',';
  top.first = false;
  indent();
}

std::string JsonWriter::escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  return out;
}

void JsonWriter::begin_object() {
  prefix();
  out_ << '{';
  stack_.push_back({true, true, false});
}

void JsonWriter::end_object() {
  const bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) indent();
  out_ << '}';
}

void JsonWriter::begin_array() {
  prefix();
  out_ << '[';
  stack_.push_back({false, true, false});
}

void JsonWriter::end_array() {
  const bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) indent();
  out_ << ']';
}

void JsonWriter::key(const std::string& k) {
  Level& top = stack_.back();
  if (!top.first) out_ << ',';
  top.first = false;
  indent();
  out_ << '"' << escape(k) << "\": ";
  top.key_pending = true;
}

void JsonWriter::value(const std::string& s) {
  prefix();
  out_ << '"' << escape(s) << '"';
}

void JsonWriter::value(const char* s) { value(std::string(s)); }

void JsonWriter::value(double d) {
  prefix();
  out_ << fmt4(d);
}

void JsonWriter::value_int(long long v) {
  prefix();
  out_ << v;
}

void JsonWriter::value(bool b) {
  prefix();
  out_ << (b ? "true" : "false");
}

void JsonWriter::value_null() {
  prefix();
  out_ << "null";
}

namespace {

void write_descriptive(JsonWriter& w, const std::vector<double>& xs) {
  const Descriptive d = describe(xs);
  w.begin_object();
  w.key("mean");
  w.value(d.mean);
  w.key("median");
  w.value(d.median);
  w.key("n");
  w.value_int(static_cast<long long>(d.n));
  for (int k = 0; k < 19; ++k) {
    char name[8];
    std::snprintf(name, sizeof(name), "q%02d", 5 * (k + 1));
    w.key(name);
    w.value(d.quantiles[k]);
  }
  w.end_object();
}

void write_ks(JsonWriter& w, const KsResult& ks) {
  w.begin_object();
  w.key("d");
  w.value(ks.d);
  w.key("n1");
  w.value_int(static_cast<long long>(ks.n1));
  w.key("n2");
  w.value_int(static_cast<long long>(ks.n2));
  w.key("p_value");
  w.value(ks.p_value);
  w.key("stars");
  w.value(stars(ks.p_value));
  w.end_object();
}

void write_corr(JsonWriter& w, const CorrOutcome& o) {
  if (!o.result) {
    w.value_null();
    return;
  }
  w.begin_object();
  w.key("n");
  w.value_int(static_cast<long long>(o.result->n));
  w.key("p_value");
  w.value(o.result->p_value);
  w.key("rho");
  w.value(o.result->rho);
  w.key("stars");
  w.value(stars(o.result->p_value));
  w.end_object();
}

}  // namespace

std::string render_analysis_json(const AnalysisBundle& b) {
  std::ostringstream out;
  JsonWriter w(out);
  w.begin_object();

  w.key("activity_correlations");
  w.begin_object();
  w.key("activity_vs_ap");
  write_corr(w, b.correlations.activity_vs_ap);
  w.key("activity_vs_sentiment");
  write_corr(w, b.correlations.activity_vs_sentiment);
  w.end_object();

  w.key("directed");
  w.begin_object();
  for (Direction d : {Direction::kC2C, Direction::kC2O}) {
    w.key(to_string(d));
    if (b.directed.of(d).empty())
      w.value_null();
    else
      write_descriptive(w, b.directed.of(d));
  }
  w.key("ks_c2c_vs_c2o");
  if (b.directed.ks_coalition)
    write_ks(w, *b.directed.ks_coalition);
  else
    w.value_null();
  w.key("ks_o2o_vs_o2c");
  if (b.directed.ks_opposition)
    write_ks(w, *b.directed.ks_opposition);
  else
    w.value_null();
  for (Direction d : {Direction::kO2C, Direction::kO2O}) {
    w.key(to_string(d));
    if (b.directed.of(d).empty())
      w.value_null();
    else
      write_descriptive(w, b.directed.of(d));
  }
  w.end_object();

  w.key("group_sentiment");
  w.begin_object();
  w.key("coalition");
  write_descriptive(w, b.groups.coalition);
  w.key("ks_coalition_vs_opposition");
  write_ks(w, b.groups.ks);
  w.key("opposition");
  write_descriptive(w, b.groups.opposition);
  w.end_object();

  w.key("mention_stats");
  w.begin_object();
  w.key("all_speeches");
  w.value_int(static_cast<long long>(b.mention_statistics.all_speeches));
  w.key("by_status");
  w.begin_object();
  for (ResolutionStatus s :
       {ResolutionStatus::kMixedGroupsExcluded, ResolutionStatus::kMultipleMps,
        ResolutionStatus::kNoMatch, ResolutionStatus::kNoMention,
        ResolutionStatus::kResolved, ResolutionStatus::kSelfMention}) {
    w.key(to_string(s));
    auto it = b.mention_statistics.by_status.find(s);
    w.value_int(it == b.mention_statistics.by_status.end()
                    ? 0
                    : static_cast<long long>(it->second));
  }
  w.end_object();
  w.key("resolved");
  w.value_int(static_cast<long long>(b.mention_statistics.resolved));
  w.key("resolved_pct");
  w.value(b.mention_statistics.resolved_pct);
  w.end_object();

  w.key("parameters");
  w.begin_object();
  w.key("keep_diacritics");
  w.value(b.keep_diacritics);
  w.key("match_threshold");
  w.value_int(b.match_threshold);
  w.key("min_mentions");
  w.value_int(static_cast<long long>(b.min_mentions));
  w.key("min_per_direction");
  w.value_int(b.min_per_direction);
  w.key("mp_aggregate");
  w.value(b.mp_aggregate);
  w.end_object();

  w.key("parliament_code");
  w.value(b.parliament_code);

  w.key("reciprocity");
  if (b.reciprocity) {
    w.begin_object();
    w.key("min_per_direction");
    w.value_int(b.reciprocity->min_per_direction);
    w.key("n_pairs");
    w.value_int(static_cast<long long>(b.reciprocity->n_pairs));
    w.key("p_value");
    w.value(b.reciprocity->p_value);
    w.key("rho");
    w.value(b.reciprocity->rho);
    w.key("stars");
    w.value(stars(b.reciprocity->p_value));
    w.end_object();
  } else {
    w.value_null();
  }

  w.key("summary");
  w.begin_object();
  w.key("filter");
  w.begin_object();
  {
    auto dropped = [&](DropReason r) -> long long {
      auto it = b.filter_counts.dropped.find(r);
      return it == b.filter_counts.dropped.end()
                 ? 0
                 : static_cast<long long>(it->second);
    };
    w.key("input");
    w.value_int(static_cast<long long>(b.filter_counts.input));
    w.key("no_affiliation");
    w.value_int(dropped(DropReason::kNoAffiliation));
    w.key("no_date");
    w.value_int(dropped(DropReason::kNoDate));
    w.key("no_speaker");
    w.value_int(dropped(DropReason::kNoSpeaker));
    w.key("retained");
    w.value_int(static_cast<long long>(b.filter_counts.retained));
    w.key("role");
    w.value_int(dropped(DropReason::kRole));
    w.key("too_short");
    w.value_int(dropped(DropReason::kTooShort));
    w.key("unknown_speaker");
    w.value_int(dropped(DropReason::kUnknownSpeaker));
  }
  w.end_object();
  w.key("mps_coalition");
  w.value_int(static_cast<long long>(b.mps_coalition));
  w.key("mps_opposition");
  w.value_int(static_cast<long long>(b.mps_opposition));
  w.key("profiles");
  w.value_int(static_cast<long long>(b.profiles.size()));
  w.key("speeches_coalition");
  w.value_int(static_cast<long long>(b.speeches_coalition));
  w.key("speeches_opposition");
  w.value_int(static_cast<long long>(b.speeches_opposition));
  w.key("speeches_total");
  w.value_int(static_cast<long long>(b.scored.size()));
  w.key("unscored_dropped");
  w.value_int(static_cast<long long>(b.unscored));
  w.key("words_per_speech");
  w.value(b.words_per_speech);
  w.end_object();

  w.end_object();
  out << '\n';
  return out.str();
}

void write_distributions_csv(const AnalysisBundle& b, std::ostream& out) {
  out << "direction,score\n";
  auto block = [&](const char* name, const std::vector<double>& xs) {
    for (double v : xs) out << name << ',' << fmt4(v) << '\n';
  };
  block("coalition", b.groups.coalition);
  block("opposition", b.groups.opposition);
  for (Direction d : kDirections) block(to_string(d), b.directed.of(d));
}

void write_histograms_csv(const AnalysisBundle& b, std::ostream& out,
                          int bins) {
  out << "direction,bin_left,bin_right,count\n";
  const double width = 5.0 / bins;
  auto block = [&](const char* name, const std::vector<double>& xs) {
    std::vector<size_t> counts(bins, 0);
    for (double v : xs) {
      int k = static_cast<int>(v / width);
      if (k >= bins) k = bins - 1;  // score 5.0 lands in the last bin
      if (k < 0) k = 0;
      ++counts[k];
    }
    for (int k = 0; k < bins; ++k) {
      out << name << ',' << fmt4(k * width) << ',' << fmt4((k + 1) * width)
          << ',' << counts[k] << '\n';
    }
  };
  block("coalition", b.groups.coalition);
  block("opposition", b.groups.opposition);
  for (Direction d : kDirections) block(to_string(d), b.directed.of(d));
}

void write_profiles_csv(const AnalysisBundle& b, std::ostream& out) {
  out << "mp_id,group,activity,mean_sentiment,n_in,n_out,in_group_mean,"
         "out_group_mean,affective_polarization\n";
  for (const auto& p : b.profiles) {
    out << p.mp_id << ',' << to_string(p.group) << ',' << p.activity << ','
        << fmt4(p.mean_sentiment) << ',' << p.n_in << ',' << p.n_out << ',';
    if (p.in_group_mean) out << fmt4(*p.in_group_mean);
    out << ',';
    if (p.out_group_mean) out << fmt4(*p.out_group_mean);
    out << ',';
    if (p.affective_polarization) out << fmt4(*p.affective_polarization);
    out << '\n';
  }
}

void write_reciprocity_pairs_csv(const AnalysisBundle& b, std::ostream& out) {
  out << "mp_a,mp_b,n_ab,n_ba,s_ab,s_ba\n";
  if (!b.reciprocity) return;
  for (const auto& p : b.reciprocity->pairs) {
    out << p.mp_a << ',' << p.mp_b << ',' << p.n_ab << ',' << p.n_ba << ','
        << fmt4(p.s_ab) << ',' << fmt4(p.s_ba) << '\n';
  }
}

void write_summary_csv(const AnalysisBundle& b, std::ostream& out) {
  out << "metric,value,stars\n";
  auto ks_rows = [&](const char* name, const KsResult& ks) {
    out << name << "_d," << fmt4(ks.d) << ",\n";
    out << name << "_p," << fmt4(ks.p_value) << ',' << stars(ks.p_value)
        << '\n';
  };
  ks_rows("ks_coalition_vs_opposition", b.groups.ks);
  if (b.directed.ks_coalition) ks_rows("ks_c2c_vs_c2o", *b.directed.ks_coalition);
  if (b.directed.ks_opposition)
    ks_rows("ks_o2o_vs_o2c", *b.directed.ks_opposition);
  auto corr_rows = [&](const char* name, const CorrOutcome& o) {
    if (!o.result) return;
    out << name << "_rho," << fmt4(o.result->rho) << ",\n";
    out << name << "_p," << fmt4(o.result->p_value) << ','
        << stars(o.result->p_value) << '\n';
  };
  corr_rows("activity_vs_sentiment", b.correlations.activity_vs_sentiment);
  corr_rows("activity_vs_ap", b.correlations.activity_vs_ap);
  if (b.reciprocity) {
    out << "reciprocity_rho," << fmt4(b.reciprocity->rho) << ",\n";
    out << "reciprocity_p," << fmt4(b.reciprocity->p_value) << ','
        << stars(b.reciprocity->p_value) << '\n';
    out << "reciprocity_n_pairs," << b.reciprocity->n_pairs << ",\n";
  }
  out << "median_coalition," << fmt4(describe(b.groups.coalition).median)
      << ",\n";
  out << "median_opposition," << fmt4(describe(b.groups.opposition).median)
      << ",\n";
}

void write_mention_stats_csv(const std::string& parliament_code,
                             const MentionStats& stats, std::ostream& out) {
  out << "parliament,all_speeches,speeches_with_mentions,percentage,"
         "no_mention,no_match,multiple_mps,self_mention,"
         "mixed_groups_excluded\n";
  auto count = [&](ResolutionStatus s) -> size_t {
    auto it = stats.by_status.find(s);
    return it == stats.by_status.end() ? 0 : it->second;
  };
  char pct[32];
  std::snprintf(pct, sizeof(pct), "%.1f", stats.resolved_pct);
  out << parliament_code << ',' << stats.all_speeches << ',' << stats.resolved
      << ',' << pct << ',' << count(ResolutionStatus::kNoMention) << ','
      << count(ResolutionStatus::kNoMatch) << ','
      << count(ResolutionStatus::kMultipleMps) << ','
      << count(ResolutionStatus::kSelfMention) << ','
      << count(ResolutionStatus::kMixedGroupsExcluded) << '\n';
}

}  // namespace parlapol
