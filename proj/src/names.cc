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

#include "parlapol/names.h"

#include <algorithm>
#include <cmath>

#include "parlapol/text.h"

namespace parlapol {

namespace {

// Weighted edit distance, substitution 2 / indel 1, two-row DP.
int edit_distance_sub2(const std::u32string& a, const std::u32string& b) {
  const size_t m = a.size(), n = b.size();
  std::vector<int> prev(n + 1), cur(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= n; ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 2);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::string join_sorted(const std::vector<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

std::vector<std::string> normalize_name(std::string_view s,
                                        bool keep_diacritics) {
  return letter_tokens(s, /*fold=*/!keep_diacritics);
}

int similarity_ratio(std::string_view a, std::string_view b) {
  std::u32string ua = utf8_decode(a);
  std::u32string ub = utf8_decode(b);
  const double total = static_cast<double>(ua.size() + ub.size());
  if (total == 0) return 100;
  const int dist = edit_distance_sub2(ua, ub);
  return static_cast<int>(std::lround(100.0 * (total - dist) / total));
}

int token_set_ratio_normalized(const std::set<std::string>& a,
                               const std::set<std::string>& b) {
  if (a == b) return 100;
  std::vector<std::string> inter, only_a, only_b;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(only_b));

  const std::string sect = join_sorted(inter);
  std::string x = sect, y = sect;
  if (!only_a.empty()) {
    if (!x.empty()) x.push_back(' ');
    x += join_sorted(only_a);
  }
  if (!only_b.empty()) {
    if (!y.empty()) y.push_back(' ');
    y += join_sorted(only_b);
  }

  int best = similarity_ratio(x, y);
  if (x != sect) best = std::max(best, similarity_ratio(sect, x));
  if (y != sect) best = std::max(best, similarity_ratio(sect, y));
  return best;
}

int token_set_ratio(std::string_view a, std::string_view b,
                    bool keep_diacritics) {
  auto ta = normalize_name(a, keep_diacritics);
  auto tb = normalize_name(b, keep_diacritics);
  return token_set_ratio_normalized(
      std::set<std::string>(ta.begin(), ta.end()),
      std::set<std::string>(tb.begin(), tb.end()));
}

}  // namespace parlapol
