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

#ifndef PARLAPOL_NAMES_H_
#define PARLAPOL_NAMES_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace parlapol {

// Lowercases, strips diacritics (unless keep_diacritics), and splits on any
// non-letter. "Jean-Luc Mélenchon" -> {"jean","luc","melenchon"}.
std::vector<std::string> normalize_name(std::string_view s,
                                        bool keep_diacritics = false);

// Similarity in [0,100]: round(100*(|a|+|b|-L)/(|a|+|b|)) where L is the
// edit distance with substitution weight 2 and insert/delete weight 1,
// measured over codepoints. ratio("","") is defined as 100.
int similarity_ratio(std::string_view a, std::string_view b);

// Token-set similarity in [0,100] over normalized token sets A and B.
// With I = sorted(A∩B), X = I ++ sorted(A∖B), Y = I ++ sorted(B∖A) joined
// by single spaces, the score is the max similarity_ratio over the pairs
// (I,X), (I,Y), (X,Y), skipping pairs whose two strings are identical so
// that 100 is reached exactly when the token sets are equal. Returns 100
// when A = B (including both empty).
int token_set_ratio(std::string_view a, std::string_view b,
                    bool keep_diacritics = false);

// Same computation starting from already-normalized token sets.
int token_set_ratio_normalized(const std::set<std::string>& a,
                               const std::set<std::string>& b);

}  // namespace parlapol

#endif  // PARLAPOL_NAMES_H_
