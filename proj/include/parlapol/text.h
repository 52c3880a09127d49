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

#ifndef PARLAPOL_TEXT_H_
#define PARLAPOL_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace parlapol {

// UTF-8 decode; invalid sequences become U+FFFD, one per offending byte.
std::u32string utf8_decode(std::string_view s);
void utf8_append(std::string& out, char32_t cp);
std::string utf8_encode(const std::u32string& s);

// Letter test over the Latin, Greek and Cyrillic ranges this library folds.
// Codepoints above the covered ranges are treated as letters so that names
// in unsupported scripts stay intact as single tokens.
bool is_letter(char32_t cp);

char32_t to_lower(char32_t cp);

// Canonical decomposition with combining marks removed, plus ASCII folds
// for Latin letters that have no decomposition (Ł, Ø, Đ, ß, ...).
// Appends one or two codepoints to `out`.
void fold_diacritics(char32_t cp, std::u32string& out);

// Maximal runs of letters, lowercased; `fold` additionally strips
// diacritics before tokenizing.
std::vector<std::string> letter_tokens(std::string_view text, bool fold);

// Whitespace-delimited word count (used for words-per-speech statistics).
size_t whitespace_word_count(std::string_view text);

}  // namespace parlapol

#endif  // PARLAPOL_TEXT_H_
