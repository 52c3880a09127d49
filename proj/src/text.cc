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

#include "parlapol/text.h"

#include <algorithm>
#include <cctype>

namespace parlapol {

namespace {

#include "unicode_tables.inc"

// Combining diacritical mark blocks (stripped during folding).
bool is_combining_mark(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x0483 && cp <= 0x0489) ||
         (cp >= 0x1AB0 && cp <= 0x1AFF) || (cp >= 0x1DC0 && cp <= 0x1DFF) ||
         (cp >= 0x20D0 && cp <= 0x20FF) || (cp >= 0xFE20 && cp <= 0xFE2F);
}

const FoldEntry* find_fold(char32_t cp) {
  auto it = std::lower_bound(
      std::begin(kFoldTable), std::end(kFoldTable), cp,
      [](const FoldEntry& e, char32_t c) { return e.cp < c; });
  if (it != std::end(kFoldTable) && it->cp == cp) return &*it;
  return nullptr;
}

}  // namespace

std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  while (i < s.size()) {
    unsigned char c = p[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void utf8_append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8_encode(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) utf8_append(out, cp);
  return out;
}

bool is_letter(char32_t cp) {
  if (cp < 0x80)
    return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
  if (cp >= 0x0530) return !is_combining_mark(cp);
  auto it = std::lower_bound(
      std::begin(kLetterRanges), std::end(kLetterRanges), cp,
      [](const CpRange& r, char32_t c) { return r.hi < c; });
  return it != std::end(kLetterRanges) && cp >= it->lo;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  auto it = std::lower_bound(
      std::begin(kLowerTable), std::end(kLowerTable), cp,
      [](const CasePair& e, char32_t c) { return e.upper < c; });
  if (it != std::end(kLowerTable) && it->upper == cp) return it->lower;
  return cp;
}

void fold_diacritics(char32_t cp, std::u32string& out) {
  if (is_combining_mark(cp)) return;
  if (const FoldEntry* e = find_fold(cp)) {
    out.push_back(e->out0);
    if (e->out1 != 0) out.push_back(e->out1);
    return;
  }
  out.push_back(cp);
}

std::vector<std::string> letter_tokens(std::string_view text, bool fold) {
  std::u32string decoded = utf8_decode(text);
  std::u32string folded;
  if (fold) {
    folded.reserve(decoded.size());
    for (char32_t cp : decoded) fold_diacritics(cp, folded);
  } else {
    folded = std::move(decoded);
  }
  std::vector<std::string> tokens;
  std::string cur;
  for (char32_t cp : folded) {
    if (is_letter(cp)) {
      utf8_append(cur, to_lower(cp));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

size_t whitespace_word_count(std::string_view text) {
  size_t n = 0;
  bool in_word = false;
  for (char c : text) {
    bool ws = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!ws && !in_word) ++n;
    in_word = !ws;
  }
  return n;
}

}  // namespace parlapol
