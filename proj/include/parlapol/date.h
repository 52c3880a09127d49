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

#ifndef PARLAPOL_DATE_H_
#define PARLAPOL_DATE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parlapol {

// Proleptic Gregorian calendar date. Comparison is chronological.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;
};

// Parses strict ISO-8601 "YYYY-MM-DD". Returns nullopt on any deviation
// (wrong length, non-digits, month/day out of range for the given year).
std::optional<Date> parse_date(std::string_view s);

// Formats as "YYYY-MM-DD", zero-padded.
std::string format_date(const Date& d);

// Days since 1970-01-01 (negative before). Used for deterministic date
// arithmetic in the synthetic generator.
int64_t days_from_civil(const Date& d);
Date civil_from_days(int64_t z);

bool is_valid_date(int year, int month, int day);

}  // namespace parlapol

#endif  // PARLAPOL_DATE_H_
