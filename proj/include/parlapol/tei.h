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

#ifndef PARLAPOL_TEI_H_
#define PARLAPOL_TEI_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parlapol/types.h"

namespace parlapol {

struct TeiParseResult {
  std::vector<Speech> speeches;  // document order
  std::vector<std::string> warnings;
};

// Parses the TEI subset: one Speech per <u> (attributes xml:id, who), one
// Sentence per <s>, one mention per <name type="PER"> inside an <s>. All
// other elements are transparent (their character data still contributes
// to the enclosing sentence) but well-formedness is enforced; malformed
// XML raises kParse with a line:column position.
//
// Sentence text is whitespace-normalized (runs collapse to single spaces)
// and mention offsets index into the normalized text. The speaker is the
// `who` attribute with its leading '#' stripped, kept only when it names
// a roster MP; otherwise the speech is retained with no speaker and a
// warning is recorded. term_id and default_date come from the caller
// because the subset itself carries neither.
TeiParseResult parse_tei_subset(std::string_view xml,
                                const std::vector<MpRecord>& roster,
                                const std::string& term_id,
                                std::optional<Date> default_date);

}  // namespace parlapol

#endif  // PARLAPOL_TEI_H_
