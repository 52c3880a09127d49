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

#ifndef PARLAPOL_ERROR_H_
#define PARLAPOL_ERROR_H_

#include <stdexcept>
#include <string>

namespace parlapol {

enum class ErrorCode {
  kParse,             // malformed input (XML, JSON, config syntax)
  kValidation,        // well-formed input violating a schema or invariant
  kConfig,            // bad configuration or usage
  kIo,                // file system failure
  kTooShortToTrim,    // speech has fewer than 3 sentences
  kDegenerateRanks,   // rank correlation on a constant vector
  kMissingGroup,      // a group comparison with an empty side
  kInsufficientPairs, // fewer than 3 mutually-mentioning MP pairs
  kEmptySample,       // statistic requested on an empty sample
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parlapol

#endif  // PARLAPOL_ERROR_H_
