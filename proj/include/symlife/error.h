// Copyright 2026 The symlife Authors
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

#ifndef SYMLIFE_ERROR_H_
#define SYMLIFE_ERROR_H_

#include <stdexcept>
#include <string>

namespace symlife {

enum class ErrorCode {
  kInvalidArgument,
  kValidation,
  kInfeasible,
  kPrecondition,
  kNumerical,
  kParse,
};

// Single exception type for the library; the code lets the CLI map failures
// onto distinct exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symlife

#endif  // SYMLIFE_ERROR_H_
