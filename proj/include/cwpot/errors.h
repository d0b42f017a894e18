// Copyright 2026 The cwpot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWPOT_ERRORS_H_
#define CWPOT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cwpot {

// Malformed or invalid user input. `path` names the offending field, e.g.
// "weights[1][0]"; empty when the whole document is at fault.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A construction produced something its own invariants rule out (a basis
// column outside the required kernel, a singular assembled basis, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cwpot

#endif  // CWPOT_ERRORS_H_
