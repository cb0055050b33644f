// Copyright 2026 The Axmine Authors
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

#ifndef AXMINE_ERROR_HPP_
#define AXMINE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace axmine {

// Failure classes; values match the C status codes and the CLI exit codes.
enum class Status {
  kOk = 0,
  kValidation = 1,
  kPrerequisite = 2,
  kIo = 3,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

}  // namespace axmine

#endif  // AXMINE_ERROR_HPP_
