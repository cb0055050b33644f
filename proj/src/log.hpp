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

#ifndef AXMINE_LOG_HPP_
#define AXMINE_LOG_HPP_

#include <cstdio>
#include <string>

namespace axmine {

// Diagnostics go to stderr; artifacts stay clean for diffing.
inline void log_warn(const std::string& msg) {
  std::fprintf(stderr, "[axmine] warning: %s\n", msg.c_str());
}

inline void log_info(const std::string& msg) {
  std::fprintf(stderr, "[axmine] %s\n", msg.c_str());
}

}  // namespace axmine

#endif  // AXMINE_LOG_HPP_
