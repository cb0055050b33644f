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

#ifndef AXMINE_SYMBOL_TABLE_HPP_
#define AXMINE_SYMBOL_TABLE_HPP_

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace axmine {

using Symbol = uint32_t;
inline constexpr Symbol kNoSymbol = std::numeric_limits<Symbol>::max();

// Interns IRIs, literal forms, category ids and phrases into dense ids.
// Backing storage is a deque so views handed out stay valid as the table
// grows. Ids are assigned in first-seen order, which is deterministic for
// a fixed input; anything user-visible is still sorted by string at
// emission time.
class SymbolTable {
 public:
  Symbol intern(std::string_view s);
  std::optional<Symbol> find(std::string_view s) const;
  std::string_view at(Symbol id) const { return strings_[id]; }
  size_t size() const { return strings_.size(); }

  // String order on interned ids, for deterministic output.
  bool less(Symbol a, Symbol b) const { return strings_[a] < strings_[b]; }

 private:
  std::deque<std::string> strings_;
  std::unordered_map<std::string_view, Symbol> index_;
};

}  // namespace axmine

#endif  // AXMINE_SYMBOL_TABLE_HPP_
