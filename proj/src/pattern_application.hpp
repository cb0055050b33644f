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

#ifndef AXMINE_PATTERN_APPLICATION_HPP_
#define AXMINE_PATTERN_APPLICATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pattern_mining.hpp"

namespace axmine {

// Per-category restriction: every member carries the relation (property,
// value) or the type. Confidence is pattern confidence times the category's
// own score and is always above the applied threshold.
struct Axiom {
  Symbol category = kNoSymbol;
  PatternKind kind = PatternKind::kProperty;
  Symbol implication = kNoSymbol;  // property or type
  ObjectRef value;                 // relation axioms only
  double confidence = 0.0;

  bool operator==(const Axiom&) const = default;
};

// Variable tokens strictly between the pattern's prefix and postfix when
// both anchor token-exactly on the lowercased category name; nothing when
// the middle would be empty.
std::optional<std::vector<std::string>> match_textual(
    const std::vector<std::string>& category_tokens, const TextualPattern& textual);

// All axioms for one category at threshold tau: candidates from every
// matching pattern are pooled, then per property only the best value
// survives, and type axioms keep the best candidate plus any lower-ranked
// candidate whose type specialises an accepted one.
std::vector<Axiom> axioms_for_category(const ScoringContext& ctx,
                                       const PatternRegistry& registry,
                                       Symbol category, double tau);

// Applies every pattern to every category of the cleaned graph.
std::vector<Axiom> apply_patterns(const ScoringContext& ctx,
                                  const PatternRegistry& registry, double tau);

}  // namespace axmine

#endif  // AXMINE_PATTERN_APPLICATION_HPP_
