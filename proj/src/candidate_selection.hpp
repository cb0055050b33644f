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

#ifndef AXMINE_CANDIDATE_SELECTION_HPP_
#define AXMINE_CANDIDATE_SELECTION_HPP_

#include <string>
#include <vector>

#include "category_graph.hpp"
#include "symbol_table.hpp"

namespace axmine {

// A group of sibling categories whose names share a word-level prefix
// and/or postfix. For every member, prefix + variable + postfix
// reconstructs the member's name tokens exactly, and the variable part is
// never empty. Tokens keep their original case; lexicalisation lookups
// lowercase when the variable part is joined into a phrase.
struct CandidateMember {
  Symbol category = kNoSymbol;
  std::vector<std::string> variable;
};

struct CandidateSet {
  Symbol parent = kNoSymbol;
  std::vector<std::string> prefix;
  std::vector<std::string> postfix;
  std::vector<CandidateMember> members;  // ordered by category id

  // Lowercased shared part, prefix then postfix, space-joined.
  std::string shared_phrase_lower() const;
};

// Groups each parent's children greedily by maximal shared postfix token
// sequence, then the leftovers by maximal shared prefix; a child claimed by
// both affix kinds goes to the larger group (ties to postfix). Groups are
// then refined with the complementary shared affix when one exists. Sets
// smaller than min_size are dropped. Deterministic: parents by id, sets by
// shared tokens.
std::vector<CandidateSet> build_candidate_sets(const CategoryGraph& graph,
                                               int min_size);

// The stored variable part of one member; throws std::invalid_argument for
// a category that is not a member of the set.
const std::vector<std::string>& variable_part(const CandidateSet& set,
                                              Symbol member_category);

// Lowercased single-space phrase for lexicalisation lookups.
std::string variable_phrase_lower(const CandidateSet& set, Symbol member_category);

}  // namespace axmine

#endif  // AXMINE_CANDIDATE_SELECTION_HPP_
